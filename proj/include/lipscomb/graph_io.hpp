#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "lipscomb/graph.hpp"
#include "lipscomb/inverse_limit.hpp"

namespace lipscomb {

// Graph files:
//
//   # comment
//   vertices: a b c
//   edge: a b
//
// Loops are implicit; "edge: a a" is accepted and ignored. Several
// `vertices:` lines are concatenated.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

// Canonical text: sorted vertices, then non-loop edges in index order.
std::string serialize_graph(const Graph& g);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

// Bond files list one "bond: source_vertex target_vertex" line per source vertex.
GraphMap parse_bond(std::string_view text, std::shared_ptr<const Graph> source,
                    std::shared_ptr<const Graph> target);
std::string serialize_bond(const GraphMap& m);

// A directory with level0.graph ... levelN.graph and bond1.bond ... bondN.bond,
// bond k mapping level k onto level k-1.
InverseSequence read_sequence_dir(const std::filesystem::path& dir);
void write_sequence_dir(const std::filesystem::path& dir, const InverseSequence& seq);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace lipscomb
