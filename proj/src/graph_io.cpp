#include "lipscomb/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "lipscomb/error.hpp"

namespace lipscomb {

namespace {

struct Line {
  std::size_t number;
  std::string key;
  std::vector<std::string> fields;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::string first;
    if (!(in >> first)) continue;
    auto colon = first.find(':');
    Line parsed{number, {}, {}};
    std::string rest;
    if (colon == std::string::npos) {
      throw InvalidInput("line " + std::to_string(number) + ": expected 'key:'");
    }
    parsed.key = first.substr(0, colon);
    if (colon + 1 < first.size()) parsed.fields.push_back(first.substr(colon + 1));
    while (in >> rest) parsed.fields.push_back(rest);
    out.push_back(std::move(parsed));
  }
  return out;
}

std::string where(const Line& l) { return "line " + std::to_string(l.number) + ": "; }

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Line& l : tokenize(text)) {
    if (l.key == "vertices") {
      labels.insert(labels.end(), l.fields.begin(), l.fields.end());
    } else if (l.key == "edge") {
      if (l.fields.size() != 2) throw InvalidInput(where(l) + "an edge has two endpoints");
      edges.emplace_back(l.fields[0], l.fields[1]);
    } else {
      throw InvalidInput(where(l) + "unknown key '" + l.key + "'");
    }
  }
  return Graph(std::move(labels), edges);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

std::string serialize_graph(const Graph& g) {
  for (const auto& l : g.labels())
    if (l.empty() || l.find_first_of(" \t\r\n#:") != std::string::npos)
      throw InvalidInput("label '" + l + "' cannot be written to a graph file");
  std::string out = "vertices:";
  for (const auto& l : g.labels()) out += " " + l;
  out += "\n";
  for (const auto& [u, v] : g.edges())
    if (u != v) out += "edge: " + g.label(u) + " " + g.label(v) + "\n";
  return out;
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << serialize_graph(g);
}

GraphMap parse_bond(std::string_view text, std::shared_ptr<const Graph> source,
                    std::shared_ptr<const Graph> target) {
  constexpr Vertex unset = static_cast<Vertex>(-1);
  std::vector<Vertex> assignment(source->vertex_count(), unset);
  for (const Line& l : tokenize(text)) {
    if (l.key != "bond") throw InvalidInput(where(l) + "unknown key '" + l.key + "'");
    if (l.fields.size() != 2) throw InvalidInput(where(l) + "bond needs a source and a target vertex");
    Vertex u = source->index_of(l.fields[0]);
    Vertex v = target->index_of(l.fields[1]);
    if (assignment[u] != unset && assignment[u] != v)
      throw InvalidInput(where(l) + "vertex " + l.fields[0] + " mapped twice");
    assignment[u] = v;
  }
  for (Vertex u = 0; u < assignment.size(); ++u)
    if (assignment[u] == unset) throw InvalidInput("vertex " + source->label(u) + " is not mapped");
  return GraphMap(std::move(source), std::move(target), std::move(assignment));
}

std::string serialize_bond(const GraphMap& m) {
  std::string out;
  for (Vertex u = 0; u < m.source().vertex_count(); ++u)
    out += "bond: " + m.source().label(u) + " " + m.target().label(m(u)) + "\n";
  return out;
}

InverseSequence read_sequence_dir(const std::filesystem::path& dir) {
  std::vector<std::shared_ptr<const Graph>> graphs;
  std::vector<GraphMap> bonds;
  for (std::size_t k = 0;; ++k) {
    auto path = dir / ("level" + std::to_string(k) + ".graph");
    if (!std::filesystem::exists(path)) break;
    graphs.push_back(std::make_shared<const Graph>(read_graph_file(path)));
    if (k > 0) {
      auto bond_path = dir / ("bond" + std::to_string(k) + ".bond");
      bonds.push_back(parse_bond(read_text_file(bond_path), graphs[k], graphs[k - 1]));
    }
  }
  if (graphs.empty()) throw InvalidInput("no level0.graph in " + dir.string());
  return InverseSequence(std::move(graphs), std::move(bonds));
}

void write_sequence_dir(const std::filesystem::path& dir, const InverseSequence& seq) {
  std::filesystem::create_directories(dir);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    write_graph_file(dir / ("level" + std::to_string(k) + ".graph"), seq.graph(k));
    if (k > 0) {
      std::ofstream out(dir / ("bond" + std::to_string(k) + ".bond"), std::ios::binary);
      out << serialize_bond(seq.bonds()[k - 1]);
    }
  }
}

}  // namespace lipscomb
