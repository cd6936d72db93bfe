#include "lipscomb/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <new>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lipscomb/embedding.hpp"
#include "lipscomb/error.hpp"
#include "lipscomb/export.hpp"
#include "lipscomb/graph_io.hpp"
#include "lipscomb/ifs.hpp"
#include "lipscomb/inverse_limit.hpp"
#include "lipscomb/topology.hpp"
#include "lipscomb/word.hpp"

namespace lipscomb {

namespace {

std::size_t parse_count(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  unsigned long long v = 0;
  bool ok = !value.empty() && value.find_first_not_of("0123456789") == std::string::npos;
  if (ok) {
    try {
      v = std::stoull(value, &used);
    } catch (const std::exception&) {
      ok = false;
    }
  }
  if (!ok || used != value.size()) throw InvalidInput(key + ": expected a non-negative integer, got '" + value + "'");
  return static_cast<std::size_t>(v);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct Flags {
  std::optional<std::string> config;
  std::optional<std::string> graph;
  std::optional<std::string> z;
  std::optional<std::size_t> depth;
  std::optional<std::string> epsilon;
  std::optional<std::string> format;
  std::optional<std::size_t> point_cap;
  std::optional<unsigned> threads;
  std::optional<std::string> out;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "key = value file; flags take precedence");
  sub->add_option("--graph", f.graph, "graph file");
  sub->add_option("--z", f.z, "vertex whose coordinate is dropped");
  sub->add_option("--depth", f.depth, "iteration depth");
  sub->add_option("--epsilon", f.epsilon, "override for the connectivity epsilon");
  sub->add_option("--format", f.format, "csv, json, svg or text");
  sub->add_option("--point-cap", f.point_cap, "maximum cloud size");
  sub->add_option("--threads", f.threads, "worker threads for cloud iteration");
  sub->add_option("--out", f.out, "output file (default: stdout)");
}

RunConfig resolve(const Flags& f) {
  RunConfig cfg;
  if (auto cap = point_cap_from_env()) cfg.point_cap = *cap;
  if (f.config) apply_config_text(cfg, read_text_file(*f.config));
  if (f.graph) cfg.graph_path = *f.graph;
  if (f.z) cfg.z = *f.z;
  if (f.depth) cfg.depth = *f.depth;
  if (f.epsilon) cfg.epsilon = parse_rational(*f.epsilon);
  if (f.format) cfg.format = *f.format;
  if (f.point_cap) cfg.point_cap = *f.point_cap;
  if (f.threads) cfg.threads = *f.threads;
  cfg.validate();
  return cfg;
}

Graph load_graph(const RunConfig& cfg) {
  if (cfg.graph_path.empty()) throw InvalidInput("no graph given (--graph or 'graph =' in the config file)");
  return read_graph_file(cfg.graph_path);
}

EmbeddingConfig embedding_config(const RunConfig& cfg) {
  Graph g = load_graph(cfg);
  if (g.vertex_count() < 2) throw InvalidInput("the embedding needs at least two vertices");
  Symbol z = 0;
  if (cfg.z) {
    if (!g.has_vertex(*cfg.z)) throw InvalidInput("z = '" + *cfg.z + "' is not a vertex of the graph");
    z = g.index_of(*cfg.z);
  }
  return EmbeddingConfig(std::move(g), z);
}

IterationOptions iteration_options(const RunConfig& cfg) {
  return IterationOptions{cfg.point_cap, cfg.threads};
}

void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& content) {
  if (!path) {
    out << content;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw InvalidInput("cannot write " + *path);
  file << content;
}

std::string decimal17(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", to_double(q));
  return buf;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string symbols_text(const Graph& g, const std::vector<Symbol>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + g.label(s[i]);
  return out;
}

// "fixed", or points separated by ';' with comma-separated coordinates.
PointCloud seed_cloud(const IFS& system, const std::string& text) {
  if (text == "fixed") return fixed_point_seed(system);
  std::vector<ExactPoint> points;
  std::stringstream list(text);
  std::string item;
  while (std::getline(list, item, ';')) {
    if (trim(item).empty()) continue;
    ExactPoint p;
    std::stringstream coords(item);
    std::string c;
    while (std::getline(coords, c, ',')) p.push_back(parse_rational(trim(c)));
    if (p.size() != system.dimension())
      throw InvalidInput("seed point '" + trim(item) + "' needs " + std::to_string(system.dimension()) + " coordinates");
    Rational sum = 0;
    for (const auto& x : p) {
      if (sgn(x) < 0) throw InvalidInput("seed point '" + trim(item) + "' has a negative coordinate");
      sum += x;
    }
    if (sum > 1) throw InvalidInput("seed point '" + trim(item) + "' lies outside the simplex");
    points.push_back(std::move(p));
  }
  if (points.empty()) throw InvalidInput("empty seed");
  return PointCloud::from_points(system.dimension(), points);
}

std::string render_cloud(const EmbeddingConfig& ec, const PointCloud& cloud, const std::string& format,
                         const SvgOptions& svg) {
  if (format == "csv") return to_csv(ec, cloud);
  if (format == "json") return to_json(ec, cloud);
  if (format == "svg") return render_svg(cloud, svg);
  return to_text(ec, cloud);
}

int connectivity_command(const RunConfig& cfg, const Flags& f, std::ostream& out) {
  EmbeddingConfig ec = embedding_config(cfg);
  std::optional<Rational> eps_sq;
  if (cfg.epsilon) eps_sq = *cfg.epsilon * *cfg.epsilon;
  ConnectivityReport r = connectivity_verdict(ec, cfg.depth, iteration_options(cfg), eps_sq);
  const Graph& g = ec.graph();
  const bool local = local_connectedness_verdict(g) == LocalVerdict::connected_locally_arcwise;
  std::string text;
  if (cfg.format == "json") {
    nlohmann::json doc;
    doc["graph_connected"] = r.graph_connected;
    doc["verdict"] = r.verdict == Verdict::connected ? "connected" : "disconnected";
    doc["connected_locally_arcwise"] = local;
    if (r.epsilon) {
      doc["depth"] = r.epsilon->depth;
      doc["epsilon_squared"] = to_string(r.epsilon->eps_squared);
      doc["points"] = r.epsilon->point_count;
      doc["components"] = r.epsilon->component_count;
    }
    if (r.separation) {
      std::vector<std::string> s, t;
      for (Symbol a : r.separation->side_s) s.push_back(g.label(a));
      for (Symbol a : r.separation->side_t) t.push_back(g.label(a));
      doc["depth"] = r.separation->depth;
      doc["side_s"] = s;
      doc["side_t"] = t;
      doc["box_gap_squared"] = to_string(r.separation->box_gap_squared);
      doc["cloud_gap_squared"] = to_string(r.separation->cloud_gap_squared);
    }
    text = doc.dump() + "\n";
  } else {
    std::ostringstream s;
    s << "graph_connected: " << bool_text(r.graph_connected) << "\n"
      << "verdict: " << (r.verdict == Verdict::connected ? "connected" : "disconnected") << "\n"
      << "connected_locally_arcwise: " << bool_text(local) << "\n";
    if (r.epsilon) {
      s << "depth: " << r.epsilon->depth << "\n"
        << "epsilon_squared: " << to_string(r.epsilon->eps_squared) << "\n"
        << "points: " << r.epsilon->point_count << "\n"
        << "components: " << r.epsilon->component_count << "\n";
    }
    if (r.separation) {
      s << "depth: " << r.separation->depth << "\n"
        << "side_s: " << symbols_text(g, r.separation->side_s) << "\n"
        << "side_t: " << symbols_text(g, r.separation->side_t) << "\n"
        << "box_gap_squared: " << to_string(r.separation->box_gap_squared) << "\n"
        << "cloud_gap_squared: " << to_string(r.separation->cloud_gap_squared) << "\n";
    }
    text = s.str();
  }
  emit(out, f.out, text);
  return r.verdict == Verdict::connected ? exit_ok : exit_disconnected;
}

int pieces_command(const RunConfig& cfg, const Flags& f, const std::optional<std::string>& i_label,
                   const std::optional<std::string>& j_label, std::ostream& out) {
  EmbeddingConfig ec = embedding_config(cfg);
  const Graph& g = ec.graph();
  std::vector<std::pair<Symbol, Symbol>> pairs;
  if (i_label || j_label) {
    if (!i_label || !j_label) throw InvalidInput("--i and --j go together");
    pairs.emplace_back(g.index_of(*i_label), g.index_of(*j_label));
  } else {
    for (Symbol i = 0; i < g.vertex_count(); ++i)
      for (Symbol j = i + 1; j < g.vertex_count(); ++j) pairs.emplace_back(i, j);
  }
  std::string text;
  for (auto [i, j] : pairs) {
    PieceIntersection p = piece_intersection(ec, i, j, cfg.depth, iteration_options(cfg));
    text += g.label(i) + " " + g.label(j);
    if (p.point) {
      text += " meet " + format_point(ec, *p.point) + " in_piece_i=" + bool_text(p.in_piece_i) +
              " in_piece_j=" + bool_text(p.in_piece_j) + "\n";
    } else {
      text += " apart gap_squared>=" + to_string(p.gap_squared) + "\n";
    }
  }
  emit(out, f.out, text);
  return exit_ok;
}

int levels_command(const RunConfig& cfg, const Flags& f, std::size_t max_level,
                   const std::optional<std::size_t>& dump, const std::optional<std::string>& sequence,
                   std::ostream& out) {
  std::string text;
  if (sequence) {
    InverseSequence seq = read_sequence_dir(*sequence);
    auto c = quotient_connected_verdict(seq);
    auto l = quotient_locally_connected_verdict(seq);
    text += "graphs: " + std::to_string(seq.size()) + "\n";
    text += "bonds_proper: true\n";
    text += "quotient_connected: " + bool_text(c.connected) + "\n";
    text += "fibers_connected_from: " + (l.from_level ? std::to_string(*l.from_level) : std::string("none")) + "\n";
    text += "assumes_transitive: true\n";
    emit(out, f.out, text);
    return exit_ok;
  }
  Graph g = load_graph(cfg);
  if (dump) {
    LevelGraph lg = level_graph(g, *dump, cfg.point_cap);
    emit(out, f.out, serialize_graph(lg.graph()));
    return exit_ok;
  }
  bool all_ok = true;
  nlohmann::json report = nlohmann::json::array();
  for (const LevelCheck& c : check_level_chain(g, max_level)) {
    std::size_t vertices = level_graph(g, c.level, cfg.point_cap).graph().vertex_count();
    std::size_t edges = level_edge_count(g, c.level);
    text += "level " + std::to_string(c.level) + ": vertices=" + std::to_string(vertices) +
            " edges=" + std::to_string(edges) + " proper=" + bool_text(c.proper_epimorphism) +
            " fibers_isomorphic=" + bool_text(c.fibers_isomorphic) + " connected=" + bool_text(c.level_connected) + "\n";
    report.push_back({{"level", c.level},
                      {"vertices", vertices},
                      {"edges", edges},
                      {"proper_epimorphism", c.proper_epimorphism},
                      {"fibers_isomorphic", c.fibers_isomorphic},
                      {"connected", c.level_connected},
                      {"connectivity_matches", c.connectivity_matches}});
    all_ok = all_ok && c.ok();
  }
  if (cfg.format == "json") text = report.dump() + "\n";
  emit(out, f.out, text);
  if (!all_ok) throw InvariantViolation("level chain check failed");
  return exit_ok;
}

}  // namespace

void RunConfig::validate() const {
  if (point_cap < 1) throw InvalidInput("point cap must be at least 1");
  if (threads < 1) throw InvalidInput("thread count must be at least 1");
  if (format != "csv" && format != "json" && format != "svg" && format != "text")
    throw InvalidInput("unknown format '" + format + "'");
  if (epsilon && sgn(*epsilon) <= 0) throw InvalidInput("epsilon must be positive");
}

std::optional<std::size_t> point_cap_from_env() {
  const char* v = std::getenv("LIPSCOMB_POINT_CAP");
  if (!v || !*v) return std::nullopt;
  return parse_count("LIPSCOMB_POINT_CAP", v);
}

void apply_config_text(RunConfig& cfg, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidInput("config line " + std::to_string(number) + ": expected key = value");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "graph") cfg.graph_path = value;
    else if (key == "z") cfg.z = value;
    else if (key == "depth") cfg.depth = parse_count(key, value);
    else if (key == "epsilon") cfg.epsilon = parse_rational(value);
    else if (key == "format") cfg.format = value;
    else if (key == "point_cap") cfg.point_cap = parse_count(key, value);
    else if (key == "threads") cfg.threads = static_cast<unsigned>(parse_count(key, value));
    else throw InvalidInput("config line " + std::to_string(number) + ": unknown key '" + key + "'");
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lipscomb space point clouds and certificates"};
  app.require_subcommand(1);
  Flags f;

  auto* attractor = app.add_subcommand("attractor", "fixed-point cloud after --depth steps");
  auto* render = app.add_subcommand("render", "SVG scatter of the cloud");
  auto* connectivity = app.add_subcommand("connectivity", "connectedness verdict with a witness");
  auto* identify = app.add_subcommand("identify", "whether two addresses name the same point");
  auto* embed_cmd = app.add_subcommand("embed", "exact coordinates of an address");
  auto* pieces = app.add_subcommand("pieces", "intersections of first-level pieces");
  auto* levels = app.add_subcommand("levels", "finite level graphs and their truncation maps");
  for (auto* sub : {attractor, render, connectivity, identify, embed_cmd, pieces, levels}) add_common(sub, f);

  double size = 512;
  std::vector<std::size_t> axes{0, 1};
  render->add_option("--size", size, "width in pixels");
  render->add_option("--axes", axes, "coordinate pair for 3-D clouds")->expected(2);
  std::string seed = "fixed";
  attractor->add_option("--seed", seed, "'fixed' or points like '0,0;1/2,0'");
  render->add_option("--seed", seed, "'fixed' or points like '0,0;1/2,0'");
  std::string x_lit, y_lit, word_lit;
  identify->add_option("--x", x_lit, "first address, e.g. 1(2)")->required();
  identify->add_option("--y", y_lit, "second address")->required();
  embed_cmd->add_option("--word", word_lit, "address, e.g. 0(2)")->required();
  std::optional<std::string> piece_i, piece_j;
  pieces->add_option("--i", piece_i);
  pieces->add_option("--j", piece_j);
  std::size_t max_level = 4;
  std::optional<std::size_t> dump_level;
  std::optional<std::string> sequence_dir;
  levels->add_option("--max-level", max_level, "check levels 1..N");
  levels->add_option("--dump-edges", dump_level, "print the level graph in graph-file format");
  levels->add_option("--sequence", sequence_dir, "directory with levelK.graph and bondK.bond files");

  std::vector<std::string> argv_store{"lipscomb"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_bad_input;
  }

  try {
    RunConfig cfg = resolve(f);
    if (attractor->parsed() || render->parsed()) {
      EmbeddingConfig ec = embedding_config(cfg);
      IFS system = build_system(ec);
      PointCloud cloud = attractor_cloud(system, cfg.depth, seed_cloud(system, seed), iteration_options(cfg));
      SvgOptions svg{size, {axes[0], axes[1]}};
      std::string format = render->parsed() ? "svg" : cfg.format;
      emit(out, f.out, render_cloud(ec, cloud, format, svg));
      return exit_ok;
    }
    if (connectivity->parsed()) return connectivity_command(cfg, f, out);
    if (identify->parsed()) {
      Graph g = load_graph(cfg);
      AddressWord x = parse_word(g, x_lit);
      AddressWord y = parse_word(g, y_lit);
      emit(out, f.out, bool_text(are_identified(g, x, y)) + "\n");
      return exit_ok;
    }
    if (embed_cmd->parsed()) {
      EmbeddingConfig ec = embedding_config(cfg);
      AddressWord w = parse_word(ec.graph(), word_lit);
      ExactPoint p = embed(ec, w);
      std::string decimals;
      for (std::size_t k = 0; k < p.size(); ++k)
        decimals += (k ? " " : "") + ec.graph().label(ec.coordinate_symbol(k)) + "=" + decimal17(p[k]);
      emit(out, f.out, format_point(ec, p) + "\n" + decimals + "\n");
      return exit_ok;
    }
    if (pieces->parsed()) return pieces_command(cfg, f, piece_i, piece_j, out);
    if (levels->parsed()) return levels_command(cfg, f, max_level, dump_level, sequence_dir, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return exit_resource_cap;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return exit_resource_cap;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return exit_invariant;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_invariant;
  }
  return exit_bad_input;
}

}  // namespace lipscomb
