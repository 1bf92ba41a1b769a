#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "elimtree/elim_tree.hpp"
#include "elimtree/error.hpp"
#include "elimtree/flip_graph.hpp"
#include "elimtree/fpt.hpp"
#include "elimtree/graph.hpp"
#include "elimtree/io.hpp"
#include "elimtree/random.hpp"

namespace elimtree::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Carries an exit code out of a command body.
struct Failure {
  int code;
  ErrorCode error;
  std::string message;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTree:
    case ErrorCode::NotATreeEdge: return kInvalidTree;
    case ErrorCode::DisconnectedGraph: return kDisconnected;
    case ErrorCode::InstanceTooLarge: return kCapExceeded;
    default: return kUsage;
  }
}

io::GraphFile load_graph(const std::string& path) { return io::read_graph(path); }

void require_connected(const Graph& g) {
  if (!is_connected(g)) {
    throw Failure{kDisconnected, ErrorCode::DisconnectedGraph, "graph is not connected"};
  }
}

ElimTree load_tree(const Graph& g, const std::string& path) {
  ElimTree t;
  try {
    t = io::read_tree(path);
  } catch (const Error& e) {
    throw Failure{kInvalidTree, ErrorCode::InvalidTree, path + ": " + e.what()};
  }
  if (auto v = validate(g, t); !v) {
    throw Failure{kInvalidTree, ErrorCode::InvalidTree, path + ": " + v.diagnostic};
  }
  return t;
}

std::vector<VertexId> parse_id_list(const std::string& text) {
  std::vector<VertexId> ids;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      ids.push_back(static_cast<VertexId>(std::stol(item)));
    } catch (const std::exception&) {
      throw Failure{kUsage, ErrorCode::ParseError, "not an integer list: " + text};
    }
  }
  return ids;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw Failure{kUsage, ErrorCode::ParseError, "cannot write " + path};
  f << content;
}

struct Common {
  std::string graph, source, target, replay, out_dot, out_json, out_file;
  std::optional<int> k, cap;
  std::string method = "auto";
  bool explain = false;
  int jobs = 1;
  VertexId max_n = kDefaultEnumerationCap;
  std::uint64_t seed = 0;
};

int replay_sequence(const Graph& g, const ElimTree& from, const ElimTree& to,
                    const std::string& path, std::optional<int> k, std::ostream& out) {
  const RotationSequence seq = parse_sequence(io::read_text(path));
  ElimTree reached;
  try {
    reached = apply_sequence(g, from, seq);
  } catch (const NotATreeEdgeError& e) {
    throw Failure{kInvalidTree, ErrorCode::NotATreeEdge, e.what()};
  }
  const bool ok = reached == to && (!k || static_cast<int>(seq.size()) <= *k);
  out << "replay: " << (ok ? "OK" : "FAIL") << "\n";
  out << "length: " << seq.size() << "\n";
  return ok ? kOk : kNo;
}

int cmd_validate(const Common& c, std::ostream& out) {
  const auto gf = load_graph(c.graph);
  require_connected(gf.graph);
  load_tree(gf.graph, c.source);
  out << "valid\n";
  return kOk;
}

int cmd_rotate(const Common& c, const std::vector<std::string>& edge_texts, std::ostream& out) {
  const auto gf = load_graph(c.graph);
  require_connected(gf.graph);
  const ElimTree t = load_tree(gf.graph, c.source);
  RotationSequence seq;
  for (const auto& e : edge_texts) {
    auto parsed = parse_sequence(e);
    if (parsed.size() != 1) throw Failure{kUsage, ErrorCode::ParseError, "bad edge '" + e + "'"};
    seq.push_back(parsed.front());
  }
  if (!c.replay.empty()) {
    auto more = parse_sequence(io::read_text(c.replay));
    seq.insert(seq.end(), more.begin(), more.end());
  }
  ElimTree result;
  try {
    result = apply_sequence(gf.graph, t, seq);
  } catch (const NotATreeEdgeError& e) {
    throw Failure{kInvalidTree, ErrorCode::NotATreeEdge, e.what()};
  }
  out << io::dump_tree(result) << "\n";
  if (!c.target.empty()) {
    const bool reached = result == load_tree(gf.graph, c.target);
    out << "target: " << (reached ? "reached" : "not reached") << "\n";
    return reached ? kOk : kNo;
  }
  return kOk;
}

int cmd_distance(const Common& c, std::ostream& out) {
  const auto gf = load_graph(c.graph);
  const Graph& g = gf.graph;
  require_connected(g);
  const ElimTree from = load_tree(g, c.source);
  const ElimTree to = load_tree(g, c.target);
  if (c.k && *c.k < 0) throw Failure{kUsage, ErrorCode::InvalidParameter, "k must be >= 0"};
  if (!c.replay.empty()) return replay_sequence(g, from, to, c.replay, c.k, out);

  std::string method = c.method;
  if (method == "auto") method = g.n() <= 8 ? "bfs" : "fpt";
  const auto start = Clock::now();

  if (method == "bfs") {
    std::optional<int> cap = c.k;
    if (c.cap) cap = cap ? std::min(*cap, *c.cap) : *c.cap;
    const auto path = bfs_path(g, from, to, cap);
    const double ms = elapsed_ms(start);
    if (c.k) {
      out << "verdict: " << (path ? "YES" : "NO") << "\n";
    }
    if (path) {
      out << "distance: " << path->size() << "\n";
      out << "witness: " << format_sequence(*path) << "\n";
    } else {
      out << "distance: >" << *cap << "\n";
    }
    out << "method: bfs\n";
    out << "time_ms: " << std::fixed << std::setprecision(3) << ms << "\n";
    if (c.k) return path ? kOk : kNo;
    return path ? kOk : kCapExceeded;
  }
  if (method != "fpt") {
    throw Failure{kUsage, ErrorCode::InvalidParameter, "unknown method '" + c.method + "'"};
  }
  if (!c.k) throw Failure{kUsage, ErrorCode::InvalidParameter, "--method fpt needs -k"};
  fpt::Options opts;
  opts.jobs = c.jobs;
  const fpt::Result r = fpt::decide(g, from, to, *c.k, opts);
  const double ms = elapsed_ms(start);
  out << "verdict: " << (r.yes ? "YES" : "NO") << "\n";
  if (r.yes) {
    out << "witness: " << format_sequence(r.witness) << "\n";
    out << "length: " << r.witness.size() << "\n";
  }
  if (r.early_no) out << "early_no: " << fpt::to_string(*r.early_no) << "\n";
  out << "method: fpt\n";
  out << "marked: " << r.marks.marked.size() << "\n";
  out << "time_ms: " << std::fixed << std::setprecision(3) << ms << "\n";
  if (c.explain) out << io::explain_json(r).dump() << "\n";
  return r.yes ? kOk : kNo;
}

int cmd_explain(const Common& c, std::ostream& out) {
  const auto gf = load_graph(c.graph);
  require_connected(gf.graph);
  const ElimTree from = load_tree(gf.graph, c.source);
  const ElimTree to = load_tree(gf.graph, c.target);
  fpt::Options opts;
  opts.jobs = c.jobs;
  const fpt::Result r = fpt::decide(gf.graph, from, to, c.k.value_or(1), opts);
  out << io::explain_json(r).dump(2) << "\n";
  return r.yes ? kOk : kNo;
}

int cmd_enumerate(const Common& c, std::ostream& out) {
  const auto gf = load_graph(c.graph);
  require_connected(gf.graph);
  const FlipGraph fg = enumerate_all(gf.graph, c.max_n);
  out << fg.size() << (fg.size() == 1 ? " elimination tree" : " elimination trees") << "\n";
  if (!c.out_dot.empty()) write_file(c.out_dot, to_dot(fg, gf.names));
  if (!c.out_json.empty()) write_file(c.out_json, io::flip_graph_json(fg).dump() + "\n");
  return kOk;
}

int cmd_diameter(const Common& c, std::ostream& out) {
  const auto gf = load_graph(c.graph);
  require_connected(gf.graph);
  out << diameter(gf.graph, c.max_n) << "\n";
  return kOk;
}

struct GenFlags {
  std::string family;
  VertexId n = 0;
  VertexId clique = 1;
  double p = 0.3;
  std::string order;
};

Graph generated(const GenFlags& f, std::uint64_t seed) {
  GeneratorParams params;
  params.clique_size = f.clique;
  params.edge_probability = f.p;
  params.seed = seed;
  return generate(parse_family(f.family), f.n, params);
}

int cmd_gen(const Common& c, const GenFlags& f, std::ostream& out) {
  std::string text;
  if (!f.order.empty()) {
    const Graph g = c.graph.empty() ? generated(f, c.seed) : load_graph(c.graph).graph;
    require_connected(g);
    text = io::dump_tree(from_ordering(g, parse_id_list(f.order)));
  } else {
    if (f.family.empty()) throw Failure{kUsage, ErrorCode::InvalidParameter, "--family is required"};
    text = io::dump_graph(generated(f, c.seed));
  }
  if (c.out_file.empty()) {
    out << text << "\n";
  } else {
    write_file(c.out_file, text + "\n");
  }
  return kOk;
}

int cmd_bench(const Common& c, const GenFlags& f, const std::string& sizes, int reps,
              std::ostream& out) {
  const int k = c.k.value_or(2);
  reps = std::max(1, reps);
  fpt::Options opts;
  opts.jobs = c.jobs;
  out << "family,n,k,reps,median_ms,verdict,marked,nodes_expanded\n";
  for (VertexId n : parse_id_list(sizes)) {
    GenFlags per = f;
    per.n = n;
    const Graph g = generated(per, c.seed);
    std::vector<VertexId> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    const ElimTree t = from_ordering(g, identity);
    // Target: a seeded random walk of k rotations away from t.
    Rng rng(c.seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(n)));
    ElimTree target = t;
    for (int i = 0; i < k; ++i) {
      const auto edges = target.edges();
      if (edges.empty()) break;
      target = rotate(g, target, edges[rng.below(edges.size())]);
    }
    std::vector<double> times;
    fpt::Result last;
    for (int r = 0; r < reps; ++r) {
      const auto start = Clock::now();
      last = fpt::decide(g, t, target, k, opts);
      times.push_back(elapsed_ms(start));
    }
    std::sort(times.begin(), times.end());
    const double median = times.size() % 2 ? times[times.size() / 2]
                                           : (times[times.size() / 2 - 1] + times[times.size() / 2]) / 2;
    out << f.family << ',' << n << ',' << k << ',' << reps << ',' << std::fixed
        << std::setprecision(4) << median << ',' << (last.yes ? "YES" : "NO") << ','
        << last.marks.marked.size() << ',' << last.stats.nodes_expanded << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elimination trees, rotations and rotation distance"};
  app.require_subcommand(1);
  Common c;
  GenFlags gen_flags;
  std::vector<std::string> edge_texts;
  std::string sizes;
  int reps = 5;

  auto graph_opt = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("-g,--graph", c.graph, "graph JSON file");
    if (required) o->required();
  };
  auto jobs_opt = [&](CLI::App* sub) {
    sub->add_option("--jobs", c.jobs, "worker count hint")->check(CLI::PositiveNumber);
  };

  auto* validate_cmd = app.add_subcommand("validate", "check a tree against a graph");
  graph_opt(validate_cmd);
  validate_cmd->add_option("-s,--source,-t,--tree", c.source, "tree JSON file")->required();

  auto* rotate_cmd = app.add_subcommand("rotate", "apply rotations to a tree");
  graph_opt(rotate_cmd);
  rotate_cmd->add_option("-s,--source", c.source, "tree JSON file")->required();
  rotate_cmd->add_option("-e,--edge", edge_texts, "edge u->v to rotate (repeatable)");
  rotate_cmd->add_option("--replay", c.replay, "file with a u->v rotation sequence");
  rotate_cmd->add_option("-t,--target", c.target, "report whether this tree is reached");

  auto* distance_cmd = app.add_subcommand("distance", "decide or compute rotation distance");
  graph_opt(distance_cmd);
  distance_cmd->add_option("-s,--source", c.source, "source tree")->required();
  distance_cmd->add_option("-t,--target", c.target, "target tree")->required();
  distance_cmd->add_option("-k", c.k, "distance bound");
  distance_cmd->add_option("--method", c.method, "fpt, bfs or auto")
      ->check(CLI::IsMember({"fpt", "bfs", "auto"}));
  distance_cmd->add_option("--cap", c.cap, "BFS depth cap");
  distance_cmd->add_flag("--explain", c.explain, "append the FPT diagnostic dump");
  distance_cmd->add_option("--replay", c.replay, "verify a u->v sequence instead of searching");
  jobs_opt(distance_cmd);

  auto* explain_cmd = app.add_subcommand("explain", "FPT diagnostic dump as JSON");
  graph_opt(explain_cmd);
  explain_cmd->add_option("-s,--source", c.source, "source tree")->required();
  explain_cmd->add_option("-t,--target", c.target, "target tree")->required();
  explain_cmd->add_option("-k", c.k, "distance bound")->required();
  jobs_opt(explain_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list all elimination trees");
  graph_opt(enumerate_cmd);
  enumerate_cmd->add_option("--out-dot", c.out_dot, "write the flip graph as DOT");
  enumerate_cmd->add_option("--out-json", c.out_json, "write the flip graph as JSON adjacency");
  enumerate_cmd->add_option("--max-n", c.max_n, "largest n to enumerate");
  jobs_opt(enumerate_cmd);

  auto* diameter_cmd = app.add_subcommand("diameter", "diameter of the flip graph");
  graph_opt(diameter_cmd);
  diameter_cmd->add_option("--max-n", c.max_n, "largest n to enumerate");
  jobs_opt(diameter_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "generate a graph, or a tree from an ordering");
  gen_cmd->add_option("--family", gen_flags.family, "path|cycle|star|complete|complete_split|random_connected");
  gen_cmd->add_option("-n", gen_flags.n, "vertex count");
  gen_cmd->add_option("--clique", gen_flags.clique, "clique size for complete_split");
  gen_cmd->add_option("--p", gen_flags.p, "extra-edge probability for random_connected");
  gen_cmd->add_option("--seed", c.seed, "random seed");
  gen_cmd->add_option("--order", gen_flags.order, "emit the tree of this ordering, e.g. 2,0,1");
  graph_opt(gen_cmd, false);
  gen_cmd->add_option("-o,--out", c.out_file, "output file (default stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "time the FPT decision as n grows (CSV)");
  bench_cmd->add_option("--family", gen_flags.family, "graph family")->required();
  bench_cmd->add_option("--n", sizes, "comma-separated sizes")->required();
  bench_cmd->add_option("-k", c.k, "distance bound (default 2)");
  bench_cmd->add_option("--reps", reps, "repetitions per size");
  bench_cmd->add_option("--seed", c.seed, "random seed");
  bench_cmd->add_option("--clique", gen_flags.clique, "clique size for complete_split");
  bench_cmd->add_option("--p", gen_flags.p, "extra-edge probability for random_connected");
  jobs_opt(bench_cmd);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(c, out);
    if (*rotate_cmd) return cmd_rotate(c, edge_texts, out);
    if (*distance_cmd) return cmd_distance(c, out);
    if (*explain_cmd) return cmd_explain(c, out);
    if (*enumerate_cmd) return cmd_enumerate(c, out);
    if (*diameter_cmd) return cmd_diameter(c, out);
    if (*gen_cmd) return cmd_gen(c, gen_flags, out);
    if (*bench_cmd) return cmd_bench(c, gen_flags, sizes, reps, out);
  } catch (const Failure& f) {
    err << "error: " << to_string(f.error) << ": " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace elimtree::cli
