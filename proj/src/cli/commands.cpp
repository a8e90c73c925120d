#include "dgstat/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <string>

#include "dgstat/cli/parse.hpp"
#include "dgstat/cli/scaling.hpp"
#include "dgstat/cli/synth.hpp"
#include "dgstat/hindex.hpp"
#include "dgstat/oracle.hpp"

namespace dgstat::cli {

namespace {

using nlohmann::ordered_json;

ordered_json count_json(Count128 x) {
  if (x <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(x);
  std::string digits;
  while (x != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string triple_key(const ColorTriple& t) {
  return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

oracle::SimpleGraph snapshot(const DynamicGraph& g) {
  oracle::SimpleGraph s;
  for (const auto& [v, rec] : g.vertices()) s.vertices.push_back({v, rec.color});
  for (const auto& [key, rec] : g.edges()) s.edges.push_back({key.lo, key.hi, rec.weight});
  return s;
}

template <typename Map>
Map without_zeros(Map m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  return m;
}

bool close(double a, double b) {
  return std::fabs(a - b) <= 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

std::string u128(Count128 x) { return count_json(x).dump(); }

Engine build_static(const EdgeList& list, bool weighted) {
  EngineOptions options;
  options.weighted = weighted;
  options.census = true;
  Engine engine(options);
  for (VertexId v = 0; v < list.names.size(); ++v) engine.add_vertex(v);
  for (const EdgeListEdge& e : list.edges) {
    try {
      engine.add_edge(e.u, e.v, weighted ? e.weight : std::nullopt);
    } catch (const Error& err) {
      throw Error(err.kind(), "edge " + list.names[e.u] + " " + list.names[e.v] + ": " + err.what());
    }
  }
  return engine;
}

}  // namespace

ordered_json statistics_json(const Statistics& s) {
  ordered_json j;
  j["n"] = s.n;
  j["m"] = s.m;
  j["h"] = s.h;
  j["core_size"] = s.core_size;
  j["c3"] = s.c3;
  if (s.census) {
    const CensusStatistics& c = *s.census;
    j["g0"] = c.induced.g0;
    j["g1"] = c.induced.g1;
    j["g2"] = c.induced.g2;
    j["g3"] = c.induced.g3;
    j["noninduced"] = {{"triples", c.noninduced.triples},
                       {"one_edge", c.noninduced.one_edge},
                       {"two_path", c.noninduced.two_path},
                       {"triangle", c.noninduced.triangle}};
    j["p2"] = c.p2;
    j["p3"] = c.p3;
    j["q"] = c.q;
    for (std::size_t i = 0; i < c.stars.size(); ++i)
      j["s" + std::to_string(i + 1)] = count_json(c.stars[i]);
  }
  if (s.total_weight) j["total_weight"] = *s.total_weight;
  if (s.color_census) {
    ordered_json cc = ordered_json::object();
    for (const auto& [triple, count] : *s.color_census)
      if (count != 0) cc[triple_key(triple)] = count;
    j["color_census"] = std::move(cc);
  }
  return j;
}

std::vector<std::string> verify_against_oracle(const Engine& engine) {
  std::vector<std::string> bad;
  const DynamicGraph& g = engine.graph();
  const oracle::SimpleGraph s = snapshot(g);
  if (s.vertices.size() > oracle::kMaxVertices)
    throw oracle::SizeLimitError("verify: graph has more than " +
                                 std::to_string(oracle::kMaxVertices) + " vertices");
  auto expect = [&bad](const char* what, auto got, auto want) {
    if (got != want)
      bad.push_back(std::string(what) + ": engine " + std::to_string(got) + ", oracle " +
                    std::to_string(want));
  };

  try {
    g.check_invariants();
  } catch (const Error& e) {
    bad.push_back(std::string("invariants: ") + e.what());
  }
  const Statistics st = engine.statistics();
  expect("h", st.h, oracle::h_index_brute(s));
  expect("c3", st.c3, oracle::triangles_brute(s));
  if (st.total_weight && !close(*st.total_weight, oracle::weighted_brute(s)))
    bad.push_back("total_weight: engine " + format_double(*st.total_weight) + ", oracle " +
                  format_double(oracle::weighted_brute(s)));
  if (st.color_census) {
    std::map<oracle::Triple, std::uint64_t> got;
    for (const auto& [t, c] : *st.color_census) got[{t[0], t[1], t[2]}] = c;
    if (without_zeros(got) != without_zeros(oracle::colored_brute(s)))
      bad.push_back("color_census differs");
  }
  if (st.census) {
    const CensusStatistics& c = *st.census;
    const oracle::Census ic = oracle::census_brute(s);
    expect("g0", c.induced.g0, ic.g0);
    expect("g1", c.induced.g1, ic.g1);
    expect("g2", c.induced.g2, ic.g2);
    expect("g3", c.induced.g3, ic.g3);
    const oracle::Noninduced ni = oracle::noninduced_brute(s);
    expect("triples", c.noninduced.triples, ni.triples);
    expect("one_edge", c.noninduced.one_edge, ni.one_edge);
    expect("two_path", c.noninduced.two_path, ni.two_path);
    expect("triangle", c.noninduced.triangle, ni.triangle);
    expect("p2", c.p2, oracle::p2_brute(s));
    expect("p3", c.p3, oracle::p3_brute(s));
    expect("q", c.q, oracle::q_brute(s));
    for (std::size_t i = 0; i < c.stars.size(); ++i) {
      const Count128 want = oracle::stars_brute(s, static_cast<unsigned>(i + 1));
      if (c.stars[i] != want)
        bad.push_back("s" + std::to_string(i + 1) + ": engine " + u128(c.stars[i]) +
                      ", oracle " + u128(want));
    }
  }
  return bad;
}

int cmd_stats(std::istream& in, std::ostream& out, std::ostream& err,
              const StatsOptions& options) {
  try {
    const EdgeList list = read_edge_list(in);
    for (const std::string& w : list.warnings) err << "warning: " << w << '\n';
    const Engine engine = build_static(list, options.weighted);
    out << statistics_json(engine.statistics()).dump() << '\n';
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInput;
}

int cmd_stream(std::istream& in, std::ostream& out, std::ostream& err,
               const StreamOptions& options) {
  EngineOptions eo;
  eo.weighted = options.weighted;
  eo.colors = options.colors;
  eo.census = options.census;
  Engine engine(eo);
  Interner names;

  std::uint64_t ops = 0, skipped = 0, queries = 0;
  bool verify_failed = false;
  bool verify_limit_warned = false;
  std::string line;
  std::size_t line_no = 0;

  auto lookup = [&names](const std::string& token) {
    const std::optional<VertexId> id = names.find(token);
    if (!id) throw Error(ErrorKind::kMissingVertex, "unknown vertex " + token);
    return *id;
  };

  while (std::getline(in, line)) {
    ++line_no;
    try {
      const std::optional<OperationRecord> op = parse_operation(line, line_no);
      if (!op) continue;
      switch (op->kind) {
        case OpKind::kAddVertex: {
          const std::optional<VertexId> known = names.find(op->ids[0]);
          const VertexId v = known ? *known : names.intern(op->ids[0]);
          engine.add_vertex(v, op->color);
          break;
        }
        case OpKind::kRemoveVertex:
          engine.remove_vertex(lookup(op->ids[0]));
          break;
        case OpKind::kAddEdge:
          engine.add_edge(lookup(op->ids[0]), lookup(op->ids[1]), op->weight);
          break;
        case OpKind::kRemoveEdge:
          engine.remove_edge(lookup(op->ids[0]), lookup(op->ids[1]));
          break;
        case OpKind::kQuery: {
          ++queries;
          out << statistics_json(engine.statistics()).dump() << '\n';
          if (options.verify) {
            try {
              for (const std::string& msg : verify_against_oracle(engine)) {
                err << "line " << line_no << ": verify: " << msg << '\n';
                verify_failed = true;
              }
            } catch (const oracle::SizeLimitError& e) {
              if (!verify_limit_warned) err << "line " << line_no << ": warning: " << e.what() << '\n';
              verify_limit_warned = true;
            }
          }
          break;
        }
      }
      ++ops;
    } catch (const ParseError& e) {
      err << "error: " << e.what() << '\n';
      if (!options.lenient) return kExitInput;
      ++skipped;
    } catch (const Error& e) {
      err << "error: line " << line_no << ": " << e.what() << '\n';
      if (!options.lenient) return kExitInput;
      ++skipped;
    }
  }

  const CoreChangeCounters& cc = engine.graph().partition().counters();
  ordered_json fin;
  fin["ops"] = ops;
  fin["skipped"] = skipped;
  fin["queries"] = queries;
  fin["core_additions"] = cc.core_additions;
  fin["core_removals"] = cc.core_removals;
  fin["harmonic_sum"] = cc.harmonic_sum;
  fin["epochs"] = cc.epoch_count;
  fin["probe_counter"] = engine.triangles().instrumentation().probes;
  out << fin.dump() << '\n';
  return verify_failed ? kExitAssertion : kExitOk;
}

int cmd_synth(const SynthOptions& o, std::ostream& out, std::ostream& err) {
  try {
    SynthGraph g;
    if (o.model == "ba")
      g = barabasi_albert(o.n, o.attach, o.seed);
    else if (o.model == "split")
      g = split_graph(o.h, o.n);
    else if (o.model == "clique" || o.model == "clique-plus-isolates")
      g = clique_plus_isolates(o.c, o.n);
    else if (o.model == "gnp")
      g = gnp(o.n, o.p, o.seed);
    else
      throw Error(ErrorKind::kInvalidArgument, "unknown model " + o.model);
    write_edge_list(g, out);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

int cmd_hscaling(const std::filesystem::path& dir, std::ostream& out, std::ostream& err) {
  std::error_code ec;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
    if (entry.is_regular_file()) files.push_back(entry.path());
  if (ec) {
    err << "error: " << dir.string() << ": " << ec.message() << '\n';
    return kExitInput;
  }
  std::sort(files.begin(), files.end());

  bool failed = false;
  std::vector<ScalingRow> rows;
  out << kScalingHeader << '\n';
  for (const std::filesystem::path& file : files) {
    std::ifstream in(file);
    if (!in) {
      err << "error: " << file.string() << ": cannot open\n";
      failed = true;
      continue;
    }
    try {
      const EdgeList list = read_edge_list(in);
      for (const std::string& w : list.warnings) err << file.string() << ": warning: " << w << '\n';
      std::vector<std::uint64_t> degree(list.names.size(), 0);
      for (const EdgeListEdge& e : list.edges) {
        ++degree[e.u];
        ++degree[e.v];
      }
      HIndexStructure index;
      for (VertexId v = 0; v < degree.size(); ++v) index.insert(v, degree[v]);
      ScalingRow row{file.stem().string(), list.names.size(), index.h()};
      out << format_scaling_row(row) << '\n';
      rows.push_back(std::move(row));
    } catch (const ParseError& e) {
      err << "error: " << file.string() << ": " << e.what() << '\n';
      failed = true;
    }
  }
  for (const std::string& line : format_scaling_summary(rows)) out << line << '\n';
  return failed ? kExitInput : kExitOk;
}

BenchReport run_bench(const BenchOptions& o) {
  SynthGraph g;
  if (o.model == "ba")
    g = barabasi_albert(o.n, o.attach, o.seed);
  else if (o.model == "gnp")
    g = gnp(o.n, o.p, o.seed);
  else
    throw Error(ErrorKind::kInvalidArgument, "unknown bench model " + o.model);

  EngineOptions eo;
  eo.census = o.census;
  Engine engine(eo);

  const std::size_t inserts =
      o.ops == 0 ? g.edges.size() : std::min<std::size_t>(o.ops, g.edges.size());
  BenchReport r;
  const TriangleInstrumentation& instr = engine.triangles().instrumentation();
  const DynamicGraph& graph = engine.graph();
  // Vertices arrive with their first edge, as in a growing network.
  auto ensure = [&](VertexId v) {
    if (!graph.has_vertex(v)) engine.add_vertex(v);
  };
  auto note = [&](std::uint64_t probes_before) {
    ++r.updates;
    r.max_probes_per_update = std::max(r.max_probes_per_update, instr.probes - probes_before);
    r.max_core = std::max(r.max_core, graph.core().size());
  };

  std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < inserts; ++i) {
    ensure(g.edges[i].first);
    ensure(g.edges[i].second);
    const std::uint64_t before = instr.probes;
    engine.add_edge(g.edges[i].first, g.edges[i].second);
    note(before);
  }
  for (std::uint64_t t = 0; t < o.toggles && g.n >= 2; ++t) {
    const VertexId u = rng() % g.n;
    const VertexId v = rng() % g.n;
    if (u == v) continue;
    ensure(u);
    ensure(v);
    const std::uint64_t before = instr.probes;
    if (graph.has_edge(u, v))
      engine.remove_edge(u, v);
    else
      engine.add_edge(u, v);
    note(before);
  }
  const auto stop = std::chrono::steady_clock::now();

  const CoreChangeCounters& cc = graph.partition().counters();
  r.wall_seconds = std::chrono::duration<double>(stop - start).count();
  r.h = graph.h_index();
  r.c3 = engine.triangles().triangle_count();
  r.probes = instr.probes;
  r.core_additions = cc.core_additions;
  r.core_removals = cc.core_removals;
  r.harmonic_sum = cc.harmonic_sum;
  r.path_cells = engine.triangles().path_table().size();
  r.rebuild_touches = instr.rebuild_touches;
  return r;
}

ordered_json bench_json(const BenchOptions& o, const BenchReport& r) {
  ordered_json j;
  j["model"] = o.model;
  j["n"] = o.n;
  j["seed"] = o.seed;
  j["updates"] = r.updates;
  j["wall_seconds"] = r.wall_seconds;
  j["mean_us"] = r.mean_us();
  j["h"] = r.h;
  j["max_core"] = r.max_core;
  j["c3"] = r.c3;
  j["probe_counter"] = r.probes;
  j["probes_per_op"] = r.updates == 0 ? 0.0 : static_cast<double>(r.probes) / r.updates;
  j["max_probes_per_update"] = r.max_probes_per_update;
  j["core_additions"] = r.core_additions;
  j["core_removals"] = r.core_removals;
  j["harmonic_sum"] = r.harmonic_sum;
  j["churn_ratio"] = r.churn_ratio();
  j["path_cells"] = r.path_cells;
  j["rebuild_touches"] = r.rebuild_touches;
  return j;
}

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  try {
    out << bench_json(options, run_bench(options)).dump() << '\n';
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace dgstat::cli
