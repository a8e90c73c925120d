#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dgstat/cli/commands.hpp"

namespace {

using namespace dgstat::cli;

// Runs `body` against the named file, or standard input for "-".
template <typename Body>
int with_input(const std::string& path, Body body) {
  if (path == "-") return body(std::cin);
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << '\n';
    return kExitInput;
  }
  return body(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic graph statistics: h-index, triangles and small subgraph counts"};
  app.require_subcommand(1);
  int rc = kExitOk;

  std::string stats_file = "-";
  StatsOptions stats_options;
  CLI::App* stats = app.add_subcommand("stats", "Statistics of a static edge-list file");
  stats->add_option("file", stats_file, "Edge-list file, - for stdin");
  stats->add_flag("--weighted", stats_options.weighted, "Use the third column as edge weight");
  stats->callback([&] {
    rc = with_input(stats_file,
                    [&](std::istream& in) { return cmd_stats(in, std::cout, std::cerr, stats_options); });
  });

  std::string stream_file = "-";
  StreamOptions stream_options;
  CLI::App* stream = app.add_subcommand("stream", "Replay an operation stream");
  stream->add_option("file", stream_file, "Operation stream, - for stdin");
  stream->add_flag("--lenient", stream_options.lenient, "Skip and count illegal operations");
  stream->add_flag("--census", stream_options.census, "Maintain census, path and star counts");
  stream->add_flag("--weighted", stream_options.weighted, "Accept and track edge weights");
  stream->add_option("--colors", stream_options.colors, "Number of vertex colors");
  stream->add_flag("--verify", stream_options.verify,
                   "Cross-check every query against brute force (small graphs)");
  stream->callback([&] {
    rc = with_input(stream_file,
                    [&](std::istream& in) { return cmd_stream(in, std::cout, std::cerr, stream_options); });
  });

  SynthOptions synth_options;
  std::string synth_out;
  CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic edge list");
  synth->set_help_flag("--help", "Print this help message and exit");
  synth->add_option("model", synth_options.model, "ba | split | clique | gnp")->required();
  synth->add_option("--n", synth_options.n, "Number of vertices")->required();
  synth->add_option("--attach", synth_options.attach, "Edges per new vertex (ba)");
  synth->add_option("--h", synth_options.h, "Clique size (split)");
  synth->add_option("--c", synth_options.c, "Clique size (clique)");
  synth->add_option("--p", synth_options.p, "Edge probability (gnp)");
  synth->add_option("--seed", synth_options.seed, "Random seed");
  synth->add_option("--out", synth_out, "Output path (default stdout)");
  synth->callback([&] {
    if (synth_out.empty()) {
      rc = cmd_synth(synth_options, std::cout, std::cerr);
      return;
    }
    std::ofstream out(synth_out);
    if (!out) {
      std::cerr << "error: cannot write " << synth_out << '\n';
      rc = kExitInput;
      return;
    }
    rc = cmd_synth(synth_options, out, std::cerr);
  });

  std::string scaling_dir;
  CLI::App* scaling = app.add_subcommand("hscaling", "CSV of n, h and log ratios per edge-list file");
  scaling->add_option("dir", scaling_dir, "Directory of edge-list files")->required();
  scaling->callback([&] { rc = cmd_hscaling(scaling_dir, std::cout, std::cerr); });

  BenchOptions bench_options;
  bool bench_no_census = false;
  CLI::App* bench = app.add_subcommand("bench", "Time edge insertions and dump instrumentation");
  bench->add_option("model", bench_options.model, "ba | gnp");
  bench->add_option("--n", bench_options.n, "Number of vertices");
  bench->add_option("--attach", bench_options.attach, "Edges per new vertex (ba)");
  bench->add_option("--p", bench_options.p, "Edge probability (gnp)");
  bench->add_option("--seed", bench_options.seed, "Random seed");
  bench->add_option("--ops", bench_options.ops, "Insertions to replay, 0 for all");
  bench->add_option("--toggles", bench_options.toggles, "Random edge toggles after the build");
  bench->add_flag("--no-census", bench_no_census, "Maintain triangles only");
  bench->callback([&] {
    bench_options.census = !bench_no_census;
    rc = cmd_bench(bench_options, std::cout, std::cerr);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  return rc;
}
