#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hcs/list_counter.hpp"
#include "hcs/oracle.hpp"
#include "hcs/ordering.hpp"
#include "hcs/parallel.hpp"
#include "hcs/pivot_counter.hpp"
#include "hcs/report.hpp"
#include "hcs/verify.hpp"

using namespace hcs;

namespace {

enum Exit { kOk = 0, kIo = 1, kSpec = 2, kMismatch = 3, kOverflow = 4 };

struct Common {
  std::string input;
  std::string motif = "clique";
  int s = 0;
  std::optional<int> q;
  std::string q_range;
  std::string method = "pivot";
  bool no_prune = false;
  int threads = 0;
  std::string json;
  unsigned count_bits = 0;
  int bound_bias = 0;
};

void add_common(CLI::App* app, Common& c, bool with_method) {
  app->add_option("--input", c.input, "edge list (SNAP format)")->required();
  app->add_option("--motif", c.motif, "dclique | plex | clique")->check(CLI::IsMember({"dclique", "plex", "clique"}));
  app->add_option("--s", c.s, "missing-edge parameter")->check(CLI::NonNegativeNumber);
  auto* q = app->add_option("--q", c.q, "single size");
  auto* r = app->add_option("--q-range", c.q_range, "size range L:R");
  q->excludes(r);
  if (with_method) {
    app->add_option("--method", c.method, "pivot | list")->check(CLI::IsMember({"pivot", "list"}));
  }
  app->add_flag("--no-prune", c.no_prune, "disable candidate reduction and branch bounds");
  app->add_option("--threads", c.threads, "worker threads (0: HCS_THREADS or all cores)");
  app->add_option("--json", c.json, "write a JSON report here");
  app->add_option("--count-bits", c.count_bits, "treat counts wider than this as overflow")->group("");
  app->add_option("--inject-bound-bias", c.bound_bias, "add to every branch bound")->group("");
}

MotifSpec make_spec(const Common& c) {
  const Family f = parse_family(c.motif);
  if (c.q) return MotifSpec::single(f, c.s, *c.q);
  if (c.q_range.empty()) throw SpecError("--q or --q-range", "one of --q or --q-range is required");
  const auto colon = c.q_range.find(':');
  if (colon == std::string::npos) throw SpecError("--q-range L:R", "--q-range expects L:R");
  try {
    return MotifSpec::range(f, c.s, std::stoi(c.q_range.substr(0, colon)), std::stoi(c.q_range.substr(colon + 1)));
  } catch (const std::logic_error&) {
    throw SpecError("--q-range L:R", "--q-range expects integers L:R, got '" + c.q_range + "'");
  }
}

EngineOptions make_engine(const Common& c) {
  EngineOptions o;
  o.prune = !c.no_prune;
  o.threads = c.threads;
  o.bound_bias = c.bound_bias;
  o.limit = CountLimit(c.count_bits);
  return o;
}

struct Loaded {
  Graph g;
  LoadStats stats;
  DegeneracyOrder ord;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.g = load_edge_list_file(path, &l.stats);
  l.ord = degeneracy_order(l.g);
  std::cerr << "loaded " << path << ": n=" << l.g.num_vertices() << " m=" << l.g.num_edges()
            << " degeneracy=" << l.ord.degeneracy << " lines=" << l.stats.lines
            << " comments=" << l.stats.comment_lines << " self_loops=" << l.stats.self_loops
            << " duplicates=" << l.stats.duplicates << '\n';
  return l;
}

RunInfo make_info(const Common& c, const Loaded& l, const MotifSpec& spec) {
  RunInfo info;
  info.input = c.input;
  info.load = l.stats;
  info.n = l.g.num_vertices();
  info.m = l.g.num_edges();
  info.degeneracy = l.ord.degeneracy;
  info.spec = spec;
  info.method = c.method;
  info.prune = !c.no_prune;
  info.threads = resolve_threads(c.threads);
  return info;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void print_stats(const SearchStats& st) {
  std::cout << "nodes " << st.nodes << ", branches " << st.branches << " (" << st.pruned_branches
            << " pruned), candidate reduction " << st.reduction_rate() * 100 << "%\n";
}

int cmd_count(const Common& c) {
  const MotifSpec spec = make_spec(c);
  validate(spec);
  const Loaded l = load(c.input);
  const EngineOptions eo = make_engine(c);
  const auto t0 = std::chrono::steady_clock::now();
  SizeCounts counts(spec.q_low, spec.q_high);
  SearchStats stats;
  std::optional<double> frac;
  if (c.method == "list") {
    for (int q = spec.q_low; q <= spec.q_high; ++q) {
      ListRun r = count_by_listing(l.g, l.ord, MotifSpec::single(spec.family, spec.s, q), eo);
      counts.at(q) = r.count;
      stats.merge(r.stats);
    }
  } else {
    PivotRun r = count_by_pivot(l.g, l.ord, spec, eo);
    counts = r.counts;
    stats = r.stats;
    frac = r.combinatorial_fraction();
  }
  RunInfo info = make_info(c, l, spec);
  info.seconds = seconds_since(t0);
  for (int q = spec.q_low; q <= spec.q_high; ++q) std::cout << "q=" << q << '\t' << to_decimal(counts.at(q)) << '\n';
  print_stats(stats);
  if (frac) std::cout << "counted in combination " << *frac * 100 << "%\n";
  std::cout << "time " << info.seconds << " s\n";
  write_json(c.json, run_report(info, counts, stats, frac));
  return kOk;
}

int cmd_local(const Common& c, const std::string& gran_name, const std::string& output) {
  const MotifSpec spec = make_spec(c);
  validate(spec);
  const Granularity gran = parse_granularity(gran_name);
  const Loaded l = load(c.input);
  const auto t0 = std::chrono::steady_clock::now();
  LocalCounts lc = count_local(l.g, l.ord, spec, gran, make_engine(c));
  RunInfo info = make_info(c, l, spec);
  info.method = "pivot";
  info.seconds = seconds_since(t0);

  for (int q = spec.q_low; q <= spec.q_high; ++q) {
    BigCount sum = 0;
    for (const auto& v : lc.at(q)) sum += v;
    const BigCount total = lc.totals.at(q);
    if (gran == Granularity::vertex && sum != total * q) {
      std::cerr << "internal error: vertex tallies sum to " << sum << ", expected q x total\n";
      return kMismatch;
    }
    if (gran == Granularity::edge) {
      const BigCount pairs = BigCount(q) * (q - 1) / 2;
      const BigCount floor = spec.family == Family::dclique ? (pairs - std::min<BigCount>(pairs, spec.s)) * total
                                                             : BigCount(0);
      if (sum > pairs * total || sum < floor) {
        std::cerr << "internal error: edge tallies sum " << sum << " out of range\n";
        return kMismatch;
      }
    }
    std::cout << "q=" << q << '\t' << to_decimal(total) << '\n';
  }

  std::ofstream out(output);
  if (!out) throw std::runtime_error("cannot write " + output);
  for (int q = spec.q_low; q <= spec.q_high; ++q) {
    std::ofstream* target = &out;
    std::ofstream extra;
    if (!spec.single_size()) {
      extra.open(output + ".q" + std::to_string(q));
      if (!extra) throw std::runtime_error("cannot write " + output + ".q" + std::to_string(q));
      target = &extra;
    }
    if (gran == Granularity::vertex) {
      write_vertex_tsv(*target, l.g, lc.at(q));
    } else {
      write_edge_tsv(*target, l.g, lc.at(q));
    }
  }
  if (!spec.single_size()) {
    out << "# per-size tables in " << output << ".q" << spec.q_low << " .. " << output << ".q" << spec.q_high
        << '\n';
  }
  write_json(c.json, run_report(info, lc.totals, lc.stats, std::nullopt));
  return kOk;
}

int cmd_profile(const Common& c) {
  const MotifSpec spec = make_spec(c);
  if (spec.family == Family::clique) throw SpecError("profile motif", "profile compares dclique or plex with cliques");
  validate(spec);
  const Loaded l = load(c.input);
  const EngineOptions eo = make_engine(c);
  const PivotRun hcs = count_by_pivot(l.g, l.ord, spec, eo);
  SizeCounts cliques(spec.q_low, spec.q_high);
  const PivotRun cl = count_by_pivot(l.g, l.ord, MotifSpec::range(Family::clique, 0, spec.q_low, spec.q_high), eo);
  cliques = cl.counts;
  nlohmann::json j = hgp_profile(spec, hcs.counts, cliques);
  j["input"] = c.input;
  if (c.json.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json(c.json, j);
    for (const auto& e : j["profile"]) {
      std::cout << "q=" << e["q"] << '\t' << (e["ratio"].is_null() ? std::string("null") : e["ratio"].get<std::string>())
                << '\n';
    }
  }
  return kOk;
}

void dump_counterexample(std::ostream& out, const Graph& g, const Disagreement& d) {
  out << "# counterexample: motif=" << to_string(d.spec.family) << " s=" << d.spec.s << " q=" << d.q << '\n';
  out << "# " << d.what << '\n';
  out << "# n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
  write_edge_list(out, g);
}

int cmd_verify(const Common& c, int seeds, int q_max, bool local, const std::string& dump) {
  AgreementOptions ao;
  ao.engine = make_engine(c);
  ao.local = local;

  std::vector<std::pair<std::string, Graph>> corpus;
  if (!c.input.empty()) {
    corpus.emplace_back(c.input, load(c.input).g);
  } else {
    for (int i = 0; i < seeds; ++i) {
      const CorpusEntry e = corpus_entry(static_cast<std::uint64_t>(i));
      corpus.emplace_back("seed " + std::to_string(i) + " G(" + std::to_string(e.n) + ", " + std::to_string(e.p) + ")",
                          corpus_graph(e));
    }
  }

  std::vector<MotifSpec> specs;
  if (c.q || !c.q_range.empty()) {
    specs.push_back(make_spec(c));
    validate(specs.back());
  } else {
    specs = spec_matrix(q_max);
  }

  std::size_t checked = 0, skipped = 0;
  for (const auto& [name, g] : corpus) {
    for (const MotifSpec& spec : specs) {
      std::vector<Disagreement> bad;
      try {
        bad = check_agreement(g, spec, ao);
      } catch (const OracleInfeasible& e) {
        ++skipped;
        std::cerr << "skip " << name << " " << to_string(spec.family) << " s=" << spec.s << ": " << e.what() << '\n';
        continue;
      }
      ++checked;
      if (bad.empty()) continue;
      std::cout << "MISMATCH on " << name << ": " << to_string(spec.family) << " s=" << spec.s << " q=" << bad[0].q
                << ": " << bad[0].what << '\n';
      const MotifSpec single = MotifSpec::single(spec.family, spec.s, bad[0].q);
      const Graph small = minimize_counterexample(g, [&](const Graph& h) {
        try {
          return !check_agreement(h, single, ao).empty();
        } catch (const std::exception&) {
          return false;
        }
      });
      const auto again = check_agreement(small, single, ao);
      const Disagreement& d = again.empty() ? bad[0] : again[0];
      if (dump.empty()) {
        dump_counterexample(std::cout, small, d);
      } else {
        std::ofstream out(dump);
        dump_counterexample(out, small, d);
        std::cout << "minimized counterexample (n=" << small.num_vertices() << ", m=" << small.num_edges()
                  << ") written to " << dump << '\n';
      }
      return kMismatch;
    }
  }
  std::cout << "verify: " << checked << " (graph, spec) pairs agree";
  if (skipped) std::cout << ", " << skipped << " skipped";
  std::cout << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting of s-defective cliques, s-plexes and cliques"};
  app.require_subcommand(1);

  Common count_opts, local_opts, profile_opts, verify_opts;
  auto* count = app.add_subcommand("count", "count HCSs of one size or a size range");
  add_common(count, count_opts, true);

  auto* local = app.add_subcommand("local", "per-vertex or per-edge counts");
  add_common(local, local_opts, false);
  std::string granularity = "vertex", output;
  local->add_option("--local", granularity, "vertex | edge")->check(CLI::IsMember({"vertex", "edge"}));
  local->add_option("--output", output, "TSV output path")->required();

  auto* profile = app.add_subcommand("profile", "clique / HCS ratio per size");
  add_common(profile, profile_opts, false);

  auto* verify = app.add_subcommand("verify", "three-way agreement of oracle, listing and pivot engines");
  int seeds = 20, q_max = 7;
  bool no_local = false;
  std::string dump;
  verify->add_option("--input", verify_opts.input, "check this graph instead of the random corpus");
  verify->add_option("--seeds", seeds, "random corpus size");
  verify->add_option("--q-max", q_max, "largest size in the default spec matrix");
  verify->add_option("--motif", verify_opts.motif)->check(CLI::IsMember({"dclique", "plex", "clique"}));
  verify->add_option("--s", verify_opts.s)->check(CLI::NonNegativeNumber);
  auto* vq = verify->add_option("--q", verify_opts.q);
  verify->add_option("--q-range", verify_opts.q_range)->excludes(vq);
  verify->add_flag("--no-prune", verify_opts.no_prune);
  verify->add_flag("--no-local", no_local, "skip per-vertex and per-edge comparison");
  verify->add_option("--threads", verify_opts.threads);
  verify->add_option("--dump", dump, "write the minimized counterexample here");
  verify->add_option("--inject-bound-bias", verify_opts.bound_bias, "add to every branch bound")->group("");
  verify_opts.threads = 1;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kSpec;
  }

  try {
    if (*count) return cmd_count(count_opts);
    if (*local) return cmd_local(local_opts, granularity, output);
    if (*profile) return cmd_profile(profile_opts);
    if (*verify) return cmd_verify(verify_opts, seeds, q_max, !no_local, dump);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kIo;
  } catch (const SpecError& e) {
    std::cerr << "invalid spec (" << e.rule() << "): " << e.what() << '\n';
    return kSpec;
  } catch (const CountOverflow& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kOverflow;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kSpec;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
