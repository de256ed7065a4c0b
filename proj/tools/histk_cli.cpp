// Copyright 2026 The histk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// histk: analyze, verify, decide, construct, generate and stress-test
// [2,k]-spanning trees from the command line.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "histk/certificates.hpp"
#include "histk/constants.hpp"
#include "histk/constructive.hpp"
#include "histk/error.hpp"
#include "histk/families.hpp"
#include "histk/forest.hpp"
#include "histk/graph.hpp"
#include "histk/graph_io.hpp"
#include "histk/hypothesis.hpp"
#include "histk/testing/naive_enumeration.hpp"
#include "histk/trace.hpp"

namespace {

using namespace histk;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kRefuted = 1, kParse = 2, kPrecondition = 3, kHypothesis = 4, kFailed = 5 };

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return kParse;
    case ErrorCode::kPrecondition:
      return kPrecondition;
    case ErrorCode::kHypothesisViolation:
    case ErrorCode::kInfeasibleParams:
    case ErrorCode::kUnsatisfiableParams:
      return kHypothesis;
    case ErrorCode::kNoSafeNeighbor:
    case ErrorCode::kSurrogateFailed:
    case ErrorCode::kConstructionFailed:
      return kFailed;
  }
  return kFailed;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write " + path);
  out << text;
}

std::string edge_list_text(Vertex n, std::span<const Edge> edges) {
  std::ostringstream out;
  write_edge_list(out, n, edges);
  return out.str();
}

std::string vertices_text(std::span<const Vertex> vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out + "}";
}

json digest(const Graph& g, const DegreeProfile& p) {
  json d;
  d["n"] = g.order();
  d["m"] = g.size();
  d["delta"] = p.min_degree;
  d["sigma2"] = p.sigma2.to_string();
  d["pi2"] = p.pi2.to_string();
  return d;
}

void print_digest(const Graph& g, const DegreeProfile& p) {
  std::cout << "n=" << g.order() << " m=" << g.size() << " δ=" << p.min_degree << " σ₂=" << p.sigma2.to_string()
            << " π₂=" << p.pi2.to_string() << "\n";
}

struct Report {
  json body;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void write(const std::string& path) {
    if (path.empty()) return;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    body["wall_seconds"] = secs;
    write_text(path, body.dump(2) + "\n");
  }
};

std::string command_echo(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) out += (i ? " " : "") + std::string(argv[i]);
  return out;
}

// ---- analyze ----

struct AnalyzeArgs {
  std::string graph;
  int k = 2;
};

int run_analyze(const AnalyzeArgs& a) {
  const Graph g = read_graph(a.graph);
  const DegreeProfile p = degree_profile(g);
  print_digest(g, p);
  std::cout << "components=" << components(g).count() << " cut_vertices=" << cut_vertices(g).size() << "\n";
  const Constants c = constants(a.k);
  std::cout << "k=" << a.k << " c_k=" << c.c << " n0=" << c.n0 << " n1=" << c.n1 << " p_k=" << c.p << "\n";
  // The degree bound and the order gate are reported separately: K_300
  // meets every degree bound but is below n1.
  const Vertex n = g.order();
  const auto sigma_at_least = [&](std::int64_t twice) {
    return p.sigma2.is_infinite() || 2 * p.sigma2.value() >= twice;
  };
  const bool bounds[4] = {
      meets_high_degree(a.k, n, p.min_degree),
      sigma_at_least(2 * (static_cast<std::int64_t>(n) - 2)),
      sigma_at_least(n + 2LL * a.k - 2),
      p.pi2.is_infinite() || meets_pk_n(a.k, n, p.pi2.value()),
  };
  const char* gates[4] = {"", "n >= n0", "n >= n1", "n >= k+2"};
  const bool gate_ok[4] = {true, n >= c.n0, n >= c.n1, n >= a.k + 2};
  int i = 0;
  for (HypothesisKind kind : {HypothesisKind::kMinDegree, HypothesisKind::kSigma2NMinus2, HypothesisKind::kSigma2Half,
                              HypothesisKind::kPi2}) {
    const HypothesisCheck h = check_hypothesis(g, p, kind, a.k);
    std::cout << "hypothesis " << to_string(kind) << ": degree bound " << (bounds[i] ? "met" : "not met");
    if (*gates[i] != '\0') std::cout << ", " << gates[i] << (gate_ok[i] ? " met" : " not met");
    std::cout << ", overall " << (h.holds ? "holds" : "fails");
    if (!h.holds && !h.detail.empty()) std::cout << " (" << h.detail << ")";
    std::cout << "\n";
    ++i;
  }
  return kOk;
}

// ---- verify ----

struct VerifyArgs {
  std::string graph;
  std::string forest;
  std::string exempt;
  int k = 2;
};

int run_verify(const VerifyArgs& a) {
  const Graph g = read_graph(a.graph);
  const EdgeListDocument doc = parse_graph_text(read_file(a.forest));
  if (doc.n != g.order()) throw Error(ErrorCode::kInvalidInput, "forest vertex count differs from the graph");
  for (const Edge& e : doc.edges) {
    if (!g.has_edge(e.u, e.v)) {
      throw Error(ErrorCode::kInvalidInput,
                  "forest edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not a graph edge");
    }
  }
  std::optional<SpanningForest> f;
  try {
    f.emplace(g, doc.edges);
  } catch (const Error& e) {
    std::cout << "INVALID: " << e.what() << "\n";
    return kRefuted;
  }
  CertificateReport r;
  if (a.exempt.empty()) {
    r = check_2k_st(*f, a.k);
  } else {
    r = check_good_tree(*f, GoodnessSpec{a.k, parse_vertex_set(read_file(a.exempt))});
  }
  if (r.valid) {
    std::cout << "VALID\n";
    return kOk;
  }
  std::cout << "INVALID";
  if (!r.reason.empty()) std::cout << ": " << r.reason;
  std::cout << "\n";
  for (const DegreeViolation& v : r.violations) {
    std::cout << "  vertex " << v.vertex << " has tree degree " << v.degree << "\n";
  }
  return kRefuted;
}

// ---- decide ----

struct DecideArgs {
  std::string graph;
  int k = 2;
  std::uint64_t budget = 100'000'000;
  int cap = -1;
  std::string out;
  std::string report;
};

int run_decide(const DecideArgs& a, const std::string& echo) {
  Report rep;
  rep.body["command"] = echo;
  const Graph g = read_graph(a.graph);
  if (!is_connected(g)) throw Error(ErrorCode::kPrecondition, "graph is disconnected");
  const DegreeProfile p = degree_profile(g);
  rep.body["input"] = digest(g, p);
  print_digest(g, p);
  const int cap = a.cap < 0 ? default_blocking_cap(a.k) : a.cap;
  const BlockingSearch b = search_k_blocking_set(g, a.k, cap);
  if (b.blocking_set) {
    std::cout << "k-blocking set " << vertices_text(*b.blocking_set) << "\n";
    rep.body["blocking_set"] = *b.blocking_set;
  } else {
    std::cout << "no blocking set up to size " << cap << (b.cap_binding ? " (cap binding)" : "") << "\n";
  }
  const ExactResult r = decide_2k_st_exact(g, a.k, a.budget);
  std::cout << to_string(r.outcome) << " after " << r.expansions << " expansions";
  if (r.outcome == ExactOutcome::kNone) {
    std::cout << (b.blocking_set ? "; blocked" : "; no blocking set; refuted by search");
  }
  std::cout << "\n";
  rep.body["outcome"] = std::string(to_string(r.outcome));
  rep.body["expansions"] = r.expansions;
  if (r.outcome == ExactOutcome::kWitness && !a.out.empty()) {
    write_text(a.out, edge_list_text(g.order(), r.witness));
    rep.body["certificate"] = a.out;
  }
  rep.write(a.report);
  switch (r.outcome) {
    case ExactOutcome::kWitness:
      return kOk;
    case ExactOutcome::kNone:
      return kRefuted;
    case ExactOutcome::kBudgetExhausted:
      return kFailed;
  }
  return kFailed;
}

// ---- construct ----

struct ConstructArgs {
  std::string graph;
  int k = 2;
  std::string theorem = "c";
  std::string mode = "strict";
  std::uint64_t seed = 0;
  std::string trace;
  std::string out;
  std::string dot;
  std::string report;
};

void print_obstruction(const Obstruction& o) {
  std::cout << "OBSTRUCTION: " << o.description << "\n";
  if (o.partition) {
    for (int i = 0; i < 4; ++i) std::cout << "  L" << i + 1 << " = " << vertices_text(o.partition->parts[i]) << "\n";
  }
  if (!o.blocking_set.empty()) std::cout << "  blocking set = " << vertices_text(o.blocking_set) << "\n";
}

int run_construct(const ConstructArgs& a, const std::string& echo) {
  Report rep;
  rep.body["command"] = echo;
  const Graph g = read_graph(a.graph);
  const DegreeProfile p = degree_profile(g);
  rep.body["input"] = digest(g, p);
  const auto kind = parse_hypothesis_kind(a.theorem);
  if (!kind) throw Error(ErrorCode::kInvalidInput, "unknown theorem " + a.theorem);
  const Mode mode = a.mode == "permissive" ? Mode::kPermissive : Mode::kStrict;
  SurrogateOptions opts;
  opts.seed = a.seed;

  PipelineResult res;
  try {
    switch (*kind) {
      case HypothesisKind::kMinDegree:
        res = construct_min_degree(g, a.k, mode, opts);
        break;
      case HypothesisKind::kSigma2NMinus2:
        res = construct_sigma2(g, a.k, SigmaBound::kNMinus2, mode, opts);
        break;
      case HypothesisKind::kSigma2Half:
        res = construct_sigma2(g, a.k, SigmaBound::kHalf, mode, opts);
        break;
      case HypothesisKind::kPi2:
        res = construct_pi2(g, a.k, mode, opts);
        break;
    }
  } catch (const ConstructionError& e) {
    if (!a.trace.empty()) write_text(a.trace, trace_to_json(e.trace()) + "\n");
    rep.body["outcome"] = "FAILED";
    rep.body["error"] = std::string(to_string(e.code()));
    rep.write(a.report);
    throw;
  } catch (const Error& e) {
    rep.body["outcome"] = "FAILED";
    rep.body["error"] = std::string(to_string(e.code()));
    rep.write(a.report);
    throw;
  }
  if (!a.trace.empty()) {
    write_text(a.trace, trace_to_json(res.trace) + "\n");
    rep.body["trace"] = a.trace;
  }
  std::cout << "case " << to_string(res.trace.case_taken) << "\n";
  if (res.outcome == Outcome::kObstruction) {
    print_obstruction(*res.obstruction);
    rep.body["outcome"] = "OBSTRUCTION";
    rep.write(a.report);
    return kRefuted;
  }
  std::cout << "WITNESS: [2," << a.k << "]-spanning tree with " << res.tree.size() << " edges\n";
  rep.body["outcome"] = "WITNESS";
  if (!a.out.empty()) {
    write_text(a.out, edge_list_text(g.order(), res.tree));
    rep.body["certificate"] = a.out;
  }
  if (!a.dot.empty()) {
    std::ostringstream out;
    write_dot(out, g, res.tree);
    write_text(a.dot, out.str());
  }
  rep.write(a.report);
  return kOk;
}

// ---- generate ----

struct GenerateArgs {
  std::string family;
  int k = 2;
  std::vector<int> sizes;
  Vertex n = 0;
  int l3_missing = 0;
  std::string kind = "sum-n-2";
  std::string shape = "auto";
  std::uint64_t seed = 0;
  std::string out;
};

void emit(const Graph& g, const Labels& labels, const std::string& prefix) {
  const DegreeProfile p = degree_profile(g);
  print_digest(g, p);
  if (prefix.empty()) return;
  const std::vector<Edge> edges = g.edges();
  write_text(prefix, edge_list_text(g.order(), edges));
  json l = json::object();
  for (const auto& [name, vs] : labels) l[name] = vs;
  write_text(prefix + ".labels.json", l.dump(2) + "\n");
  std::cout << "wrote " << prefix << " and " << prefix << ".labels.json\n";
}

int run_generate(const GenerateArgs& a) {
  if (a.family == "L") {
    if (a.sizes.size() != 4) throw Error(ErrorCode::kInfeasibleParams, "--sizes needs four values");
    FamilyParams params;
    params.k = a.k;
    std::copy(a.sizes.begin(), a.sizes.end(), params.sizes.begin());
    params.l3_missing = a.l3_missing;
    params.seed = a.seed;
    const LFamilyInstance inst = gen_L_family(params);
    emit(inst.graph, inst.labels(), a.out);
  } else if (a.family == "gprime") {
    const GPrimeInstance inst = gen_Gprime(a.k, a.n);
    emit(inst.graph, inst.labels(), a.out);
  } else {
    const auto kind = parse_hypothesis_kind(a.kind);
    if (!kind) throw Error(ErrorCode::kInfeasibleParams, "unknown hypothesis " + a.kind);
    const auto shape = parse_random_shape(a.shape);
    if (!shape) throw Error(ErrorCode::kInfeasibleParams, "unknown shape " + a.shape);
    const Graph g = gen_random_hypothesis(*kind, a.k, a.n, a.seed, *shape);
    emit(g, {}, a.out);
  }
  return kOk;
}

// ---- stress ----

struct StressArgs {
  std::string kind;
  int count = 100;
  std::uint64_t seed = 1;
  Vertex max_n = 0;
};

int ceil_two_sqrt(Vertex n) {
  int d = static_cast<int>(std::ceil(2.0 * std::sqrt(static_cast<double>(n))));
  while (d > 0 && static_cast<std::int64_t>(d - 1) * (d - 1) >= 4LL * n) --d;
  while (static_cast<std::int64_t>(d) * d < 4LL * n) ++d;
  return d;
}

int stress_lemma31(const StressArgs& a) {
  const Vertex max_n = a.max_n > 0 ? a.max_n : 200;
  std::mt19937_64 rng(a.seed);
  int held = 0;
  for (int i = 0; i < a.count; ++i) {
    const std::uint64_t seed = rng();
    const Vertex n = static_cast<Vertex>(std::min<std::uint64_t>(max_n, 16 + seed % (max_n - 15)));
    const int floor = ceil_two_sqrt(n);
    Graph g;
    // Block graphs need room for two blocks per component to have cut vertices.
    const int room = n / (2 * (floor + 2));
    const int parts = std::min(1 + static_cast<int>(seed % 2), room);
    if (i % 2 == 0 || parts == 0) {
      g = gen_min_degree_graph(n, floor, seed);
    } else {
      g = gen_block_graph(n, floor + 2, parts, seed);
    }
    const CutCompoBound b = check_cut_compo_bound(g);
    if (!b.holds) {
      std::cout << "violation: n=" << n << " cut=" << b.cut << " compo=" << b.compo << " seed=" << seed << "\n";
      return kRefuted;
    }
    ++held;
  }
  std::cout << held << "/" << a.count << " hold\n";
  return kOk;
}

Graph random_connected(Vertex n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  // Random spanning tree first, then extra edges.
  for (Vertex v = 1; v < n; ++v) edges.push_back(make_edge(v, static_cast<Vertex>(rng() % v)));
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return build_graph(n, edges);
}

int stress_oracle(const StressArgs& a) {
  const Vertex max_n = a.max_n > 0 ? a.max_n : 9;
  std::mt19937_64 rng(a.seed);
  int agreements = 0, blocked = 0, witnesses = 0;
  for (int i = 0; i < a.count; ++i) {
    const std::uint64_t seed = rng();
    std::mt19937_64 local(seed);
    const Vertex n = static_cast<Vertex>(2 + local() % (max_n - 1));
    const double p = 0.1 + 0.8 * std::uniform_real_distribution<double>(0, 1)(local);
    const Graph g = random_connected(n, p, local);
    for (int k : {2, 3}) {
      const ExactResult exact = decide_2k_st_exact(g, k, 100'000'000);
      const bool naive = testing::naive_find_2k_st(g, k).has_value();
      const bool found = exact.outcome == ExactOutcome::kWitness;
      const bool has_block = find_k_blocking_set(g, k, n).has_value();
      if (exact.outcome == ExactOutcome::kBudgetExhausted || found != naive || (has_block && found)) {
        std::cout << "disagreement: n=" << n << " k=" << k << " seed=" << seed << "\n";
        return kRefuted;
      }
      ++agreements;
      blocked += has_block;
      witnesses += found;
    }
  }
  std::cout << "agree on all instances (" << agreements << " checks, " << witnesses << " witnesses, " << blocked
            << " blocked)\n";
  return kOk;
}

int stress_sharpness(const StressArgs&) {
  // sigma2 of each family against the degree-sum bound it just misses.
  std::cout << "family  k  n  sigma2  expected  threshold  exact\n";
  auto row = [](const char* name, int k, const Graph& g, double expected, double threshold) {
    const Vertex n = g.order();
    const DegreeProfile p = degree_profile(g);
    std::string exact = "-";
    if (n <= 13) exact = std::string(to_string(decide_2k_st_exact(g, k, 100'000'000).outcome));
    std::cout << name << "  " << k << "  " << n << "  " << p.sigma2.to_string() << "  " << expected << "  "
              << threshold << "  " << exact << "\n";
  };
  for (int k : {2, 3}) {
    for (int l4 : {6, 9, 20}) {
      FamilyParams params;
      params.k = k;
      params.sizes = {1, 1, 1, l4};
      const Vertex n = 3 + l4;
      row("L     ", k, gen_L_family(params).graph, n - 2, n - 2);
    }
    for (Vertex n : {2 * k + 7, 2 * k + 9, 41}) {
      row("gprime", k, gen_Gprime(k, n).graph, (n + 2 * k - 3) / 2.0, (n + 2 * k - 2) / 2.0);
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"histk: [2,k]-spanning trees"};
  app.require_subcommand(1);
  const std::string echo = command_echo(argc, argv);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Degree statistics and hypothesis checks");
  analyze->add_option("graph", an.graph)->required();
  analyze->add_option("-k,--k", an.k);

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "Check a [2,k]-spanning tree or (k,U)-good tree certificate");
  verify->add_option("graph", ve.graph)->required();
  verify->add_option("forest", ve.forest)->required();
  verify->add_option("-k,--k", ve.k);
  verify->add_option("-u,--exempt", ve.exempt, "vertex-set file U for the good-tree check");

  DecideArgs de;
  auto* decide = app.add_subcommand("decide", "Exact existence decision");
  decide->add_option("graph", de.graph)->required();
  decide->add_option("-k,--k", de.k);
  decide->add_option("--budget", de.budget);
  decide->add_option("--blocking-cap", de.cap);
  decide->add_option("--out", de.out);
  decide->add_option("--report", de.report);

  ConstructArgs co;
  auto* construct = app.add_subcommand("construct", "Run a constructive pipeline");
  construct->add_option("graph", co.graph)->required();
  construct->add_option("-k,--k", co.k);
  construct->add_option("--theorem", co.theorem, "c | 2 | 3 | 4 (or min-degree, sum-n-2, sum-half, product)");
  construct->add_option("--mode", co.mode)->check(CLI::IsMember({"strict", "permissive"}));
  construct->add_option("--seed", co.seed);
  construct->add_option("--trace", co.trace);
  construct->add_option("--out", co.out);
  construct->add_option("--dot", co.dot);
  construct->add_option("--report", co.report);

  GenerateArgs ge;
  auto* generate = app.add_subcommand("generate", "Write a family member or a random hypothesis graph");
  generate->add_option("family", ge.family)->required()->check(CLI::IsMember({"L", "gprime", "random"}));
  generate->add_option("-k,--k", ge.k);
  generate->add_option("--sizes", ge.sizes)->delimiter(',');
  generate->add_option("-n,--n", ge.n);
  generate->add_option("--l3-missing", ge.l3_missing);
  generate->add_option("--kind", ge.kind);
  generate->add_option("--shape", ge.shape);
  generate->add_option("--seed", ge.seed);
  generate->add_option("--out", ge.out);

  StressArgs st;
  auto* stress = app.add_subcommand("stress", "Property sweeps on random instances");
  stress->add_option("kind", st.kind)->required()->check(
      CLI::IsMember({"lemma31", "oracle-agreement", "sharpness"}));
  stress->add_option("--count", st.count);
  stress->add_option("--seed", st.seed);
  stress->add_option("--max-n", st.max_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*analyze) return run_analyze(an);
    if (*verify) return run_verify(ve);
    if (*decide) return run_decide(de, echo);
    if (*construct) return run_construct(co, echo);
    if (*generate) return run_generate(ge);
    if (st.kind == "lemma31") return stress_lemma31(st);
    if (st.kind == "oracle-agreement") return stress_oracle(st);
    return stress_sharpness(st);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code(e.code());
  }
}
