// Release gate: every headline capability gets one PASS/FAIL line. The
// checks deliberately re-derive expected numbers instead of reusing the
// library's own intermediate results wherever an independent path exists.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperchrom/bounds.hpp"
#include "hyperchrom/coloring.hpp"
#include "hyperchrom/helly.hpp"
#include "hyperchrom/instances.hpp"
#include "hyperchrom/oracles.hpp"
#include "hyperchrom/rational.hpp"
#include "hyperchrom/report.hpp"
#include "hyperchrom/setops.hpp"
#include "hyperchrom/symmetry.hpp"

using namespace hyperchrom;

namespace {

struct Gate {
  std::vector<std::string> failures;
  void expect(bool cond, const std::string& what) {
    if (!cond) failures.push_back(what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

GeneratorConfig sweep_config(std::uint64_t seed, int max_n, int max_m, int max_extra) {
  GeneratorConfig cfg;
  cfg.n = 4 + static_cast<int>(seed % (max_n - 3));
  cfg.m = 1 + static_cast<int>((seed * 7 + 3) % max_m);
  cfg.size_min = 2;
  cfg.size_max = 2 + static_cast<int>(seed % (max_extra + 1));
  if (cfg.size_max > cfg.n) cfg.size_max = cfg.n;
  cfg.seed = seed;
  return cfg;
}

void fano_regression(Gate& g) {
  const auto start = std::chrono::steady_clock::now();
  const Hypergraph h = fano();
  ConjectureReport r = analyze(h);

  g.expect(r.coloring.q == 7, "q != 7");
  g.expect(r.m.delta == 3 && r.m.delta2 == 6, "delta/delta2 off");
  g.expect(r.m.rank == 3 && r.m.antirank == 3, "rank/antirank off");
  g.expect(r.direct.holds && r.direct.equality && r.direct.bound == 7,
           "direct check should hold with equality at 7");

  g.expect(r.symmetry.computed, "symmetry section skipped");
  g.expect(r.symmetry.aut.order() == 168, "|Aut| != 168");
  g.expect(oracle_automorphism_order(h) == 168, "permutation oracle disagrees on |Aut|");
  g.expect(r.symmetry.color_preserving.order() == 1, "|T| != 1");
  g.expect(r.symmetry.burnside.bound == 7, "burnside bound != 7");
  g.expect(r.symmetry.edge_orbits.size() == 7, "orbit count != 7");

  g.expect(r.analyses.size() == 1, "expected a single pivot analysis");
  if (!r.analyses.empty()) {
    const PivotAnalysis& a = r.analyses.front();
    g.expect(a.split.kind == CaseKind::Case2, "pivot should be Case 2");
    g.expect(a.split.missing_colors.size() == 4, "expected 4 missing colors");
    g.expect(a.per_color.size() == 4, "expected 4 per-color reports");
    for (const BoundsReport& b : a.per_color) {
      g.expect(b.gamma_size == 3, "gamma size != 3 for a missing color");
      g.expect(b.ratio_bound.lhs == Rational(10) && b.ratio_bound.rhs == Rational(13) &&
                   b.ratio_bound.holds,
               "ratio bound should read exactly 10 <= 13");
    }
    g.expect(a.helly.applicable && !a.helly.helly.helly, "gamma hypergraph should fail helly");
    g.expect(a.helly.helly.witness.size() == 4, "helly witness should have 4 sets");
  }
  const double elapsed = seconds_since(start);
  g.expect(elapsed < 5.0, "fano analysis exceeded 5 s");
}

void published_arithmetic(Gate& g) {
  // Orbit-average example: a group of 64 elements, half fixing 11 edges and
  // half fixing 1, certifies 4 colors <= 6 orbits.
  std::vector<long long> counts(32, 11);
  counts.insert(counts.end(), 32, 1);
  const BurnsideAverage avg = burnside_orbit_average(counts);
  g.expect(avg.sum == 32 * 11 + 32 * 1, "fixed-count sum off");
  g.expect(avg.order == 64, "group order off");
  g.expect(avg.bound == 6, "orbit average != 6");
  g.expect(4 <= avg.bound, "4 <= 6 does not certify");

  // Ratio example with q = 7, |Gamma| = 2, antirank = 3, delta2 = 20.
  // The printed arithmetic reads (2/2)*20 + 1 = 21 against a left side of
  // 9; both the literal numbers and the evaluator's stricter right side
  // must agree exactly.
  const Rational printed = Rational(2, 2) * Rational(20) + Rational(1);
  g.expect(printed == Rational(21), "printed right side != 21");
  g.expect(printed.str() == "21", "printed right side renders wrong");
  g.expect(Rational(9) <= printed, "9 <= 21 does not certify");

  const Inequality faithful = ratio_bound_evaluate(7, 2, 3, 20);
  g.expect(faithful.lhs == Rational(9), "evaluator left side != 9");
  g.expect(faithful.holds, "evaluator inequality should hold");
  g.expect(printed <= faithful.rhs, "printed bound should imply the evaluated one");
}

void oracle_equivalence(Gate& g) {
  constexpr int kSeeds = 500;

  auto timed = [&g](const std::string& label, auto&& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const double elapsed = seconds_since(start);
    if (elapsed >= 120.0) g.expect(false, label + " sweep exceeded 2 minutes");
  };

  timed("chromatic", [&] {
    for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
      const Hypergraph h = random_linear(sweep_config(seed, 10, 8, 2));
      if (chromatic_index_exact(h, seed).q != oracle_chromatic_index(h))
        g.expect(false, "chromatic mismatch on " + h.name());
    }
  });

  timed("automorphism", [&] {
    for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
      const Hypergraph h = random_linear(sweep_config(seed, 8, 8, 2));
      if (automorphisms(h).order() != oracle_automorphism_order(h))
        g.expect(false, "automorphism order mismatch on " + h.name());
    }
  });

  timed("helly", [&] {
    std::uint64_t state = 12345;
    auto next = [&state] {
      state += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = state;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    };
    for (int trial = 0; trial < kSeeds; ++trial) {
      std::vector<std::vector<int>> family(2 + next() % 10);
      for (auto& set : family) {
        const int size = 1 + static_cast<int>(next() % 4);
        for (int k = 0; k < size; ++k) {
          const int element = static_cast<int>(next() % 10);
          if (!std::count(set.begin(), set.end(), element)) set.push_back(element);
        }
        std::sort(set.begin(), set.end());
      }
      if (helly_check(family).helly != oracle_helly(family))
        g.expect(false, "helly verdict mismatch at trial " + std::to_string(trial));
    }
  });

  timed("burnside-orbit", [&] {
    for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
      const Hypergraph h = random_linear(sweep_config(seed, 10, 8, 2));
      const EdgeColoring c = chromatic_index_exact(h, seed);
      const AutomorphismSet t = color_preserving_subgroup(automorphisms(h), h, c);
      if (burnside_bound(t, h).bound != static_cast<long long>(orbits(t, h).size()))
        g.expect(false, "burnside bound != orbit count on " + h.name());
    }
  });
}

void theorem_battery(Gate& g) {
  constexpr int kSeeds = 1000;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    GeneratorConfig cfg;
    cfg.n = 4 + static_cast<int>(seed % 9);
    cfg.m = 1 + static_cast<int>((seed * 5 + 2) % 12);
    cfg.size_min = 2;
    cfg.size_max = 2 + static_cast<int>(seed % 4);
    if (cfg.size_max > cfg.n) cfg.size_max = cfg.n;
    cfg.seed = seed;
    const Hypergraph h = random_linear(cfg);

    AnalyzeOptions opts;
    opts.solver_seed = seed;
    const ConjectureReport r = analyze(h, opts);

    if (!r.sandwich.holds) g.expect(false, "sandwich violated on " + h.name());
    if (r.coloring.q < r.m.delta) g.expect(false, "q < delta on " + h.name());
    if (!r.direct.holds) {
      const std::string path = h.name() + ".counterexample.json";
      std::ofstream out(path);
      out << counterexample_json(h, r);
      g.expect(false, "q > delta2 + 1 on " + h.name() + "; wrote " + path);
    }
    if (!r.pair_adjacency.holds) g.expect(false, "pair adjacency violated on " + h.name());
    if (r.symmetry.computed) {
      if (!r.symmetry.orbits_monochromatic)
        g.expect(false, "non-monochromatic orbit on " + h.name());
      if (r.coloring.q > r.symmetry.burnside.bound)
        g.expect(false, "q exceeds burnside bound on " + h.name());
    }
    for (const PivotAnalysis& a : r.analyses) {
      for (const BoundsReport& b : a.per_color)
        if (!b.ratio_bound.holds)
          g.expect(false, "ratio bound failed on " + h.name() + " c0=" + std::to_string(b.c0));
      for (const Certificate& c : a.certificates)
        if (!r.direct.holds)
          g.expect(false, c.kind + " certificate without direct check on " + h.name());
    }
  }
}

void constructed_sufficiency(Gate& g) {
  {
    const HellyPositiveInstance inst = helly_positive(3);
    AnalyzeOptions opts;
    opts.pivot_label = inst.pivot_label;
    const ConjectureReport r = analyze(inst.hypergraph, opts);
    bool fired = false;
    for (const PivotAnalysis& a : r.analyses)
      if (a.helly.certificate) {
        fired = true;
        g.expect(a.helly.fires && a.helly.helly.helly, "helly certificate without helly gamma");
        g.expect(a.helly.two_delta.holds, "q <= 2*delta not verified");
        g.expect(r.coloring.q <= 2 * r.m.delta, "q <= 2*delta fails numerically");
      }
    g.expect(fired, "helly sufficiency did not fire on the pencil instance");
    g.expect(r.direct.holds, "direct check must hold alongside the certificate");
  }
  {
    const HellyPositiveInstance inst = helly_positive(8);
    AnalyzeOptions opts;
    opts.pivot_label = inst.pivot_label;
    const ConjectureReport r = analyze(inst.hypergraph, opts);
    bool fired = false;
    for (const PivotAnalysis& a : r.analyses)
      if (a.clique.certificate) {
        fired = true;
        g.expect(a.clique.k == 3 && a.clique.threshold == 7, "clique threshold should be 7");
        g.expect(a.clique.family.size() == 8, "intersecting family should have 8 edges");
        g.expect(a.clique.fires, "family of 8 should exceed the threshold");
        g.expect(a.clique.common_vertex.has_value(), "no common vertex reported");
        if (a.clique.common_vertex) {
          for (int e : a.clique.family)
            if (!contains(inst.hypergraph.edge(e), *a.clique.common_vertex))
              g.expect(false, "reported common vertex misses a family edge");
          g.expect(inst.hypergraph.label(*a.clique.common_vertex) == inst.hub_label,
                   "common vertex should be the hub");
        }
      }
    g.expect(fired, "clique condition did not fire on the 8-pencil instance");
    g.expect(r.direct.holds, "direct check must hold alongside the certificate");
  }
}

}  // namespace

int main() {
  struct Criterion {
    std::string label;
    void (*run)(Gate&);
  };
  const std::vector<Criterion> criteria{
      {"fano regression", fano_regression},
      {"published arithmetic", published_arithmetic},
      {"oracle equivalence sweeps", oracle_equivalence},
      {"theorem battery", theorem_battery},
      {"constructed sufficiency instances", constructed_sufficiency},
  };

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Gate g;
    const auto start = std::chrono::steady_clock::now();
    criteria[i].run(g);
    const double elapsed = seconds_since(start);

    std::ostringstream line;
    line << "[" << (i + 1) << "/" << criteria.size() << "] " << criteria[i].label << ": "
         << (g.failures.empty() ? "PASS" : "FAIL") << " (" << elapsed << " s)";
    std::cout << line.str() << "\n";
    for (const std::string& f : g.failures) std::cout << "    - " << f << "\n";
    all_ok = all_ok && g.failures.empty();
  }
  return all_ok ? 0 : 1;
}
