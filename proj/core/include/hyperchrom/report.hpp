#ifndef HYPERCHROM_REPORT_HPP
#define HYPERCHROM_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyperchrom/bounds.hpp"
#include "hyperchrom/coloring.hpp"
#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/quotient.hpp"
#include "hyperchrom/symmetry.hpp"

namespace hyperchrom {

class UnknownPivot : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnalyzeOptions {
  std::uint64_t solver_seed = 0;
  /// Force the pivot to this vertex instead of the two-section-degree
  /// maximiser. Every bound evaluated downstream only uses that the pivot
  /// is some vertex, so overriding stays sound.
  std::string pivot_label;
  bool all_pivots = false;
  int automorphism_cap = 12;
  bool oracle_check = false;
};

/// The headline inequality q <= Delta2 + 1, checked on the exact q.
struct DirectCheck {
  long long q = 0;
  long long bound = 0;  // delta2 + 1
  bool holds = false;
  bool equality = false;  // extremal: q == Delta2 + 1
};

/// A verified sufficient condition that fired for this instance. Only
/// emitted when the implied inequality was also checked numerically.
struct Certificate {
  std::string kind;  // single_missing | gamma_antirank | helly_gamma | uniform_pencil
  int c0 = -1;       // missing color it is tied to, or -1
  std::string detail;
};

struct PivotAnalysis {
  int pivot = -1;
  bool pivot_is_max = false;  // attains the maximum two-section degree
  CaseSplit split;
  std::vector<ThetaClass> thetas;       // empty in Case 1
  std::vector<BoundsReport> per_color;  // Case 2 only: one entry per missing color
  HellySufficiency helly;
  CliqueCondition clique;
  std::vector<Certificate> certificates;
};

struct SymmetrySection {
  bool computed = false;
  std::string skip_reason;
  AutomorphismSet aut;
  AutomorphismSet color_preserving;
  std::vector<std::vector<int>> edge_orbits;  // under the color-preserving subgroup
  BurnsideBound burnside;
  bool orbits_monochromatic = false;  // re-checked, not assumed
  bool burnside_bounds_q = false;     // q <= orbit count
};

struct OracleAgreement {
  bool ran = false;
  std::string skip_reason;
  long long oracle_value = 0;
  long long fast_value = 0;
  bool agree = false;
};

/// Brute-force cross-checks, run only on request and only within the
/// oracle size caps.
struct OracleSection {
  bool requested = false;
  OracleAgreement chromatic;
  OracleAgreement automorphism_order;
  OracleAgreement helly;  // verdict on the first Case-2 gamma hypergraph, 1 = Helly
};

struct ConjectureReport {
  std::string name;
  std::vector<std::string> labels;
  Metrics m;
  SandwichCheck sandwich;
  EdgeColoring coloring;
  PairAdjacency pair_adjacency;
  DirectCheck direct;
  std::vector<SimClass> classes;
  std::vector<PivotAnalysis> analyses;
  SymmetrySection symmetry;
  OracleSection oracle;
  bool any_certificate = false;
};

/// Full pipeline: exact chromatic index, metrics and sandwich, minimality
/// consequences, the quotient machinery at each requested pivot, symmetry
/// bounds, the direct check, and optional oracle comparison.
ConjectureReport analyze(const Hypergraph& h, const AnalyzeOptions& opts = {});

/// Machine-readable report. Colors are raw 0-based integers; exact
/// rationals are decimal strings like "10" or "31/2".
std::string report_json(const ConjectureReport& r);

/// Human-readable report; colors are displayed 1-based as c1..cq.
std::string report_text(const ConjectureReport& r);

/// 0 when the direct check holds, 2 when it is violated.
int report_exit_code(const ConjectureReport& r);

/// Self-contained artifact for a violated direct check: the instance, the
/// coloring that needs too many colors, and the metrics.
std::string counterexample_json(const Hypergraph& h, const ConjectureReport& r);

}  // namespace hyperchrom

#endif
