#ifndef HYPERCHROM_BOUNDS_HPP
#define HYPERCHROM_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyperchrom/helly.hpp"
#include "hyperchrom/quotient.hpp"
#include "hyperchrom/rational.hpp"

namespace hyperchrom {

class AntirankDegenerate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Inequality {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

inline Inequality make_inequality(std::string name, Rational lhs, Rational rhs) {
  bool holds = lhs <= rhs;
  return Inequality{std::move(name), lhs, rhs, holds};
}

/// Everything the quotient machinery says about one missing color c0.
struct BoundsReport {
  int c0 = -1;
  int gamma_size = 0;
  int star_color_count = 0;   // |colors at the pivot's class|
  int key_union_size = 0;     // colors mentioned by the Gamma keys
  int hstar_degree2_c0 = 0;   // two-section degree of c0 inside H*
  DerivedHypergraph hstar;
  Inequality union_bound;     // q <= |C*| + |union of keys|
  Inequality hstar_bound;     // q <= |C*| + deg2_{H*}(c0) + 1
  Inequality degree_bound;    // q <= |C*| + (Delta-1)|Gamma| + 1
  Inequality ratio_bound;     // q + |Gamma| <= ((|Gamma|+1)/(ar-1)) Delta2 + 1
  Inequality gamma_antirank;  // |Gamma|+1 <= ar-1 (a sufficient condition)
  bool certificate = false;   // gamma_antirank held, so q <= Delta2 + 1 follows
};

/// Evaluate all per-c0 bounds for a Case 2 pivot. `q` and the global
/// metrics come from the caller so the numbers in one report are consistent.
BoundsReport bounds_report(const std::vector<ThetaClass>& thetas, const CaseSplit& split,
                           int c0, int q, const Metrics& m);

/// The ratio inequality alone, evaluated in exact rational arithmetic.
/// Throws AntirankDegenerate when ar < 2 (cannot happen for validated
/// instances, where every edge has two vertices).
Inequality ratio_bound_evaluate(long long q, long long gamma_size, long long antirank,
                                long long delta2);

struct HellySufficiency {
  bool applicable = false;  // ar >= 3 and Case 2
  bool fires = false;       // gamma hypergraph has the Helly property
  HellyResult helly;
  DerivedHypergraph hgamma;
  // Asserted identities on firing; reported so a reader can re-check.
  long long q_decomposition_lhs = 0;  // q
  long long q_decomposition_rhs = 0;  // |C*| + |missing|
  Inequality two_delta;               // q <= 2*Delta
  bool certificate = false;
};

/// Sufficient condition: antirank >= 3 plus Helly gamma hypergraph give
/// q <= 2*Delta <= Delta2, so the q <= Delta2 + 1 bound follows. The proof
/// chain is re-verified numerically on firing rather than trusted.
HellySufficiency helly_sufficiency_check(const EdgeColoring& coloring, const CaseSplit& split,
                                         const std::vector<ThetaClass>& thetas,
                                         const Metrics& m);

struct CliqueCondition {
  bool applicable = false;  // k-uniform, k >= 3, Case 2
  int k = 0;
  long long threshold = 0;  // k*k - k + 1
  bool family_found = false;
  std::vector<int> family;  // edge indices, pairwise intersecting, all
                            // missing colors represented exactly
  bool fires = false;       // |family| > threshold
  std::optional<int> common_vertex;
  bool certificate = false;  // common vertex verified directly
};

/// For k-uniform instances: a pairwise-intersecting family of
/// missing-colored edges covering the whole missing set and larger than
/// k^2-k+1 must be a pencil. The common vertex is searched for directly
/// (the conclusion is checked, not assumed); finding it certifies
/// q <= Delta2 + 1 through the same two-Delta argument.
CliqueCondition clique_condition_check(const Hypergraph& h, const EdgeColoring& coloring,
                                       const CaseSplit& split, const Metrics& m);

}  // namespace hyperchrom

#endif
