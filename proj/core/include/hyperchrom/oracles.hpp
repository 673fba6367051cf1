#ifndef HYPERCHROM_ORACLES_HPP
#define HYPERCHROM_ORACLES_HPP

#include <vector>

#include "hyperchrom/hypergraph.hpp"

namespace hyperchrom {

class OracleTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Brute-force reference implementations, deliberately sharing no search
// logic with the production code. They exist to cross-check the fast paths
// on small instances and are exposed so the CLI can run the comparison on
// demand.

/// Chromatic index by trying q = 1, 2, ... and enumerating assignments with
/// immediate conflict rejection. Refuses more than 10 edges.
int oracle_chromatic_index(const Hypergraph& h);

/// Automorphism count by filtering all n! vertex permutations. Refuses more
/// than 8 vertices.
long long oracle_automorphism_order(const Hypergraph& h);

/// Helly property by literally enumerating all subfamilies of size >= 2.
/// Refuses more than 12 sets.
bool oracle_helly(const std::vector<std::vector<int>>& sets);

}  // namespace hyperchrom

#endif
