#ifndef HYPERCHROM_INSTANCES_HPP
#define HYPERCHROM_INSTANCES_HPP

#include <cstdint>
#include <string>

#include "hyperchrom/hypergraph.hpp"

namespace hyperchrom {

class InfeasibleConfig : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The 7-point projective plane: points "1".."7", lines 123, 145, 167, 246,
/// 257, 347, 356. Pairwise-intersecting, so its chromatic index equals its
/// line count.
Hypergraph fano();

/// `petals` edges of size `edge_size` glued at a single center vertex.
Hypergraph flower(int petals, int edge_size);

struct HellyPositiveInstance {
  Hypergraph hypergraph;
  /// The vertex whose analysis exhibits the missing-color structure. Not
  /// the two-section maximum (that is the hub, which sees every color), so
  /// pass it as a pivot override when analyzing.
  std::string pivot_label;
  std::string hub_label;
};

/// 3-uniform instance built so that, for every minimum coloring, the pivot
/// misses exactly `missing` colors and all of them occur on the hub's
/// pencil: the hub has degree q, forcing its star to be a rainbow. The
/// gamma hypergraph at the pivot is therefore Helly, and for missing > k^2-k+1
/// the pencil provides the pairwise-intersecting family with a common
/// vertex. Requires missing >= 2.
HellyPositiveInstance helly_positive(int missing);

struct GeneratorConfig {
  int n = 0;
  int m = 0;
  int size_min = 2;
  int size_max = 2;
  std::uint64_t seed = 0;
};

/// Seeded rejection sampler over linear loopless hypergraphs. Edge sizes
/// are drawn uniformly in [size_min, size_max]; vertex sets are re-drawn on
/// linearity violations within a budget of n*m*10 tries, so fewer than m
/// edges is a legal outcome. Vertices that end up unused are dropped to
/// keep the output valid. Deterministic per seed.
Hypergraph random_linear(const GeneratorConfig& cfg);

}  // namespace hyperchrom

#endif
