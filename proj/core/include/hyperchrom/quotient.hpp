#ifndef HYPERCHROM_QUOTIENT_HPP
#define HYPERCHROM_QUOTIENT_HPP

#include <string>
#include <vector>

#include "hyperchrom/coloring.hpp"
#include "hyperchrom/hypergraph.hpp"

namespace hyperchrom {

class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a structural consequence of minimality fails, i.e. the
/// caller passed a coloring that uses more colors than necessary.
class NonMinimalColoring : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vertices with identical stars, together with the colors seen on that
/// star. Under linearity a class star of size >= 2 pins the class to a
/// single vertex; size-1 stars group the interior of one edge.
struct SimClass {
  std::vector<int> members;  // sorted vertex indices
  std::vector<int> star;     // shared edge set
  std::vector<int> colors;   // sorted distinct colors on the star
};

/// Partition of the vertices by star equality, ordered by smallest member.
std::vector<SimClass> sim_partition(const Hypergraph& h, const EdgeColoring& coloring);

/// Vertex with maximum two-section degree; ties go to the smallest index.
int pick_pivot(const Hypergraph& h);

/// All vertices attaining the maximum two-section degree, ascending.
std::vector<int> pivot_candidates(const Hypergraph& h);

enum class CaseKind {
  Case1,          // no color is missing at the pivot: q = deg(v)
  SingleMissing,  // exactly one missing color: q <= Delta + 1 directly
  Case2,          // at least two missing colors: quotient machinery applies
};

struct CaseSplit {
  CaseKind kind = CaseKind::Case1;
  int pivot = -1;
  std::vector<int> star_colors;     // colors present at the pivot's class
  std::vector<int> missing_colors;  // colors absent from the pivot's star
};

CaseSplit classify_case(const Hypergraph& h, const EdgeColoring& coloring, int pivot);

/// A group of similarity classes sharing one star-color set ("key").
struct ThetaClass {
  std::vector<int> key;            // sorted color set
  std::vector<int> class_indices;  // indices into the sim partition
};

/// Omega = similarity classes whose color set meets the missing set; theta
/// groups them by color-set equality. Ordered by key, lexicographically.
/// Throws NotApplicable in Case 1.
std::vector<ThetaClass> omega_theta(const CaseSplit& split,
                                    const std::vector<SimClass>& classes);

/// Indices (into the theta list) of classes whose key contains c0 plus at
/// least one other missing color. Requires Case 2 and c0 missing.
std::vector<int> gamma(const std::vector<ThetaClass>& thetas, const CaseSplit& split, int c0);

/// A theta class witnessing that missing colors c0 and ci meet: its key
/// contains both. Minimality forces such a class to exist; if none does,
/// the two color classes could merge, so NonMinimalColoring is thrown with
/// that factual message. Doubles as a minimality sanity check.
const ThetaClass& pair_witness(const std::vector<ThetaClass>& thetas, const CaseSplit& split,
                               int c0, int ci);

/// Hypergraph-shaped derived structure. Unlike Hypergraph it is not
/// validated for linearity (the color hypergraph H* genuinely is not
/// linear) and may carry singleton edges (a Gamma set can have one member).
struct DerivedHypergraph {
  std::string name;
  std::vector<std::string> vertex_names;
  std::vector<std::vector<int>> edges;          // sorted member indices
  std::vector<std::vector<int>> edge_sources;   // e.g. colors that produced each edge
  bool merged_duplicates = false;
};

/// H* for a fixed c0: vertices are colors (union of the Gamma keys), one
/// edge per Gamma member, namely its key. Every key contains c0, so in the
/// two-section of H* the color c0 touches every other vertex.
DerivedHypergraph star_color_hypergraph(const std::vector<ThetaClass>& thetas,
                                        const std::vector<int>& gamma_members,
                                        const CaseSplit& split, int c0);

/// H_Gamma: vertices are the theta classes appearing in some Gamma set, one
/// edge per missing color's Gamma set. Equal Gamma sets are merged; the
/// sources field keeps which colors produced each merged edge and
/// merged_duplicates flags that it happened.
DerivedHypergraph gamma_hypergraph(const CaseSplit& split,
                                   const std::vector<ThetaClass>& thetas);

}  // namespace hyperchrom

#endif
