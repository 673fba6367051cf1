#ifndef HYPERCHROM_SETOPS_HPP
#define HYPERCHROM_SETOPS_HPP

#include <algorithm>
#include <vector>

// Small helpers over sorted int vectors. Edges and stars are stored sorted,
// so intersections and set tests are linear merges; at the instance sizes
// this library targets that beats any fancier representation.

namespace hyperchrom {

inline bool is_sorted_unique(const std::vector<int>& a) {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i - 1] >= a[i]) return false;
  return true;
}

inline int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (a[i] > b[j]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

inline bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (a[i] > b[j]) ++j;
    else return true;
  }
  return false;
}

inline std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool contains(const std::vector<int>& a, int x) {
  return std::binary_search(a.begin(), a.end(), x);
}

/// |A Δ B| for sorted sets; a metric on finite sets.
inline int sym_diff_distance(const std::vector<int>& a, const std::vector<int>& b) {
  return static_cast<int>(a.size() + b.size()) - 2 * intersection_size(a, b);
}

}  // namespace hyperchrom

#endif
