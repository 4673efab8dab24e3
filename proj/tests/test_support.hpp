#pragma once

// Helpers shared by the test binaries. The oracles here are written against
// raw image arrays and std::next_permutation so they stay independent of the
// library code paths they check.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gmf/json_io.hpp"
#include "gmf/permutation.hpp"

namespace gmf::test {

inline Permutation cyc(const std::string& text, int n) { return parse_cycle_notation(text, n); }

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

/// Every 1-based image array of degree n, lexicographic order.
inline std::vector<std::vector<int>> all_image_arrays(int n) {
  std::vector<int> a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

inline std::vector<int> compose_images(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i] - 1)];
  return r;
}

inline int moved_count(const std::vector<int>& images) {
  int moved = 0;
  for (std::size_t i = 0; i < images.size(); ++i) moved += images[i] != static_cast<int>(i + 1);
  return moved;
}

}  // namespace gmf::test
