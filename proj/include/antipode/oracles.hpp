#pragma once

// Brute-force reference computations. These deliberately avoid the closed-form
// antipodality degree and the pruned search; they enumerate subfaces and raw
// assignments instead, so they can be used to check those fast paths.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "antipode/cover.hpp"
#include "antipode/face.hpp"
#include "antipode/search.hpp"

namespace antipode::oracle {

// max{ dim G : G subface of a, antipode(G) subface of b }, or -1.
inline int degree(const Face& a, const Face& b) {
  if (a.is_empty() || b.is_empty()) return -1;
  for (int k = std::min(a.dimension(), b.dimension()); k >= 0; --k)
    for (const Face& g : subfaces(a, k))
      if (contains(b, antipode(g))) return k;
  return -1;
}

inline int set_self_antipodality(const CoverSet& s) {
  int best = -1;
  for (const Face& a : s.faces())
    for (const Face& b : s.faces()) best = std::max(best, degree(a, b));
  return best;
}

// Tries all n^N single assignments with no symmetry breaking or pruning.
inline bool cover_exists(const SearchProblem& p) {
  const auto faces = enumerate_faces(p.d, p.d - p.codim);
  const std::size_t n_faces = faces.size();
  std::vector<std::vector<bool>> bad(n_faces, std::vector<bool>(n_faces));
  for (std::size_t i = 0; i < n_faces; ++i)
    for (std::size_t j = 0; j < n_faces; ++j) bad[i][j] = degree(faces[i], faces[j]) >= p.forbid_k;

  std::vector<int> assign(n_faces, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < n_faces && ok; ++i)
      for (std::size_t j = i; j < n_faces && ok; ++j)
        if (assign[i] == assign[j] && bad[i][j]) ok = false;
    if (ok) return true;
    std::size_t pos = 0;
    while (pos < n_faces && ++assign[pos] == p.n_sets) assign[pos++] = 0;
    if (pos == n_faces) return false;
  }
}

inline double assignment_count(const SearchProblem& p) {
  double total = 1;
  const auto n_faces = count_faces(p.d, p.d - p.codim);
  for (std::uint64_t i = 0; i < n_faces; ++i) total *= p.n_sets;
  return total;
}

// Uniform over the 3^d nonempty faces of C^d.
inline Face random_face(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> sym(0, 2);
  std::uint32_t fixed = 0, value = 0;
  for (int p = 1; p <= d; ++p) {
    const int s = sym(rng);
    const std::uint32_t b = Face::bit_of(d, p);
    if (s != 2) fixed |= b;
    if (s == 1) value |= b;
  }
  return Face::from_masks(d, fixed, value);
}

}  // namespace antipode::oracle
