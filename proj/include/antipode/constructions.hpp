#pragma once

// Explicit covers: the sharp facet cover, the antipodal pair split for d <= 5,
// and the four-asterisk ridge cover with its leftover sets.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "antipode/cover.hpp"
#include "antipode/face.hpp"

namespace antipode {

namespace detail {

inline void require_min_dimension(int d, int min, const char* what) {
  if (d < min) throw std::out_of_range(std::string(what) + " needs d >= " + std::to_string(min) + ", got " + std::to_string(d));
  Face::check_dimension(d);
}

inline std::vector<CoverSet> pad_with_empty_sets(std::vector<CoverSet> sets, int d, int codim, std::size_t target) {
  while (sets.size() < target) sets.emplace_back(d, codim, std::vector<Face>{});
  return sets;
}

}  // namespace detail

// A_i = {position i fixed at 0, position i+1 fixed at 1}, wrapping d+1 to 1.
inline Cover sharp_facet_cover(int d) {
  detail::require_min_dimension(d, 2, "sharp facet cover");
  std::vector<CoverSet> sets;
  for (int i = 1; i <= d; ++i) {
    const int next = i == d ? 1 : i + 1;
    sets.emplace_back(d, 1, std::vector<Face>{Face::facet(d, i, false), Face::facet(d, next, true)});
  }
  return Cover(d, 1, std::move(sets));
}

// Each antipodal ridge pair is split: the smaller face (canonical order) goes
// to A_1, its antipode to A_2. Padded to d sets with empty sets.
inline Cover pair_split_ridge_cover(int d) {
  detail::require_min_dimension(d, 2, "pair-split ridge cover");
  std::vector<Face> first, second;
  for (const Face& r : enumerate_faces(d, d - 2)) {
    if (r < antipode(r))
      first.push_back(r);
    else
      second.push_back(r);
  }
  std::vector<CoverSet> sets;
  sets.emplace_back(d, 2, std::move(first));
  sets.emplace_back(d, 2, std::move(second));
  return Cover(d, 2, detail::pad_with_empty_sets(std::move(sets), d, 2, static_cast<std::size_t>(d)));
}

struct BlockLengths {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;

  std::array<int, 3> as_array() const { return {alpha, beta, gamma}; }
  friend bool operator==(const BlockLengths&, const BlockLengths&) = default;
};

inline int ceil_third(int d) { return (d + 2) / 3; }

inline BlockLengths block_lengths(int d) {
  detail::require_min_dimension(d, 4, "block lengths");
  const int lo = d / 3;
  const int hi = ceil_third(d);
  switch (d % 3) {
    case 0: return {lo, lo, lo};
    case 1: return {hi, lo, lo};
    default: return {hi, hi, lo};
  }
}

// v1 = a b c, v2 = a' b' c, v3 = a b' c', v4 = a' b c', where a, b, c are
// all-zero blocks and primes are the all-one blocks of the same length.
inline std::array<Face, 4> asterisk_vertices(int d) {
  const BlockLengths bl = block_lengths(d);
  const auto block = [&](int len, bool ones) { return std::string(static_cast<std::size_t>(len), ones ? '1' : '0'); };
  const auto vertex = [&](bool a, bool b, bool c) {
    return parse_face(block(bl.alpha, a) + block(bl.beta, b) + block(bl.gamma, c), d);
  };
  return {vertex(false, false, false), vertex(true, true, false), vertex(false, true, true), vertex(true, false, true)};
}

inline std::uint64_t doubly_covered_count(int d) {
  detail::require_min_dimension(d, 4, "doubly-covered count");
  const auto n = static_cast<std::uint64_t>(d);
  return d % 3 == 0 ? n * (n - 3) / 3 : (n - 1) * (n - 2) / 3;
}

struct ConstructionReport {
  Cover cover;
  std::size_t nonempty_sets = 0;
  std::uint64_t doubly_covered = 0;
  std::uint64_t leftover_count = 0;
  bool is_d_set_cover = false;  // false for d = 4, 5 where 4 + ceil(d/3) > d
};

// Four asterisk sets plus ceil(d/3) leftover sets. Leftover set i holds, from
// every block, the ridges fixed at two positions of that block with one 0 and
// one 1, where the 0 sits at block-local position i (1-based).
inline ConstructionReport asterisk_ridge_cover(int d) {
  detail::require_min_dimension(d, 4, "asterisk ridge cover");
  const auto verts = asterisk_vertices(d);
  std::vector<CoverSet> sets;
  for (const Face& v : verts) sets.push_back(asterisk_set(v));

  const BlockLengths bl = block_lengths(d);
  const auto lengths = bl.as_array();
  const int leftover_sets = ceil_third(d);
  std::uint64_t leftover_count = 0;
  for (int i = 1; i <= leftover_sets; ++i) {
    std::vector<Face> ridges;
    int start = 1;
    for (const int len : lengths) {
      if (i <= len) {
        const int zero_pos = start + i - 1;
        for (int one_pos = start; one_pos < start + len; ++one_pos) {
          if (one_pos == zero_pos) continue;
          const std::uint32_t zb = Face::bit_of(d, zero_pos);
          const std::uint32_t ob = Face::bit_of(d, one_pos);
          ridges.push_back(Face::from_masks(d, zb | ob, ob));
        }
      }
      start += len;
    }
    leftover_count += ridges.size();
    sets.emplace_back(d, 2, std::move(ridges));
  }

  std::uint64_t doubly = 0;
  for (const Face& r : enumerate_faces(d, d - 2)) {
    int hits = 0;
    for (std::size_t a = 0; a < 4; ++a) hits += sets[a].contains_face(r) ? 1 : 0;
    if (hits >= 2) ++doubly;
  }

  const bool fits = 4 + leftover_sets <= d;
  if (fits) sets = detail::pad_with_empty_sets(std::move(sets), d, 2, static_cast<std::size_t>(d));
  Cover cover(d, 2, std::move(sets));
  const std::size_t nonempty = cover.nonempty_sets();
  return ConstructionReport{std::move(cover), nonempty, doubly, leftover_count, fits};
}

}  // namespace antipode
