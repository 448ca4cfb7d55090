#pragma once

// Faces of the d-cube in {0,1,X} coordinate form.
//
// A face is stored as two d-bit masks: `fixed` marks the coordinate positions
// that are held constant and `value` carries the constant at those positions.
// Coordinate position 1 (the leftmost character of the text form) maps to the
// most significant of the d used bits, so ascending (fixed, value) order is the
// same as lexicographic order of the fixed/value strings.
//
// The empty face (dimension -1) is an explicit sentinel. It is its own antipode
// and is contained in every face.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace antipode {

inline constexpr int kMaxDimension = 32;
inline constexpr std::string_view kEmptyToken = "EMPTY";

class Face {
 public:
  Face() = default;

  static Face whole(int d) {
    check_dimension(d);
    return Face(d, 0, 0, false);
  }

  static Face empty(int d) {
    check_dimension(d);
    return Face(d, 0, 0, true);
  }

  static Face from_masks(int d, std::uint32_t fixed, std::uint32_t value) {
    check_dimension(d);
    const std::uint32_t used = used_bits(d);
    if ((fixed & ~used) != 0 || (value & ~used) != 0)
      throw std::invalid_argument("face mask has bits beyond dimension " + std::to_string(d));
    if ((value & ~fixed) != 0)
      throw std::invalid_argument("face value mask set at a varying position");
    return Face(d, fixed, value, false);
  }

  // Single fixed coordinate: position is 1-based.
  static Face facet(int d, int position, bool bit) {
    const std::uint32_t b = bit_of(d, position);
    return from_masks(d, b, bit ? b : 0u);
  }

  int ambient() const { return d_; }
  std::uint32_t fixed_mask() const { return fixed_; }
  std::uint32_t value_mask() const { return value_; }
  bool is_empty() const { return empty_; }

  int dimension() const { return empty_ ? -1 : d_ - std::popcount(fixed_); }
  int codimension() const { return d_ - dimension(); }

  std::uint32_t varying_mask() const { return empty_ ? 0u : (~fixed_ & used_bits(d_)); }

  bool is_fixed_at(int position) const { return (fixed_ & bit_of(d_, position)) != 0; }
  bool value_at(int position) const { return (value_ & bit_of(d_, position)) != 0; }

  static std::uint32_t used_bits(int d) {
    return d >= 32 ? 0xFFFFFFFFu : ((std::uint32_t{1} << d) - 1u);
  }

  static std::uint32_t bit_of(int d, int position) {
    if (position < 1 || position > d)
      throw std::out_of_range("coordinate position " + std::to_string(position) +
                              " outside 1.." + std::to_string(d));
    return std::uint32_t{1} << (d - position);
  }

  static void check_dimension(int d) {
    if (d < 1 || d > kMaxDimension)
      throw std::out_of_range("cube dimension " + std::to_string(d) + " outside 1..32");
  }

  // Canonical order: ambient dimension, then the empty face, then (fixed, value).
  friend std::strong_ordering operator<=>(const Face& a, const Face& b) {
    if (auto c = a.d_ <=> b.d_; c != 0) return c;
    if (a.empty_ != b.empty_) return a.empty_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.empty_) return std::strong_ordering::equal;
    if (auto c = a.fixed_ <=> b.fixed_; c != 0) return c;
    return a.value_ <=> b.value_;
  }
  friend bool operator==(const Face& a, const Face& b) { return (a <=> b) == 0; }

 private:
  Face(int d, std::uint32_t fixed, std::uint32_t value, bool empty)
      : fixed_(fixed), value_(value), d_(static_cast<std::uint8_t>(d)), empty_(empty) {}

  std::uint32_t fixed_ = 0;
  std::uint32_t value_ = 0;
  std::uint8_t d_ = 0;
  bool empty_ = true;
};

namespace detail {

inline void require_same_ambient(const Face& a, const Face& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("faces live in different cubes (d=" + std::to_string(a.ambient()) +
                                " vs d=" + std::to_string(b.ambient()) + ")");
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Ascending masks over `bits` low bits with exactly `ones` set (Gosper's hack).
template <typename Fn>
void for_each_mask_with_popcount(int bits, int ones, Fn&& fn) {
  if (ones < 0 || ones > bits) return;
  if (ones == 0) {
    fn(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << bits;
  std::uint64_t m = (std::uint64_t{1} << ones) - 1;
  while (m < limit) {
    fn(m);
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
}

// Ascending submasks of `mask`, including 0 and mask itself.
template <typename Fn>
void for_each_submask_ascending(std::uint32_t mask, Fn&& fn) {
  std::uint32_t s = 0;
  while (true) {
    fn(s);
    if (s == mask) break;
    s = (s - mask) & mask;
  }
}

// Spread the low popcount(mask) bits of `packed` onto the set bits of `mask`.
inline std::uint32_t deposit_bits(std::uint32_t packed, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::uint32_t m = mask; m != 0; m &= m - 1, packed >>= 1)
    if (packed & 1u) out |= m & (~m + 1);
  return out;
}

}  // namespace detail

inline Face parse_face(std::string_view text, int d) {
  Face::check_dimension(d);
  if (text == kEmptyToken || text == "∅") return Face::empty(d);
  if (static_cast<int>(text.size()) != d)
    throw std::invalid_argument("face '" + std::string(text) + "' has length " + std::to_string(text.size()) +
                                ", expected " + std::to_string(d));
  std::uint32_t fixed = 0;
  std::uint32_t value = 0;
  for (int p = 1; p <= d; ++p) {
    const char c = text[static_cast<std::size_t>(p - 1)];
    const std::uint32_t b = Face::bit_of(d, p);
    switch (c) {
      case '0': fixed |= b; break;
      case '1': fixed |= b; value |= b; break;
      case 'X':
      case 'x': break;
      default:
        throw std::invalid_argument(std::string("illegal character '") + c + "' in face '" + std::string(text) + "'");
    }
  }
  return Face::from_masks(d, fixed, value);
}

inline std::string format_face(const Face& f) {
  if (f.is_empty()) return std::string(kEmptyToken);
  std::string s(static_cast<std::size_t>(f.ambient()), 'X');
  for (int p = 1; p <= f.ambient(); ++p)
    if (f.is_fixed_at(p)) s[static_cast<std::size_t>(p - 1)] = f.value_at(p) ? '1' : '0';
  return s;
}

inline Face antipode(const Face& f) {
  if (f.is_empty()) return f;
  return Face::from_masks(f.ambient(), f.fixed_mask(), f.fixed_mask() & ~f.value_mask());
}

inline bool is_antipodal(const Face& a, const Face& b) {
  detail::require_same_ambient(a, b);
  return antipode(a) == b;
}

inline bool contains(const Face& outer, const Face& inner) {
  detail::require_same_ambient(outer, inner);
  if (inner.is_empty()) return true;
  if (outer.is_empty()) return false;
  if ((outer.fixed_mask() & ~inner.fixed_mask()) != 0) return false;
  return ((outer.value_mask() ^ inner.value_mask()) & outer.fixed_mask()) == 0;
}

inline Face intersect(const Face& a, const Face& b) {
  detail::require_same_ambient(a, b);
  if (a.is_empty() || b.is_empty()) return Face::empty(a.ambient());
  const std::uint32_t both = a.fixed_mask() & b.fixed_mask();
  if (((a.value_mask() ^ b.value_mask()) & both) != 0) return Face::empty(a.ambient());
  return Face::from_masks(a.ambient(), a.fixed_mask() | b.fixed_mask(), a.value_mask() | b.value_mask());
}

// Largest k such that `a` contains a k-face whose antipode lies in `b`.
//
// A subface G of `a` with antipode in `b` must fix every position fixed in
// either face; on positions fixed in both, `a` and `b` must disagree. The
// largest such G fixes exactly the union, so its dimension is the number of
// positions varying in both faces.
inline int antipodality_degree(const Face& a, const Face& b) {
  detail::require_same_ambient(a, b);
  if (a.is_empty() || b.is_empty()) return -1;
  const std::uint32_t both = a.fixed_mask() & b.fixed_mask();
  if (((a.value_mask() ^ b.value_mask()) & both) != both) return -1;
  return a.ambient() - std::popcount(a.fixed_mask() | b.fixed_mask());
}

// The antipodal subface pair realizing antipodality_degree(a, b). Both are the
// empty face when the degree is -1.
struct AntipodalSubfaces {
  Face in_first;
  Face in_second;
};

inline AntipodalSubfaces antipodal_subfaces(const Face& a, const Face& b) {
  if (antipodality_degree(a, b) < 0) return {Face::empty(a.ambient()), Face::empty(a.ambient())};
  const std::uint32_t fixed = a.fixed_mask() | b.fixed_mask();
  const std::uint32_t only_b = b.fixed_mask() & ~a.fixed_mask();
  const std::uint32_t value = a.value_mask() | (only_b & ~b.value_mask());
  const Face g = Face::from_masks(a.ambient(), fixed, value);
  return {g, antipode(g)};
}

inline std::uint64_t count_faces(int d, int k) {
  Face::check_dimension(d);
  if (k < 0 || k > d) throw std::out_of_range("face dimension " + std::to_string(k) + " outside 0.." + std::to_string(d));
  return (std::uint64_t{1} << (d - k)) * detail::binomial(d, k);
}

// All k-faces of C^d in canonical order. k = -1 yields the empty face alone.
inline std::vector<Face> enumerate_faces(int d, int k) {
  Face::check_dimension(d);
  if (k < -1 || k > d) throw std::out_of_range("face dimension " + std::to_string(k) + " outside -1.." + std::to_string(d));
  if (k == -1) return {Face::empty(d)};
  std::vector<Face> out;
  out.reserve(static_cast<std::size_t>(count_faces(d, k)));
  detail::for_each_mask_with_popcount(d, d - k, [&](std::uint64_t fixed64) {
    const auto fixed = static_cast<std::uint32_t>(fixed64);
    detail::for_each_submask_ascending(fixed, [&](std::uint32_t value) { out.push_back(Face::from_masks(d, fixed, value)); });
  });
  return out;
}

inline std::vector<Face> enumerate_all_faces(int d) {
  std::vector<Face> out;
  for (int k = -1; k <= d; ++k) {
    auto layer = enumerate_faces(d, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All k-dimensional faces contained in f, canonical order.
inline std::vector<Face> subfaces(const Face& f, int k) {
  const int dim = f.dimension();
  if (k < -1 || k > dim)
    throw std::out_of_range("subface dimension " + std::to_string(k) + " outside -1.." + std::to_string(dim));
  const int d = f.ambient();
  if (k == -1) return {Face::empty(d)};
  const std::uint32_t free = f.varying_mask();
  std::vector<Face> out;
  detail::for_each_mask_with_popcount(dim, dim - k, [&](std::uint64_t pick) {
    const std::uint32_t extra = detail::deposit_bits(static_cast<std::uint32_t>(pick), free);
    detail::for_each_submask_ascending(extra, [&](std::uint32_t ones) {
      out.push_back(Face::from_masks(d, f.fixed_mask() | extra, f.value_mask() | ones));
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Spanning faces vary in the last coordinate, so they meet both the top and
// bottom facets.
inline bool is_spanning(const Face& f) {
  if (f.is_empty()) throw std::invalid_argument("the empty face has no coordinates");
  return !f.is_fixed_at(f.ambient());
}

struct FacePair {
  Face first;
  Face second;
  int degree = -1;
};

inline FacePair make_face_pair(const Face& a, const Face& b) { return {a, b, antipodality_degree(a, b)}; }

}  // namespace antipode
