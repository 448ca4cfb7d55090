#pragma once

// Facet and ridge covers of the d-cube and their self-antipodality.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "antipode/face.hpp"

namespace antipode {

// One set of a cover: faces of a single codimension, sorted and duplicate-free.
// An empty set carries no faces but still knows its ambient dimension.
class CoverSet {
 public:
  CoverSet() = default;

  CoverSet(int d, int codim, std::vector<Face> faces) : d_(d), codim_(codim), faces_(std::move(faces)) {
    Face::check_dimension(d);
    if (codim < 0 || codim > d) throw std::invalid_argument("codimension " + std::to_string(codim) + " outside 0..d");
    for (const Face& f : faces_) {
      if (f.ambient() != d) throw std::invalid_argument("face " + format_face(f) + " is not in C^" + std::to_string(d));
      if (f.is_empty() || f.codimension() != codim)
        throw std::invalid_argument("face " + format_face(f) + " does not have codimension " + std::to_string(codim));
    }
    std::sort(faces_.begin(), faces_.end());
    if (std::adjacent_find(faces_.begin(), faces_.end()) != faces_.end())
      throw std::invalid_argument("duplicate face in cover set");
  }

  int ambient() const { return d_; }
  int codimension() const { return codim_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }
  bool contains_face(const Face& f) const { return std::binary_search(faces_.begin(), faces_.end(), f); }

  CoverSet without(const Face& f) const {
    std::vector<Face> rest;
    rest.reserve(faces_.size());
    for (const Face& g : faces_)
      if (g != f) rest.push_back(g);
    return CoverSet(d_, codim_, std::move(rest));
  }

  friend bool operator==(const CoverSet&, const CoverSet&) = default;

 private:
  int d_ = 1;
  int codim_ = 0;
  std::vector<Face> faces_;
};

class Cover {
 public:
  Cover(int d, int codim, std::vector<CoverSet> sets) : d_(d), codim_(codim), sets_(std::move(sets)) {
    Face::check_dimension(d);
    if (sets_.empty()) throw std::invalid_argument("a cover needs at least one set");
    for (const CoverSet& s : sets_)
      if (s.ambient() != d || s.codimension() != codim)
        throw std::invalid_argument("cover set does not match cover dimension/codimension");
  }

  int ambient() const { return d_; }
  int codimension() const { return codim_; }
  const std::vector<CoverSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }

  std::size_t nonempty_sets() const {
    return static_cast<std::size_t>(std::count_if(sets_.begin(), sets_.end(), [](const CoverSet& s) { return !s.empty(); }));
  }

  friend bool operator==(const Cover&, const Cover&) = default;

 private:
  int d_;
  int codim_;
  std::vector<CoverSet> sets_;
};

struct AntipodalWitness {
  std::size_t set_index = 0;
  Face face_a;
  Face face_b;
  int k = -1;
  Face sub_a;
  Face sub_b;
};

struct SelfAntipodality {
  int k = -1;
  std::optional<AntipodalWitness> witness;
};

// Max antipodality degree over ordered pairs (identical pairs included). The
// witness is the first pair reaching the max in (face_a, face_b) order.
inline SelfAntipodality set_self_antipodality(const CoverSet& s, std::size_t set_index = 0) {
  SelfAntipodality out;
  const auto& faces = s.faces();
  for (const Face& a : faces) {
    for (const Face& b : faces) {
      const int k = antipodality_degree(a, b);
      if (k > out.k) {
        const auto subs = antipodal_subfaces(a, b);
        out.k = k;
        out.witness = AntipodalWitness{set_index, a, b, k, subs.in_first, subs.in_second};
      }
    }
  }
  return out;
}

struct Completeness {
  bool complete = false;
  std::vector<Face> uncovered;
};

inline Completeness is_complete_cover(const Cover& c) {
  Completeness out;
  for (const Face& f : enumerate_faces(c.ambient(), c.ambient() - c.codimension())) {
    const bool hit = std::any_of(c.sets().begin(), c.sets().end(), [&](const CoverSet& s) { return s.contains_face(f); });
    if (!hit) out.uncovered.push_back(f);
  }
  out.complete = out.uncovered.empty();
  return out;
}

// Guaranteed antipodality dimension for d-set ridge covers of C^d.
inline int k_of_d(int d) {
  if (d < 1) throw std::out_of_range("k(d) is defined for d >= 1");
  if (d == 1) return d - 2;
  if (d <= 4) return d - 3;
  return d - 4;
}

// Guaranteed antipodality for a d-set cover of the given codimension: k(d) for
// ridge covers, d-2 for facet covers. Other codimensions have no known bound.
inline std::optional<int> expected_antipodality(int d, int codim) {
  if (codim == 2) return k_of_d(d);
  if (codim == 1) return d - 2;
  return std::nullopt;
}

struct VerificationReport {
  int d = 0;
  int codim = 0;
  std::size_t n_sets = 0;
  bool is_complete = false;
  std::vector<Face> uncovered;
  std::vector<int> per_set_self_antipodality;
  int max_self_antipodality = -1;
  std::optional<AntipodalWitness> witness;
  std::optional<int> expected_k;
};

inline VerificationReport cover_report(const Cover& c) {
  VerificationReport r;
  r.d = c.ambient();
  r.codim = c.codimension();
  r.n_sets = c.size();
  auto comp = is_complete_cover(c);
  r.is_complete = comp.complete;
  r.uncovered = std::move(comp.uncovered);
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto sa = set_self_antipodality(c.sets()[i], i);
    r.per_set_self_antipodality.push_back(sa.k);
    if (sa.k > r.max_self_antipodality) {
      r.max_self_antipodality = sa.k;
      r.witness = sa.witness;
    }
  }
  r.expected_k = expected_antipodality(c.ambient(), c.codimension());
  return r;
}

// All C(d,2) ridges through vertex v.
inline CoverSet asterisk_set(const Face& v) {
  if (v.dimension() != 0) throw std::invalid_argument("asterisk set needs a vertex, got " + format_face(v));
  const int d = v.ambient();
  if (d < 2) throw std::invalid_argument("asterisk sets need d >= 2");
  std::vector<Face> ridges;
  detail::for_each_mask_with_popcount(d, 2, [&](std::uint64_t pick) {
    const auto fixed = static_cast<std::uint32_t>(pick);
    ridges.push_back(Face::from_masks(d, fixed, v.value_mask() & fixed));
  });
  return CoverSet(d, 2, std::move(ridges));
}

struct SixRidgeShape {
  enum class Kind { FacetBoundary, Asterisk, Other };
  Kind kind = Kind::Other;
  Face anchor;  // the facet or the vertex; empty face for Other
};

inline const char* to_string(SixRidgeShape::Kind k) {
  switch (k) {
    case SixRidgeShape::Kind::FacetBoundary: return "FacetBoundary";
    case SixRidgeShape::Kind::Asterisk: return "Asterisk";
    case SixRidgeShape::Kind::Other: return "Other";
  }
  return "?";
}

inline SixRidgeShape classify_six_ridge_set(const CoverSet& s) {
  if (s.ambient() != 4 || s.codimension() != 2 || s.size() != 6)
    throw std::invalid_argument("classification applies to 6 ridges of C^4");
  const auto& faces = s.faces();

  // A facet holds exactly 6 ridges, so 6 distinct ridges sharing one fixed
  // coordinate value are that facet's boundary.
  std::uint32_t common = Face::used_bits(4);
  for (const Face& f : faces) common &= f.fixed_mask();
  std::uint32_t ones = common, zeros = common;
  for (const Face& f : faces) {
    ones &= f.value_mask();
    zeros &= ~f.value_mask();
  }
  if (const std::uint32_t agree = ones | zeros; agree != 0) {
    const std::uint32_t bit = agree & (~agree + 1);
    return {SixRidgeShape::Kind::FacetBoundary, Face::from_masks(4, bit, ones & bit)};
  }

  // Likewise Ast(v) is the only 6-ridge set through a common vertex v.
  Face meet = Face::whole(4);
  for (const Face& f : faces) meet = intersect(meet, f);
  if (meet.dimension() == 0) return {SixRidgeShape::Kind::Asterisk, meet};
  return {SixRidgeShape::Kind::Other, Face::empty(4)};
}

}  // namespace antipode
