#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "antipode/constructions.hpp"
#include "antipode/cover.hpp"
#include "antipode/cover_io.hpp"
#include "antipode/oracles.hpp"
#include "antipode/search.hpp"

namespace antipode {
namespace {

CoverSet set_of(int d, int codim, std::initializer_list<const char*> faces) {
  std::vector<Face> v;
  for (const char* s : faces) v.push_back(parse_face(s, d));
  return CoverSet(d, codim, std::move(v));
}

TEST(CoverSet, SortsAndRejectsDuplicates) {
  const CoverSet s = set_of(3, 2, {"1X0", "X00"});
  EXPECT_EQ(s.faces().front(), parse_face("X00", 3));
  EXPECT_THROW(set_of(3, 2, {"X00", "X00"}), std::invalid_argument);
  EXPECT_THROW(set_of(3, 2, {"X00", "XX0"}), std::invalid_argument);
}

TEST(Cover, RequiresAtLeastOneSet) { EXPECT_THROW(Cover(3, 2, {}), std::invalid_argument); }

TEST(IsCompleteCover, Examples) {
  const auto split = pair_split_ridge_cover(3);
  EXPECT_TRUE(is_complete_cover(split).complete);

  const Cover one_face(3, 2, {set_of(3, 2, {"X00", "X10", "0X0", "1X0"})});
  const auto r = is_complete_cover(one_face);
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.uncovered.size(), 8u);

  const Cover everything(4, 2, {CoverSet(4, 2, enumerate_faces(4, 2))});
  EXPECT_TRUE(is_complete_cover(everything).complete);
}

TEST(SetSelfAntipodality, FaceBoundaryOfC3IsAntipodeFree) {
  for (const Face& facet : enumerate_faces(3, 2)) {
    const CoverSet boundary(3, 2, subfaces(facet, 1));
    const auto r = set_self_antipodality(boundary);
    EXPECT_EQ(r.k, -1) << format_face(facet);
    EXPECT_FALSE(r.witness.has_value());
  }
}

TEST(SetSelfAntipodality, RidgeAndItsAntipode) {
  const auto r = set_self_antipodality(set_of(5, 2, {"XXX00", "XXX11"}), 3);
  EXPECT_EQ(r.k, 3);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->set_index, 3u);
  EXPECT_EQ(format_face(r.witness->face_a), "XXX00");
  EXPECT_EQ(format_face(r.witness->face_b), "XXX11");
  EXPECT_EQ(r.witness->sub_a, parse_face("XXX00", 5));
}

TEST(SetSelfAntipodality, AsteriskOfC4) {
  const CoverSet ast = asterisk_set(parse_face("1011", 4));
  EXPECT_EQ(oracle::set_self_antipodality(ast), 0);
  EXPECT_EQ(set_self_antipodality(ast).k, 0);
}

TEST(SetSelfAntipodality, EmptySetIsVacuous) { EXPECT_EQ(set_self_antipodality(CoverSet(4, 2, {})).k, -1); }

TEST(SetSelfAntipodality, WitnessIsWellFormed) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const int d = 3 + static_cast<int>(rng() % 4);
    std::vector<Face> chosen;
    for (const Face& r : enumerate_faces(d, d - 2))
      if (rng() % 4 == 0) chosen.push_back(r);
    const CoverSet s(d, 2, chosen);
    const auto r = set_self_antipodality(s);
    ASSERT_EQ(r.witness.has_value(), r.k >= 0);
    if (!r.witness) continue;
    const auto& w = *r.witness;
    EXPECT_TRUE(s.contains_face(w.face_a) && s.contains_face(w.face_b));
    EXPECT_TRUE(contains(w.face_a, w.sub_a));
    EXPECT_TRUE(contains(w.face_b, w.sub_b));
    EXPECT_TRUE(is_antipodal(w.sub_a, w.sub_b));
    EXPECT_EQ(w.sub_a.dimension(), r.k);
  }
}

TEST(SetSelfAntipodality, MatchesOracleOnRandomSets) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const int codim = 1 + static_cast<int>(rng() % static_cast<unsigned>(d));
    std::vector<Face> chosen;
    for (const Face& f : enumerate_faces(d, d - codim))
      if (rng() % 3 == 0) chosen.push_back(f);
    const CoverSet s(d, codim, chosen);
    EXPECT_EQ(set_self_antipodality(s).k, oracle::set_self_antipodality(s));
  }
}

TEST(SetSelfAntipodality, MonotoneUnderRemoval) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const int d = 3 + static_cast<int>(rng() % 3);
    std::vector<Face> chosen;
    for (const Face& f : enumerate_faces(d, d - 2))
      if (rng() % 2 == 0) chosen.push_back(f);
    if (chosen.empty()) continue;
    const CoverSet s(d, 2, chosen);
    for (const Face& f : chosen) EXPECT_LE(set_self_antipodality(s.without(f)).k, set_self_antipodality(s).k);
  }
}

TEST(KOfD, Table) {
  EXPECT_EQ(k_of_d(1), -1);
  EXPECT_EQ(k_of_d(2), -1);
  EXPECT_EQ(k_of_d(3), 0);
  EXPECT_EQ(k_of_d(4), 1);
  EXPECT_EQ(k_of_d(5), 1);
  EXPECT_EQ(k_of_d(7), 3);
  EXPECT_THROW(k_of_d(0), std::out_of_range);
}

TEST(CoverReport, SharpFacetCover) {
  const auto r = cover_report(sharp_facet_cover(4));
  EXPECT_TRUE(r.is_complete);
  EXPECT_EQ(r.max_self_antipodality, 2);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->set_index, 0u);
  EXPECT_EQ(r.expected_k, 2);
}

TEST(CoverReport, PairSplitC3) {
  const auto r = cover_report(pair_split_ridge_cover(3));
  EXPECT_TRUE(r.is_complete);
  EXPECT_EQ(r.n_sets, 3u);
  EXPECT_EQ(r.max_self_antipodality, 0);
  EXPECT_EQ(r.expected_k, k_of_d(3));
}

TEST(CoverReport, AsteriskC6) {
  const auto r = cover_report(asterisk_ridge_cover(6).cover);
  EXPECT_TRUE(r.is_complete);
  EXPECT_LE(r.max_self_antipodality, 2);
  EXPECT_EQ(r.per_set_self_antipodality.size(), 6u);
}

TEST(CoverReport, WitnessIsFirstAmongMaximalSets) {
  const Cover c(3, 2, {set_of(3, 2, {"X00"}), set_of(3, 2, {"X00", "X11"}), set_of(3, 2, {"0X0", "1X1"})});
  const auto r = cover_report(c);
  EXPECT_EQ(r.per_set_self_antipodality, (std::vector<int>{-1, 1, 1}));
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->set_index, 1u);
}

// Every complete d-set ridge cover reaches k(d).
TEST(CoverReport, RandomCompleteCoversReachGuarantee) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const int d = 2 + static_cast<int>(rng() % 4);
    std::vector<std::vector<Face>> buckets(static_cast<std::size_t>(d));
    for (const Face& r : enumerate_faces(d, d - 2)) {
      buckets[rng() % static_cast<unsigned>(d)].push_back(r);
      if (rng() % 5 == 0) {
        auto& extra = buckets[rng() % static_cast<unsigned>(d)];
        if (std::find(extra.begin(), extra.end(), r) == extra.end()) extra.push_back(r);
      }
    }
    std::vector<CoverSet> sets;
    for (auto& b : buckets) sets.emplace_back(d, 2, b);
    const auto rep = cover_report(Cover(d, 2, sets));
    ASSERT_TRUE(rep.is_complete);
    EXPECT_GE(rep.max_self_antipodality, k_of_d(d));
  }
}

TEST(AsteriskSet, Examples) {
  const CoverSet ast = asterisk_set(parse_face("1011", 4));
  EXPECT_EQ(ast.size(), 6u);
  for (const char* r : {"10XX", "X01X", "1X1X", "XX11", "X0X1", "1XX1"}) EXPECT_TRUE(ast.contains_face(parse_face(r, 4))) << r;
  for (int d = 2; d <= 9; ++d) EXPECT_EQ(asterisk_set(Face::from_masks(d, Face::used_bits(d), 0)).size(), detail::binomial(d, 2));
  EXPECT_THROW(asterisk_set(parse_face("X011", 4)), std::invalid_argument);
}

TEST(AsteriskSet, NoAntipodalPeaks) {
  for (int d = 4; d <= 8; ++d)
    for (const Face& v : enumerate_faces(d, 0)) EXPECT_LE(set_self_antipodality(asterisk_set(v)).k, d - 4);
}

TEST(ClassifySixRidgeSet, Shapes) {
  const auto top = classify_six_ridge_set(CoverSet(4, 2, subfaces(parse_face("XXX1", 4), 2)));
  EXPECT_EQ(top.kind, SixRidgeShape::Kind::FacetBoundary);
  EXPECT_EQ(top.anchor, parse_face("XXX1", 4));

  const auto ast = classify_six_ridge_set(asterisk_set(parse_face("1011", 4)));
  EXPECT_EQ(ast.kind, SixRidgeShape::Kind::Asterisk);
  EXPECT_EQ(ast.anchor, parse_face("1011", 4));

  const auto other = classify_six_ridge_set(set_of(4, 2, {"XX00", "XX11", "X0X0", "X1X0", "0XX0", "1XX1"}));
  EXPECT_EQ(other.kind, SixRidgeShape::Kind::Other);

  EXPECT_THROW(classify_six_ridge_set(set_of(4, 2, {"XX00"})), std::invalid_argument);
}

// Every 6-ridge set that is not a facet boundary or an asterisk contains antipodal edges.
TEST(ClassifySixRidgeSet, OtherShapesAreNeverAntipodeFree) {
  const auto rs = enumerate_faces(4, 2);
  std::vector<bool> sel(rs.size(), false);
  std::fill(sel.begin(), sel.begin() + 6, true);
  int others_free = 0;
  do {
    std::vector<Face> chosen;
    for (std::size_t i = 0; i < sel.size(); ++i)
      if (sel[i]) chosen.push_back(rs[i]);
    const CoverSet s(4, 2, chosen);
    if (classify_six_ridge_set(s).kind == SixRidgeShape::Kind::Other && set_self_antipodality(s).k < 1) ++others_free;
  } while (std::prev_permutation(sel.begin(), sel.end()));
  EXPECT_EQ(others_free, 0);
}

}  // namespace
}  // namespace antipode
