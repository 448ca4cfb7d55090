#include <gtest/gtest.h>

#include <random>

#include "antipode/constructions.hpp"
#include "antipode/cover_io.hpp"
#include "antipode/report_json.hpp"
#include "antipode/search.hpp"

namespace antipode {
namespace {

TEST(CoverText, WritesHeaderAndSets) {
  const std::string text = format_cover(pair_split_ridge_cover(3));
  EXPECT_EQ(text,
            "d=3 codim=2 sets=3\n"
            "X00,X01,0X0,0X1,00X,01X\n"
            "X10,X11,1X0,1X1,10X,11X\n"
            "-\n");
}

TEST(CoverText, ParsesWhitespaceAndLowercase) {
  const Cover c = parse_cover("d=3 codim=2 sets=2\r\n x00 , X11\n-\n\n");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.sets()[0].size(), 2u);
  EXPECT_TRUE(c.sets()[1].empty());
}

TEST(CoverText, RoundTripsConstructionsAndRandomCovers) {
  for (int d = 2; d <= 9; ++d) {
    const Cover f = sharp_facet_cover(d);
    EXPECT_EQ(parse_cover(format_cover(f)), f);
    if (d >= 4) {
      const Cover a = asterisk_ridge_cover(d).cover;
      EXPECT_EQ(parse_cover(format_cover(a)), a);
    }
  }
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const int d = 1 + static_cast<int>(rng() % 6);
    const int codim = static_cast<int>(rng() % static_cast<unsigned>(d + 1));
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<CoverSet> sets;
    for (int s = 0; s < n; ++s) {
      std::vector<Face> chosen;
      for (const Face& f : enumerate_faces(d, d - codim))
        if (rng() % 3 == 0) chosen.push_back(f);
      sets.emplace_back(d, codim, chosen);
    }
    const Cover c(d, codim, sets);
    EXPECT_EQ(parse_cover(format_cover(c)), c);
  }
}

TEST(CoverText, RejectsMalformedInput) {
  EXPECT_THROW(parse_cover(""), CoverFormatError);
  EXPECT_THROW(parse_cover("d=3 codim=2\nX00\n"), CoverFormatError);
  EXPECT_THROW(parse_cover("d=3 codim=2 sets=x\nX00\n"), CoverFormatError);
  EXPECT_THROW(parse_cover("d=3 codim=2 sets=0\n"), CoverFormatError);
  EXPECT_THROW(parse_cover("d=3 codim=2 sets=2\nX00\n"), CoverFormatError);
  EXPECT_THROW(parse_cover("d=3 codim=2 sets=1\nX00,XX0\n"), CoverFormatError);
  EXPECT_THROW(parse_cover("d=3 codim=2 sets=1\nX00,X00\n"), CoverFormatError);
  EXPECT_THROW(parse_cover("d=3 codim=2 sets=1\nX0\n"), CoverFormatError);
  EXPECT_THROW(parse_cover("d=3 codim=2 sets=1\nX00\nX11\n"), CoverFormatError);
  EXPECT_THROW(parse_cover("d=3 codim=2 sets=1 extra=1\nX00\n"), CoverFormatError);
}

TEST(ReportJson, VerificationFields) {
  const auto j = to_json(cover_report(sharp_facet_cover(3)));
  EXPECT_EQ(j["schema"], "antipode-lab/1");
  EXPECT_EQ(j["kind"], "verification");
  EXPECT_EQ(j["is_complete"], true);
  EXPECT_EQ(j["max_self_antipodality"], 1);
  EXPECT_EQ(j["per_set_self_antipodality"].size(), 3u);
  EXPECT_EQ(j["witness"]["k"], 1);
  EXPECT_EQ(j["witness"]["set_index"], 0);
  EXPECT_EQ(j["expected_k"], 1);
}

TEST(ReportJson, NullWitnessForAntipodeFreeCover) {
  const auto j = to_json(cover_report(pair_split_ridge_cover(2)));
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["max_self_antipodality"], -1);
}

TEST(ReportJson, SearchFields) {
  const auto unsat = to_json(exists_cover({3, 3, 2, 0}, 1000));
  EXPECT_EQ(unsat["outcome"], "UNSAT");
  EXPECT_EQ(unsat["budget"], 1000);
  EXPECT_TRUE(unsat["witness"].is_null());

  const auto sat = to_json(exists_cover({3, 3, 2, 1}, 1000));
  EXPECT_EQ(sat["outcome"], "WITNESS");
  const Cover back = parse_cover(sat["witness"].get<std::string>());
  EXPECT_TRUE(cover_report(back).is_complete);
}

TEST(ReportJson, ConstructionFields) {
  const auto j = to_json(asterisk_ridge_cover(8));
  EXPECT_EQ(j["doubly_covered"], 14);
  EXPECT_EQ(j["leftover_count"], 14);
  EXPECT_EQ(j["nonempty_sets"], 7);
  EXPECT_EQ(j["cover"]["sets"].size(), 8u);
  EXPECT_EQ(j["cover"]["sets"][4][0], "XXXXXX01");
}

}  // namespace
}  // namespace antipode
