#pragma once

// The acceptance suite: twelve end-to-end checks of the face algebra, the
// constructions and the exhaustive searches. Shared by the acceptance test
// binary and `antipode_lab selftest`.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "antipode/constructions.hpp"
#include "antipode/cover.hpp"
#include "antipode/cover_io.hpp"
#include "antipode/face.hpp"
#include "antipode/oracles.hpp"
#include "antipode/search.hpp"

namespace antipode::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20081231;

// Leftover sets A_5..A_7 of the d=8 asterisk cover, canonical order.
inline constexpr const char* kAsteriskD8Leftovers =
    "XXXXXX01,XXX0X1XX,XXX01XXX,0X1XXXXX,01XXXXXX\n"
    "XXXXXX10,XXXX01XX,XXX10XXX,X01XXXXX,10XXXXXX\n"
    "XXXX10XX,XXX1X0XX,X10XXXXX,1X0XXXXX\n";

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t c4_search_budget = 1'000'000'000;
};

namespace detail {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail << "FAILED: " << what << "; ";
    }
  }
};

inline CriterionResult run(int id, std::string name, double limit, const std::function<void(Check&)>& body) {
  CriterionResult r{id, std::move(name), false, {}, 0, limit};
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.seconds > limit) c.require(false, "time limit exceeded");
  r.passed = c.ok;
  r.detail = c.detail.str();
  return r;
}

inline std::vector<Face> ridges(int d) { return enumerate_faces(d, d - 2); }

}  // namespace detail

inline CriterionResult degree_oracle_equivalence(const Options& o) {
  return detail::run(1, "antipodality degree matches brute-force subface oracle", 60, [&](detail::Check& c) {
    std::uint64_t exhaustive = 0;
    for (int d = 1; d <= 4; ++d) {
      const auto faces = enumerate_all_faces(d);
      for (const Face& a : faces)
        for (const Face& b : faces) {
          ++exhaustive;
          c.require(antipodality_degree(a, b) == oracle::degree(a, b), format_face(a) + " vs " + format_face(b));
        }
    }
    std::mt19937_64 rng(o.seed);
    for (int d : {5, 6})
      for (int i = 0; i < 100'000; ++i) {
        const Face a = oracle::random_face(d, rng);
        const Face b = oracle::random_face(d, rng);
        c.require(antipodality_degree(a, b) == oracle::degree(a, b), format_face(a) + " vs " + format_face(b));
      }
    c.detail << exhaustive << " exhaustive pairs (d<=4), 200000 random pairs (d=5,6)";
  });
}

inline CriterionResult counting_identities(const Options&) {
  return detail::run(2, "face counts, ridge counts, asterisk sizes", 10, [&](detail::Check& c) {
    for (int d = 1; d <= 6; ++d)
      for (int k = 0; k <= d; ++k) {
        const std::uint64_t closed = (std::uint64_t{1} << (d - k)) * antipode::detail::binomial(d, k);
        c.require(enumerate_faces(d, k).size() == closed, "enumerate_faces length d=" + std::to_string(d));
        c.require(count_faces(d, k) == closed, "count_faces d=" + std::to_string(d));
      }
    for (int d = 2; d <= 12; ++d)
      c.require(count_faces(d, d - 2) == static_cast<std::uint64_t>(2 * d * (d - 1)), "ridge count 2d(d-1)");
    for (int d = 4; d <= 8; ++d)
      for (const Face& v : enumerate_faces(d, 0))
        c.require(asterisk_set(v).size() == antipode::detail::binomial(d, 2), "asterisk size C(d,2)");
    c.detail << "d<=6 face counts, d<=12 ridge counts, d=4..8 asterisk sizes";
  });
}

inline CriterionResult facet_cover_sharpness(const Options&) {
  return detail::run(3, "sharp facet cover: complete, every set exactly (d-2)-self-antipodal", 5, [&](detail::Check& c) {
    for (int d = 2; d <= 10; ++d) {
      const auto rep = cover_report(sharp_facet_cover(d));
      c.require(rep.is_complete, "complete d=" + std::to_string(d));
      c.require(rep.n_sets == static_cast<std::size_t>(d), "d sets");
      for (int k : rep.per_set_self_antipodality) c.require(k == d - 2, "per-set value d-2 at d=" + std::to_string(d));
    }
    c.detail << "d=2..10";
  });
}

inline CriterionResult pair_split_sharpness(const Options&) {
  return detail::run(4, "pair-split ridge covers avoid antipodal ridges (d<=5)", 5, [&](detail::Check& c) {
    for (int d = 2; d <= 5; ++d) {
      const auto rep = cover_report(pair_split_ridge_cover(d));
      c.require(rep.is_complete, "complete d=" + std::to_string(d));
      for (int k : rep.per_set_self_antipodality) c.require(k <= d - 3, "per-set <= d-3 at d=" + std::to_string(d));
      if (d == 3 || d == 4) c.require(rep.max_self_antipodality == d - 3, "max == d-3 at d=" + std::to_string(d));
      c.detail << "d=" << d << " max=" << rep.max_self_antipodality << "; ";
    }
  });
}

inline CriterionResult asterisk_construction(const Options&) {
  return detail::run(5, "asterisk cover: complete, no antipodal peaks, doubly-covered = leftover count, d=8 golden", 10,
                     [&](detail::Check& c) {
    for (int d = 4; d <= 12; ++d) {
      const std::string at = " at d=" + std::to_string(d);
      const auto cr = asterisk_ridge_cover(d);
      const auto rep = cover_report(cr.cover);
      c.require(rep.is_complete, "complete" + at);
      c.require(cr.nonempty_sets == static_cast<std::size_t>(4 + ceil_third(d)), "4+ceil(d/3) nonempty sets" + at);
      for (int k : rep.per_set_self_antipodality) c.require(k <= d - 4, "per-set <= d-4" + at);
      const std::uint64_t formula = d % 3 == 0 ? static_cast<std::uint64_t>(d * (d - 3) / 3)
                                               : static_cast<std::uint64_t>((d - 1) * (d - 2) / 3);
      c.require(cr.doubly_covered == formula, "doubly-covered count" + at);
      c.require(cr.leftover_count == formula, "leftover count" + at);
      std::uint64_t outside = 0;
      for (const Face& r : detail::ridges(d)) {
        int hits = 0;
        for (std::size_t a = 0; a < 4; ++a) hits += cr.cover.sets()[a].contains_face(r) ? 1 : 0;
        c.require(hits <= 2, "ridge in at most two asterisk sets" + at);
        if (hits == 0) ++outside;
      }
      c.require(outside == formula, "ridges outside asterisk sets" + at);
    }
    const auto d8 = asterisk_ridge_cover(8);
    std::string leftovers;
    for (std::size_t i = 4; i < 7; ++i) leftovers += format_cover_set(d8.cover.sets()[i]) + "\n";
    c.require(leftovers == kAsteriskD8Leftovers, "d=8 leftover sets match golden table");
    c.detail << "d=4..12, d=8 golden table";
  });
}

inline CriterionResult weak_lsb_c3(const Options&) {
  return detail::run(6, "no 3-set ridge cover of C^3 avoids antipodal vertices", 10, [&](detail::Check& c) {
    const SearchProblem p{3, 3, 2, 0};
    const auto r = exists_cover(p, 1'000'000);
    c.require(r.outcome == SearchOutcome::Unsat, "search outcome UNSAT");
    c.require(!oracle::cover_exists(p), "naive oracle over 3^12 assignments agrees");
    c.detail << "search UNSAT in " << r.nodes_expanded << " nodes; naive oracle scanned " << oracle::assignment_count(p)
             << " assignments";
  });
}

inline CriterionResult c3_edge_lemma(const Options&) {
  return detail::run(7, "antipode-free edge sets of C^3 with >= 4 edges bound a 2-face", 1, [&](detail::Check& c) {
    const auto r = verify_c3_edge_lemma();
    c.require(r.holds, "lemma holds");
    c.require(r.antipode_free_large_sets == 6, "exactly 6 antipode-free sets of size >= 4");
    c.detail << r.antipode_free_large_sets << " antipode-free sets, " << r.face_boundaries << " face boundaries";
  });
}

inline CriterionResult six_ridge_classification(const Options&) {
  return detail::run(8, "antipodal-edge-free 6-ridge sets of C^4 are facet boundaries or asterisks", 30, [&](detail::Check& c) {
    const auto sets = enumerate_antipode_free_sets(4, 2, 1, 6);
    int facets = 0, asterisks = 0, other = 0;
    for (const CoverSet& s : sets) {
      switch (classify_six_ridge_set(s).kind) {
        case SixRidgeShape::Kind::FacetBoundary: ++facets; break;
        case SixRidgeShape::Kind::Asterisk: ++asterisks; break;
        case SixRidgeShape::Kind::Other: ++other; break;
      }
    }
    // Independent scan of all C(24,6) candidates with the brute-force degree.
    const auto rs = detail::ridges(4);
    std::vector<std::vector<int>> deg(rs.size(), std::vector<int>(rs.size()));
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < rs.size(); ++j) deg[i][j] = oracle::degree(rs[i], rs[j]);
    std::vector<bool> sel(rs.size(), false);
    std::fill(sel.begin(), sel.begin() + 6, true);
    std::uint64_t candidates = 0, free_sets = 0;
    do {
      ++candidates;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < sel.size(); ++i)
        if (sel[i]) idx.push_back(i);
      bool ok = true;
      for (std::size_t a : idx)
        for (std::size_t b : idx) ok = ok && deg[a][b] < 1;
      if (ok) ++free_sets;
    } while (std::prev_permutation(sel.begin(), sel.end()));

    c.require(sets.size() == 24, "24 sets enumerated");
    c.require(facets == 8 && asterisks == 16 && other == 0, "8 facet boundaries + 16 asterisks + 0 other");
    c.require(candidates == 134596, "C(24,6) candidates scanned");
    c.require(free_sets == sets.size(), "oracle scan agrees with enumeration");
    c.detail << sets.size() << " sets: " << facets << " FacetBoundary, " << asterisks << " Asterisk, " << other
             << " Other; oracle scanned " << candidates << " candidates";
  });
}

inline CriterionResult strong_lsb_c4_disjoint(const Options&) {
  return detail::run(9, "C^4 (a): no four pairwise-disjoint special sets cover all ridges", 30, [&](detail::Check& c) {
    const auto r = verify_no_four_disjoint_special_sets();
    c.require(r.holds, "no disjoint 4-cover");
    c.require(r.special_sets == 24 && r.combinations == 10626, "C(24,4) combinations");
    c.detail << r.combinations << " combinations, " << r.disjoint_covers << " disjoint covers";
  });
}

inline CriterionResult strong_lsb_c4_search(const Options& o) {
  return detail::run(9, "C^4 (b): no 4-set ridge cover avoids antipodal edges", 1800, [&](detail::Check& c) {
    const auto r = exists_cover(SearchProblem{4, 4, 2, 1}, o.c4_search_budget);
    c.require(r.outcome == SearchOutcome::Unsat, "search outcome UNSAT");
    c.detail << to_string(r.outcome) << " after " << r.nodes_expanded << " nodes (budget " << r.budget << ")";
  });
}

inline CriterionResult sat_direction(const Options&) {
  return detail::run(10, "witness covers exist one dimension up and re-verify", 60, [&](detail::Check& c) {
    for (const SearchProblem& p : {SearchProblem{3, 3, 2, 1}, SearchProblem{5, 5, 2, 3}}) {
      const auto r = exists_cover(p, 1'000'000'000);
      c.require(r.outcome == SearchOutcome::Witness && r.witness.has_value(), "witness found");
      if (!r.witness) continue;
      const auto rep = cover_report(*r.witness);
      c.require(rep.is_complete, "witness complete");
      c.require(rep.max_self_antipodality <= p.forbid_k - 1, "witness avoids forbidden pairs");
      c.detail << "d=" << p.d << " forbid_k=" << p.forbid_k << ": witness in " << r.nodes_expanded << " nodes; ";
    }
  });
}

inline CriterionResult property_suites(const Options& o) {
  return detail::run(11, "randomized face and set properties", 60, [&](detail::Check& c) {
    std::mt19937_64 rng(o.seed + 11);
    std::uniform_int_distribution<int> pick_d(1, 10);
    constexpr int kCases = 1000;
    for (int i = 0; i < kCases; ++i) {
      const int d = pick_d(rng);
      const Face f = oracle::random_face(d, rng);
      const Face g = oracle::random_face(d, rng);
      c.require(antipode(antipode(f)) == f, "involution " + format_face(f));
      c.require(antipodality_degree(f, g) == antipodality_degree(g, f), "symmetry");
      c.require(antipodality_degree(f, antipode(f)) == f.dimension(), "degree(f, antipode f) = dim f");
      if (f.codimension() >= 1) c.require(antipodality_degree(f, f) == -1, "degree(f, f) = -1");
    }

    const auto random_ridge = [&](int d) {
      const auto rs = detail::ridges(d);
      return rs[std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(rng)];
    };
    std::uniform_int_distribution<int> pick_pinnacle_d(4, 6);
    for (int i = 0; i < kCases; ++i) {
      const int d = pick_pinnacle_d(rng);
      const Face a = random_ridge(d), b = random_ridge(d);
      const Face m = intersect(a, b);
      if (!m.is_empty()) c.require(m.dimension() >= d - 4, "intersecting ridges meet in a pinnacle");
    }
    std::uniform_int_distribution<int> pick_peak_d(5, 6);
    for (int i = 0; i < kCases; ++i) {
      const int d = pick_peak_d(rng);
      const Face a = random_ridge(d), b = random_ridge(d);
      const std::uint32_t both = a.fixed_mask() & b.fixed_mask();
      const bool same_value = ((a.value_mask() ^ b.value_mask()) & both) != both;
      const bool disjoint = both == 0;
      c.require((antipodality_degree(a, b) < d - 3) == (same_value || disjoint), "ridge pair characterization");
    }
    std::uniform_int_distribution<int> pick_mono(3, 5);
    for (int i = 0; i < kCases; ++i) {
      const int d = pick_mono(rng);
      std::vector<Face> chosen;
      for (const Face& r : detail::ridges(d))
        if (rng() % 3 == 0) chosen.push_back(r);
      if (chosen.empty()) continue;
      const CoverSet s(d, 2, chosen);
      const Face drop = chosen[rng() % chosen.size()];
      c.require(set_self_antipodality(s.without(drop)).k <= set_self_antipodality(s).k, "monotone under removal");
    }
    c.detail << kCases << " cases per property, seed " << o.seed + 11;
  });
}

inline CriterionResult d5_probe(const Options&) {
  return detail::run(12, "d=5 probe exhausts a 10^6 budget deterministically", 60, [&](detail::Check& c) {
    const auto first = probe_d5(1'000'000);
    c.require(first.outcome == SearchOutcome::BudgetExhausted, "BUDGET_EXHAUSTED");
    c.require(first.nodes_expanded == 1'000'000, "nodes_expanded equals budget");
    for (unsigned threads : {1u, 2u, 4u}) {
      const auto again = probe_d5(1'000'000, SearchOptions{threads, false});
      c.require(again.outcome == first.outcome && again.nodes_expanded == first.nodes_expanded,
                "identical result with " + std::to_string(threads) + " threads");
    }
    c.detail << to_string(first.outcome) << " at " << first.nodes_expanded << " nodes";
  });
}

inline std::vector<CriterionResult> run_all(const Options& o = {}) {
  return {degree_oracle_equivalence(o), counting_identities(o),    facet_cover_sharpness(o), pair_split_sharpness(o),
          asterisk_construction(o),     weak_lsb_c3(o),            c3_edge_lemma(o),          six_ridge_classification(o),
          strong_lsb_c4_disjoint(o),    strong_lsb_c4_search(o),   sat_direction(o),          property_suites(o),
          d5_probe(o)};
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " (" << std::fixed;
  os.precision(3);
  os << r.seconds << "s / " << r.limit_seconds << "s) " << r.detail;
  return os.str();
}

}  // namespace antipode::acceptance
