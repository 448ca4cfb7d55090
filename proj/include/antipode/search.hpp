#pragma once

// Exhaustive search over covers whose sets avoid antipodal k-face pairs.
//
// Every face is assigned to exactly one set. Antipode-freeness is closed under
// removing faces from a set, so if some (possibly overlapping) cover avoids
// forbidden pairs, the single-assignment cover obtained by keeping one set per
// face does too. An exhausted single-assignment tree therefore certifies that
// no cover at all exists.
//
// Node accounting: a node is one placement of a face into a set, counted in
// depth-first preorder. The budget caps the number of counted nodes; the search
// reports BudgetExhausted as soon as one more node would be needed. Parallel
// runs split the tree below a fixed depth and merge subtree counts so that the
// outcome, node count and witness match the sequential traversal exactly.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "antipode/cover.hpp"
#include "antipode/face.hpp"

namespace antipode {

struct SearchProblem {
  int d = 0;
  int n_sets = 0;
  int codim = 2;
  int forbid_k = 0;  // no set may contain an antipodal pair of forbid_k-faces

  void validate() const {
    Face::check_dimension(d);
    if (n_sets < 1) throw std::invalid_argument("search needs at least one set");
    if (codim < 1 || codim > d) throw std::invalid_argument("codimension must lie in 1..d");
    if (forbid_k < 0 || forbid_k > d - codim)
      throw std::invalid_argument("forbid_k must lie in 0.." + std::to_string(d - codim));
  }
};

struct SearchOptions {
  unsigned threads = 1;
  // Also prune when some unplaced face is blocked by every set. Sound, but it
  // changes node counts, so it is off unless asked for.
  bool forward_check = false;
};

enum class SearchOutcome { Unsat, Witness, BudgetExhausted };

inline const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Unsat: return "UNSAT";
    case SearchOutcome::Witness: return "WITNESS";
    case SearchOutcome::BudgetExhausted: return "BUDGET_EXHAUSTED";
  }
  return "?";
}

struct SearchResult {
  SearchProblem problem;
  SearchOutcome outcome = SearchOutcome::BudgetExhausted;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t budget = 0;
  std::optional<Cover> witness;
};

namespace detail {

inline constexpr std::size_t kMaxSearchFaces = 64;

// Bit j of masks[i] is set when faces i and j together form a forbidden pair.
inline std::vector<std::uint64_t> conflict_masks(const std::vector<Face>& faces, int forbid_k) {
  if (faces.size() > kMaxSearchFaces)
    throw std::invalid_argument("search supports at most 64 faces, instance has " + std::to_string(faces.size()));
  std::vector<std::uint64_t> masks(faces.size(), 0);
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = 0; j < faces.size(); ++j)
      if (antipodality_degree(faces[i], faces[j]) >= forbid_k) masks[i] |= std::uint64_t{1} << j;
  return masks;
}

class CoverSearch {
 public:
  enum class Stop { None, Witness, Budget };

  struct State {
    std::vector<int> assign;
    std::vector<std::uint64_t> members;
    std::vector<std::uint64_t> blocked;  // faces that may no longer join the set
    int open = 0;                         // sets 0..open-1 are nonempty
    int depth = 0;                        // faces 0..depth-1 are placed
  };

  struct Counter {
    std::uint64_t nodes = 0;
    std::uint64_t cap = 0;
  };

  struct FrontierNode {
    State state;
    std::uint64_t shallow_nodes = 0;  // preorder count of shallow nodes up to and including this one
  };

  CoverSearch(const SearchProblem& p, bool forward_check)
      : problem_(p),
        forward_check_(forward_check), faces_(enumerate_faces(p.d, p.d - p.codim)), conflict_(conflict_masks(faces_, p.forbid_k)) {
    for (std::size_t j = 0; j < faces_.size(); ++j)
      if (conflict_[j] >> j & 1u) self_conflict_ |= std::uint64_t{1} << j;
  }

  int face_count() const { return static_cast<int>(faces_.size()); }

  State root() const {
    State s;
    s.assign.assign(faces_.size(), -1);
    s.members.assign(static_cast<std::size_t>(problem_.n_sets), 0);
    s.blocked.assign(static_cast<std::size_t>(problem_.n_sets), 0);
    return s;
  }

  Stop dfs(State& st, Counter& c) const {
    const int j = st.depth;
    if (j == face_count()) return Stop::Witness;
    if (self_conflict_ >> j & 1u) return Stop::None;
    const int limit = std::min(st.open + 1, problem_.n_sets);
    for (int i = 0; i < limit; ++i) {
      if (st.blocked[static_cast<std::size_t>(i)] >> j & 1u) continue;
      if (c.nodes >= c.cap) return Stop::Budget;
      ++c.nodes;
      const std::uint64_t saved = st.blocked[static_cast<std::size_t>(i)];
      const int saved_open = st.open;
      place(st, j, i);
      if (!dead(st)) {
        const Stop r = dfs(st, c);
        if (r != Stop::None) return r;
      }
      unplace(st, j, i, saved, saved_open);
    }
    return Stop::None;
  }

  // Preorder walk down to `depth` placements, collecting live frontier nodes.
  void collect_frontier(State& st, int depth, std::uint64_t& shallow, std::vector<FrontierNode>& out) const {
    const int j = st.depth;
    if (j == depth) {
      out.push_back({st, shallow});
      return;
    }
    if (self_conflict_ >> j & 1u) return;
    const int limit = std::min(st.open + 1, problem_.n_sets);
    for (int i = 0; i < limit; ++i) {
      if (st.blocked[static_cast<std::size_t>(i)] >> j & 1u) continue;
      ++shallow;
      const std::uint64_t saved = st.blocked[static_cast<std::size_t>(i)];
      const int saved_open = st.open;
      place(st, j, i);
      if (!dead(st)) collect_frontier(st, depth, shallow, out);
      unplace(st, j, i, saved, saved_open);
    }
  }

  Cover to_cover(const State& st) const {
    std::vector<std::vector<Face>> buckets(static_cast<std::size_t>(problem_.n_sets));
    for (std::size_t j = 0; j < faces_.size(); ++j)
      buckets[static_cast<std::size_t>(st.assign[j])].push_back(faces_[j]);
    std::vector<CoverSet> sets;
    for (auto& b : buckets) sets.emplace_back(problem_.d, problem_.codim, std::move(b));
    return Cover(problem_.d, problem_.codim, std::move(sets));
  }

 private:
  void place(State& st, int j, int i) const {
    const auto si = static_cast<std::size_t>(i);
    st.assign[static_cast<std::size_t>(j)] = i;
    st.members[si] |= std::uint64_t{1} << j;
    st.blocked[si] |= conflict_[static_cast<std::size_t>(j)];
    if (i == st.open) ++st.open;
    ++st.depth;
  }

  static void unplace(State& st, int j, int i, std::uint64_t saved_blocked, int saved_open) {
    const auto si = static_cast<std::size_t>(i);
    st.assign[static_cast<std::size_t>(j)] = -1;
    st.members[si] &= ~(std::uint64_t{1} << j);
    st.blocked[si] = saved_blocked;
    st.open = saved_open;
    --st.depth;
  }

  // Forward check: once every set is open, an unplaced face blocked by all of
  // them can never be placed.
  bool dead(const State& st) const {
    if (!forward_check_ || st.open < problem_.n_sets) return false;
    const int n = face_count();
    if (st.depth >= n) return false;
    const std::uint64_t unplaced = (n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)) & ~((std::uint64_t{1} << st.depth) - 1);
    std::uint64_t everywhere = ~std::uint64_t{0};
    for (const std::uint64_t b : st.blocked) everywhere &= b;
    return (everywhere & unplaced) != 0;
  }

  SearchProblem problem_;
  bool forward_check_ = false;
  std::vector<Face> faces_;
  std::vector<std::uint64_t> conflict_;
  std::uint64_t self_conflict_ = 0;
};

inline SearchResult run_parallel(const CoverSearch& engine, const SearchProblem& p, std::uint64_t budget, unsigned threads) {
  SearchResult result{p, SearchOutcome::BudgetExhausted, 0, budget, std::nullopt};

  // Deepen the split until there is enough work to share.
  std::vector<CoverSearch::FrontierNode> frontier;
  std::uint64_t shallow_total = 0;
  const int max_depth = std::min(engine.face_count() - 1, 16);
  for (int depth = 1; depth <= max_depth; ++depth) {
    frontier.clear();
    shallow_total = 0;
    auto st = engine.root();
    engine.collect_frontier(st, depth, shallow_total, frontier);
    if (frontier.size() >= 8u * threads || frontier.empty()) break;
  }

  struct SubResult {
    CoverSearch::Stop stop = CoverSearch::Stop::None;
    std::uint64_t nodes = 0;
    bool skipped = false;
    std::optional<CoverSearch::State> witness;
  };
  std::vector<SubResult> sub(frontier.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_witness{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    for (std::size_t f = next++; f < frontier.size(); f = next++) {
      if (f > first_witness.load() || frontier[f].shallow_nodes > budget) {
        sub[f].skipped = true;
        continue;
      }
      auto st = frontier[f].state;
      CoverSearch::Counter c{0, budget - frontier[f].shallow_nodes};
      sub[f].stop = engine.dfs(st, c);
      sub[f].nodes = c.nodes;
      if (sub[f].stop == CoverSearch::Stop::Witness) {
        sub[f].witness = st;
        std::size_t cur = first_witness.load();
        while (f < cur && !first_witness.compare_exchange_weak(cur, f)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::uint64_t deep = 0;
  for (std::size_t f = 0; f < frontier.size(); ++f) {
    const std::uint64_t before = frontier[f].shallow_nodes + deep;
    if (before > budget || sub[f].skipped || sub[f].stop == CoverSearch::Stop::Budget || before + sub[f].nodes > budget) {
      result.nodes_expanded = budget;
      return result;
    }
    if (sub[f].stop == CoverSearch::Stop::Witness) {
      result.outcome = SearchOutcome::Witness;
      result.nodes_expanded = before + sub[f].nodes;
      result.witness = engine.to_cover(*sub[f].witness);
      return result;
    }
    deep += sub[f].nodes;
  }
  const std::uint64_t total = shallow_total + deep;
  if (total > budget) {
    result.nodes_expanded = budget;
    return result;
  }
  result.outcome = SearchOutcome::Unsat;
  result.nodes_expanded = total;
  return result;
}

}  // namespace detail

// Decides whether the faces of codimension p.codim can be split among p.n_sets
// sets with no set containing an antipodal pair of p.forbid_k-faces.
inline SearchResult exists_cover(const SearchProblem& p, std::uint64_t budget, const SearchOptions& opts = {}) {
  p.validate();
  const detail::CoverSearch engine(p, opts.forward_check);
  if (opts.threads > 1 && engine.face_count() > 2) return detail::run_parallel(engine, p, budget, opts.threads);

  SearchResult result{p, SearchOutcome::Unsat, 0, budget, std::nullopt};
  auto st = engine.root();
  detail::CoverSearch::Counter c{0, budget};
  switch (engine.dfs(st, c)) {
    case detail::CoverSearch::Stop::Witness:
      result.outcome = SearchOutcome::Witness;
      result.witness = engine.to_cover(st);
      break;
    case detail::CoverSearch::Stop::Budget: result.outcome = SearchOutcome::BudgetExhausted; break;
    case detail::CoverSearch::Stop::None: result.outcome = SearchOutcome::Unsat; break;
  }
  result.nodes_expanded = c.nodes;
  return result;
}

// Open case: 5 sets covering the ridges of C^5 with no antipodal 2-faces in any set.
inline SearchResult probe_d5(std::uint64_t budget, const SearchOptions& opts = {}) {
  if (budget == 0) throw std::invalid_argument("probe budget must be positive");
  return exists_cover(SearchProblem{5, 5, 2, 2}, budget, opts);
}

inline constexpr std::uint64_t kMaxEnumerationCandidates = 200'000'000;

// Every `size`-element set of codim-faces with self-antipodality below forbid_k,
// in lexicographic order of their sorted face lists.
inline std::vector<CoverSet> enumerate_antipode_free_sets(int d, int codim, int forbid_k, int size) {
  Face::check_dimension(d);
  if (codim < 1 || codim > d) throw std::invalid_argument("codimension must lie in 1..d");
  const auto faces = enumerate_faces(d, d - codim);
  const int n = static_cast<int>(faces.size());
  if (size < 0 || size > n) throw std::invalid_argument("set size outside 0.." + std::to_string(n));
  if (faces.size() > detail::kMaxSearchFaces || detail::binomial(n, size) > kMaxEnumerationCandidates)
    throw std::invalid_argument("instance too large for exhaustive enumeration");
  const auto conflict = detail::conflict_masks(faces, forbid_k);

  std::vector<CoverSet> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start, std::uint64_t blocked) -> void {
    if (static_cast<int>(pick.size()) == size) {
      std::vector<Face> chosen;
      for (int i : pick) chosen.push_back(faces[static_cast<std::size_t>(i)]);
      out.emplace_back(d, codim, std::move(chosen));
      return;
    }
    for (int i = start; i <= n - (size - static_cast<int>(pick.size())); ++i) {
      if (blocked >> i & 1u) continue;
      if (conflict[static_cast<std::size_t>(i)] >> i & 1u) continue;
      pick.push_back(i);
      self(self, i + 1, blocked | conflict[static_cast<std::size_t>(i)]);
      pick.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

struct EdgeLemmaCheck {
  bool holds = false;
  int antipode_free_large_sets = 0;  // edge sets of size >= 4 with no antipodal vertices
  int face_boundaries = 0;           // of those, how many bound a 2-face

  explicit operator bool() const { return holds; }
};

// Scans all 2^12 edge subsets of C^3: each antipode-free one with at least four
// edges must be the boundary of a 2-face.
inline EdgeLemmaCheck verify_c3_edge_lemma() {
  const auto edges = enumerate_faces(3, 1);
  const auto conflict = detail::conflict_masks(edges, 0);
  std::vector<std::uint64_t> boundaries;
  for (const Face& facet : enumerate_faces(3, 2)) {
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (contains(facet, edges[j])) m |= std::uint64_t{1} << j;
    boundaries.push_back(m);
  }

  EdgeLemmaCheck out;
  const std::uint64_t all = std::uint64_t{1} << edges.size();
  for (std::uint64_t subset = 0; subset < all; ++subset) {
    if (std::popcount(subset) < 4) continue;
    bool free = true;
    for (std::size_t j = 0; j < edges.size() && free; ++j)
      if ((subset >> j & 1u) && (conflict[j] & subset) != 0) free = false;
    if (!free) continue;
    ++out.antipode_free_large_sets;
    if (std::find(boundaries.begin(), boundaries.end(), subset) != boundaries.end()) ++out.face_boundaries;
  }
  out.holds = out.antipode_free_large_sets == out.face_boundaries;
  return out;
}

struct DisjointSpecialSetsCheck {
  bool holds = false;
  std::size_t special_sets = 0;
  std::uint64_t combinations = 0;
  std::uint64_t disjoint_covers = 0;

  explicit operator bool() const { return holds; }
};

// No four of the antipodal-edge-free 6-ridge sets of C^4 partition its 24 ridges.
inline DisjointSpecialSetsCheck verify_no_four_disjoint_special_sets() {
  const auto ridges = enumerate_faces(4, 2);
  const auto special = enumerate_antipode_free_sets(4, 2, 1, 6);
  std::vector<std::uint64_t> masks;
  for (const CoverSet& s : special) {
    std::uint64_t m = 0;
    for (const Face& f : s.faces())
      m |= std::uint64_t{1} << (std::lower_bound(ridges.begin(), ridges.end(), f) - ridges.begin());
    masks.push_back(m);
  }
  const std::uint64_t all = (std::uint64_t{1} << ridges.size()) - 1;

  DisjointSpecialSetsCheck out;
  out.special_sets = masks.size();
  const std::size_t n = masks.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t e = c + 1; e < n; ++e) {
          ++out.combinations;
          const bool disjoint = (masks[a] & masks[b]) == 0 && (masks[a] & masks[c]) == 0 && (masks[a] & masks[e]) == 0 &&
                                (masks[b] & masks[c]) == 0 && (masks[b] & masks[e]) == 0 && (masks[c] & masks[e]) == 0;
          if (disjoint && (masks[a] | masks[b] | masks[c] | masks[e]) == all) ++out.disjoint_covers;
        }
  out.holds = out.disjoint_covers == 0;
  return out;
}

}  // namespace antipode
