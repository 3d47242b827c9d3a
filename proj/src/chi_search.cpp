#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ramsey/chi.hpp"

namespace ramsey {

namespace {

// One search round decides a single host size n: either every enumerated
// coloring of K_n contains a chi-colored k-clique (universal), or an
// avoidance coloring exists (refuted), or the assignment budget ran out.
//
// Enumeration is over canonical representatives only: along the fixed
// vertex-major edge order (0,1),(0,2),(1,2),(0,3),... a new color may be used
// only after all smaller colors have appeared. Every coloring is a color
// permutation of exactly one such representative, and chi-ness of induced
// cliques is preserved by permuting colors, so deciding the representatives
// decides all colorings. Surjectivity is likewise orbit-invariant: the
// representative uses color r-1 iff the orbit is surjective.
struct RoundSearch {
  int n, r, k;
  bool surjective;
  std::uint64_t cap;

  std::vector<std::pair<int, int>> edges;  // vertex-major order
  std::vector<std::uint8_t> colors;
  std::uint64_t nodes = 0;
  std::vector<std::uint8_t> witness;

  enum class Dfs { kDone, kFound, kAborted };

  RoundSearch(int n_, int r_, int k_, bool surj, std::uint64_t cap_)
      : n(n_), r(r_), k(k_), surjective(surj), cap(cap_) {
    for (int b = 1; b < n; ++b)
      for (int a = 0; a < b; ++a) edges.emplace_back(a, b);
    colors.assign(edges.size(), 0);
  }

  static std::size_t rank(int i, int j) { return static_cast<std::size_t>(j) * (j - 1) / 2 + i; }

  // Greedy peel on a k-vertex subset, reading colors straight out of the
  // partial assignment (all pairs of `verts` must already be assigned).
  bool subset_is_chi(const int* verts) const {
    std::uint32_t rem = (std::uint32_t{1} << k) - 1;
    int count = k;
    while (count > 2) {
      int pick = -1;
      for (std::uint32_t m = rem; m; m &= m - 1) {
        int i = std::countr_zero(m);
        int col = -1;
        bool mono = true;
        for (std::uint32_t o = rem & ~(std::uint32_t{1} << i); o; o &= o - 1) {
          int jj = std::countr_zero(o);
          int a = verts[i], b = verts[jj];
          if (a > b) std::swap(a, b);
          int c = colors[rank(a, b)];
          if (col == -1)
            col = c;
          else if (col != c) {
            mono = false;
            break;
          }
        }
        if (mono) {
          pick = i;
          break;
        }
      }
      if (pick < 0) return false;
      rem &= ~(std::uint32_t{1} << pick);
      --count;
    }
    return true;
  }

  // The k-subsets completed by edge (a,b) are {a,b} plus k-2 vertices below a.
  bool completes_chi_subset(int a, int b) const {
    int need = k - 2;
    if (a < need) return false;
    std::vector<int> verts(static_cast<std::size_t>(k));
    verts[static_cast<std::size_t>(k - 2)] = a;
    verts[static_cast<std::size_t>(k - 1)] = b;
    std::vector<int> idx(static_cast<std::size_t>(need));
    for (int i = 0; i < need; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      for (int i = 0; i < need; ++i) verts[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i)];
      if (subset_is_chi(verts.data())) return true;
      int i = need - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == a - need + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < need; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return false;
  }

  Dfs dfs(std::size_t depth, int max_used) {
    if (depth == edges.size()) {
      if (surjective && max_used != r - 1) return Dfs::kDone;
      witness = colors;
      return Dfs::kFound;
    }
    auto [a, b] = edges[depth];
    int cmax = std::min(max_used + 1, r - 1);
    for (int c = 0; c <= cmax; ++c) {
      if (nodes == cap) return Dfs::kAborted;
      ++nodes;
      colors[depth] = static_cast<std::uint8_t>(c);
      if (!completes_chi_subset(a, b)) {
        Dfs sub = dfs(depth + 1, std::max(max_used, c));
        if (sub != Dfs::kDone) return sub;
      }
    }
    return Dfs::kDone;
  }
};

struct Prefix {
  std::vector<std::uint8_t> colors;
  int max_used;
};

// Enumerates the canonical, chi-pruned assignments of the first `depth`
// edges. Shares the node accounting with the main search so that the total
// equals a single sequential DFS.
struct PrefixEnum {
  RoundSearch base;
  std::size_t depth;
  std::vector<Prefix> out;
  bool aborted = false;

  PrefixEnum(int n, int r, int k, bool surj, std::uint64_t cap, std::size_t depth_)
      : base(n, r, k, surj, cap), depth(depth_) {}

  void rec(std::size_t d, int max_used) {
    if (aborted) return;
    if (d == depth) {
      out.push_back({std::vector<std::uint8_t>(base.colors.begin(),
                                               base.colors.begin() + static_cast<long>(depth)),
                     max_used});
      return;
    }
    auto [a, b] = base.edges[d];
    int cmax = std::min(max_used + 1, base.r - 1);
    for (int c = 0; c <= cmax; ++c) {
      if (base.nodes == base.cap) {
        aborted = true;
        return;
      }
      ++base.nodes;
      base.colors[d] = static_cast<std::uint8_t>(c);
      if (!base.completes_chi_subset(a, b)) rec(d + 1, std::max(max_used, c));
      if (aborted) return;
    }
  }
};

enum class RoundVerdict { kUniversal, kRefuted, kExhausted };

struct RoundOutcome {
  RoundVerdict verdict;
  std::uint64_t examined = 0;
  std::vector<std::uint8_t> witness;
};

struct PartitionResult {
  bool completed = false;
  bool found = false;
  std::uint64_t nodes = 0;
  std::vector<std::uint8_t> witness;
};

PartitionResult run_partition(int n, int r, int k, bool surjective, std::uint64_t cap,
                              const Prefix& p, std::size_t start_depth) {
  RoundSearch s(n, r, k, surjective, cap);
  std::copy(p.colors.begin(), p.colors.end(), s.colors.begin());
  RoundSearch::Dfs res = s.dfs(start_depth, p.max_used);
  PartitionResult out;
  out.nodes = s.nodes;
  out.completed = res != RoundSearch::Dfs::kAborted;
  out.found = res == RoundSearch::Dfs::kFound;
  if (out.found) out.witness = s.witness;
  return out;
}

// The merge replays sequential semantics: partitions are charged in order
// against the round budget, so the verdict, the witness and the examined
// count are identical for every worker count.
RoundOutcome run_round(int n, int r, int k, bool surjective, std::uint64_t cap, int workers) {
  std::size_t num_edges = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t split_depth = std::min<std::size_t>(num_edges, 6);

  PrefixEnum pe(n, r, k, surjective, cap, split_depth);
  pe.rec(0, -1);
  if (pe.aborted) return {RoundVerdict::kExhausted, cap, {}};
  std::uint64_t prefix_nodes = pe.base.nodes;
  std::uint64_t sub_cap = cap - prefix_nodes;

  std::vector<PartitionResult> results(pe.out.size());
  if (workers <= 1 || pe.out.size() <= 1) {
    // Sequential fast path: later partitions cannot change an outcome decided
    // earlier, so stop as soon as the budget is consumed or a witness shows.
    std::uint64_t used = prefix_nodes;
    for (std::size_t i = 0; i < pe.out.size(); ++i) {
      PartitionResult pr = run_partition(n, r, k, surjective, cap - used, pe.out[i], split_depth);
      used += pr.nodes;
      if (!pr.completed) return {RoundVerdict::kExhausted, cap, {}};
      if (pr.found) return {RoundVerdict::kRefuted, used, pr.witness};
    }
    return {RoundVerdict::kUniversal, used, {}};
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_found{pe.out.size()};
  auto work = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= pe.out.size()) return;
      if (i > first_found.load()) continue;  // cannot affect the merge
      results[i] = run_partition(n, r, k, surjective, sub_cap, pe.out[i], split_depth);
      if (results[i].found) {
        std::size_t cur = first_found.load();
        while (i < cur && !first_found.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  int nw = std::min<int>(workers, static_cast<int>(pe.out.size()));
  pool.reserve(static_cast<std::size_t>(nw));
  for (int i = 0; i < nw; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  std::uint64_t used = prefix_nodes;
  for (std::size_t i = 0; i < pe.out.size(); ++i) {
    const PartitionResult& pr = results[i];
    if (i > first_found.load()) {
      // Skipped partition: recompute sequentially, it still matters if no
      // earlier partition decided the round within budget.
      PartitionResult redo = run_partition(n, r, k, surjective, sub_cap, pe.out[i], split_depth);
      if (used + redo.nodes > cap || !redo.completed) return {RoundVerdict::kExhausted, cap, {}};
      used += redo.nodes;
      if (redo.found) return {RoundVerdict::kRefuted, used, redo.witness};
      continue;
    }
    if (used + pr.nodes > cap || !pr.completed) return {RoundVerdict::kExhausted, cap, {}};
    used += pr.nodes;
    if (pr.found) return {RoundVerdict::kRefuted, used, pr.witness};
  }
  return {RoundVerdict::kUniversal, used, {}};
}

CompleteColoring coloring_from_flat(int n, int r, const std::vector<std::uint8_t>& flat) {
  return CompleteColoring(n, r, flat);
}

}  // namespace

ChiSearchReport chi_search(int r, int k, int n_max, const ChiSearchOptions& opts) {
  if (r < 1) throw std::invalid_argument("chi_search: need r >= 1");
  if (k < 2 || k > n_max) throw std::invalid_argument("chi_search: need 2 <= k <= n_max");
  ChiSearchReport rep;
  rep.r = r;
  rep.k = k;
  rep.n_max = n_max;
  rep.surjective_only = opts.surjective_only;
  if (k == 2) {
    rep.exact = true;
    rep.value = 2;
    return rep;
  }

  std::uint64_t budget_left = opts.budget;
  std::vector<RoundVerdict> verdicts;
  std::vector<std::vector<std::uint8_t>> avoiders;  // per refuted round
  int last_n = k - 1;
  for (int n = k; n <= n_max; ++n) {
    RoundOutcome out = run_round(n, r, k, opts.surjective_only, budget_left, opts.workers);
    rep.colorings_examined += out.examined;
    budget_left -= std::min(budget_left, out.examined);
    if (out.verdict == RoundVerdict::kExhausted) {
      rep.budget_exhausted = true;
      break;
    }
    verdicts.push_back(out.verdict);
    avoiders.push_back(out.witness);
    last_n = n;
  }

  // Exact value: the smallest n whose whole completed suffix is universal and
  // whose predecessor (if searched) was refuted.
  int n_done = last_n;
  int suffix_start = -1;
  for (int n = n_done; n >= k; --n) {
    if (verdicts[static_cast<std::size_t>(n - k)] != RoundVerdict::kUniversal) break;
    suffix_start = n;
  }
  if (suffix_start >= 0 && !rep.budget_exhausted &&
      (suffix_start == k ||
       verdicts[static_cast<std::size_t>(suffix_start - 1 - k)] == RoundVerdict::kRefuted)) {
    rep.exact = true;
    rep.value = suffix_start;
    if (suffix_start == k) {
      rep.witness = CompleteColoring::monochromatic(k - 1, r, 0);
    } else {
      rep.witness =
          coloring_from_flat(suffix_start - 1, r, avoiders[static_cast<std::size_t>(suffix_start - 1 - k)]);
    }
    return rep;
  }

  // Lower-bound-only report.
  int last_refuted = k - 1;
  for (int n = k; n <= n_done; ++n)
    if (verdicts[static_cast<std::size_t>(n - k)] == RoundVerdict::kRefuted) last_refuted = n;
  rep.exact = false;
  rep.value = last_refuted + 1;
  if (last_refuted >= k)
    rep.witness = coloring_from_flat(last_refuted, r, avoiders[static_cast<std::size_t>(last_refuted - k)]);
  return rep;
}

}  // namespace ramsey
