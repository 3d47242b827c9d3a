#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "ramsey/bigint.hpp"
#include "ramsey/coloring.hpp"

namespace ramsey {

// Witness that a coloring is a chi_r-coloring: a vertex ordering (position ->
// vertex id) together with a color per position such that every edge takes
// the color of its earlier endpoint. The color of the last position plays no
// role; we store the one of the second-to-last position there.
struct ChiCertificate {
  std::vector<int> ordering;
  std::vector<int> phi;
};

bool certificate_is_valid(const CompleteColoring& c, const ChiCertificate& cert);

// Greedy recognizer: repeatedly peel the lowest-indexed remaining vertex
// whose edges into the rest all share one color; succeed once two vertices
// remain (a single edge is always chi). Removing any monochromatic vertex
// from a chi-coloring leaves a chi-coloring, so the greedy choice loses
// nothing; the test suite checks this against the ordering oracle.
std::optional<ChiCertificate> recognize_chi(const CompleteColoring& c);

// Exhaustive oracle over vertex orderings (phi is forced once the ordering is
// fixed). Backtracks over orderings with early prefix rejection, which visits
// exactly the orderings a full n! enumeration would accept prefix-wise.
// Refuses hosts larger than `size_cap`.
bool recognize_chi_oracle(const CompleteColoring& c, int size_cap = 8);

// Exact chi_r(3): r+1 for even r, r+2 for odd r (star Ramsey number of the
// two-edge star, specialized from the Burr-Roberts formula). Requires r >= 2.
long long chi3_formula(int r);

// One step of the recurrence chi_r(k) <= r*chi_r(k-1) - r + 2.
BigInt chi_recurrence_step(const BigInt& prev, int r);

// Closed form g(k,r) obtained by iterating the recurrence from chi_r(3):
//   odd r:  (r^(k-1) - 1)/(r - 1) + 1
//   even r: (r^(k-3) - 1)/(r - 1) + r^(k-2) + 1
// Requires k >= 3, r >= 2.
BigInt g_bound(long long k, int r);

struct ChiSearchOptions {
  bool surjective_only = false;
  std::uint64_t budget = 100'000'000;  // DFS assignment budget
  int workers = 1;
};

struct ChiSearchReport {
  int r = 0;
  int k = 0;
  int n_max = 0;
  bool surjective_only = false;
  bool exact = false;      // value is chi_r(k); otherwise value is a lower bound
  long long value = 0;
  std::optional<CompleteColoring> witness;  // avoidance coloring at value-1
  std::uint64_t colorings_examined = 0;     // DFS assignments tried
  bool budget_exhausted = false;

  nlohmann::json to_json() const;
};

// Decides, for n = k..n_max, whether every r-coloring of K_n (all maps by
// default, surjections only when flagged) contains a k-clique whose induced
// coloring is a chi-coloring, and reports the least such n together with the
// avoidance witness found at n-1. Enumeration is quotiented by global color
// permutations (colors first appear in increasing order along a fixed edge
// enumeration) and pruned as soon as a completed k-subset is chi-colored.
// Requires 2 <= k <= n_max; k = 2 returns 2 immediately.
ChiSearchReport chi_search(int r, int k, int n_max, const ChiSearchOptions& opts = {});

}  // namespace ramsey
