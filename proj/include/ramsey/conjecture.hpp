#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey/bigint.hpp"

namespace ramsey {

// Largest k with k <= r^(3/2) + r - 1, characterized exactly over the
// integers as (k - r + 1)^2 <= r^3. No floating point is involved.
long long conjecture_k_max(int r);

// Exact f(k,r) = g(r(k-2)+2, r) - (rk-r)!/((k-1)!)^r. Requires k >= 3, r >= 3.
BigInt f_value(long long k, int r);

// One comparison of the chi-based bound against a scaled multinomial.
// `sign` is the sign of (lhs - rhs); the strict inequality lhs < rhs holds
// iff sign < 0. When resolved by logarithms, [log_margin_lo, log_margin_hi]
// are certified directed-rounding bounds on ln(rhs) - ln(lhs); whenever that
// interval straddles zero the comparison is re-resolved exactly.
struct CompareOutcome {
  int sign = 0;
  bool exact = false;  // resolved by big-integer comparison
  double log_margin_lo = 0.0;
  double log_margin_hi = 0.0;
};

// lhs = g(k_star, r) (or the chi_r(2) = 2 fallback when k_star <= 2),
// rhs = t * multinomial(m repeated r times).
CompareOutcome compare_chi_vs_multinomial(long long k_star, int r, long long t, long long m,
                                          bool exact_only);

struct KVerdict {
  long long k = 0;
  bool pass = false;  // strict inequality holds
  int margin_sign = 0;  // sign of f(k,r)
  bool resolved_exact = false;
  bool sampled = false;  // exact spot-check of a log-guarded verdict
};

struct ConjectureReport {
  int r = 0;
  long long k_max = 0;
  std::vector<KVerdict> verdicts;
  bool all_pass = false;
  std::string comparison_mode;  // "exact" | "log-guarded-with-exact-fallback"

  nlohmann::json to_json() const;
};

struct ScanOptions {
  bool exact_only = false;
  int workers = 1;
  // Deterministic exact spot-checks of log-guarded verdicts, per mille.
  int sample_permille = 10;
  std::uint64_t sample_seed = 0x9e3779b97f4a7c15ULL;
};

struct ScanResult {
  std::vector<ConjectureReport> reports;
  bool all_pass = false;
  std::uint64_t exact_fallbacks = 0;   // near-zero margins resolved exactly
  std::uint64_t sampled_checks = 0;    // deterministic exact spot-checks
  std::uint64_t sample_mismatches = 0; // guarded verdicts contradicted exactly (must stay 0)

  nlohmann::json to_json() const;
};

// Compares g(r(k-2)+2, r) against the multinomial (rk-r)!/((k-1)!)^r for
// every k in [3, k_max(r)] and every r in [r_lo, r_hi]. Reports are merged in
// ascending r regardless of worker count.
ScanResult conjecture_scan(int r_lo, int r_hi, const ScanOptions& opts = {});

// Maximal contiguous interval [3, c] on which g(r(k-t-1)+t+1, r) stays
// strictly below t * multinomial(k-t repeated r). Empty when already false at
// k = 3. The left side is the chi-based bound for R_r([k,t]); the printed
// form of this inequality elsewhere shifts its argument, see the README note.
struct IntervalResult {
  int t = 0;
  int r = 0;
  long long k_cap = 0;
  bool empty = true;
  long long c = 0;  // interval is [3, c] when nonempty
  bool capped = false;  // inequality still held at k_cap

  nlohmann::json to_json() const;
};

IntervalResult interval_search(int t, int r, long long k_cap, bool exact_only = false);

// CSV rows "k,f_exact,sign,digits" for k in [k_lo, k_hi], exact values.
void emit_f_table(int r, long long k_lo, long long k_hi, std::ostream& out);
void emit_f_table_file(int r, long long k_lo, long long k_hi, const std::string& path);

}  // namespace ramsey
