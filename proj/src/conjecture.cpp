#include "ramsey/conjecture.hpp"

#include <mpfr.h>

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ramsey/bounds.hpp"
#include "ramsey/chi.hpp"

namespace ramsey {

long long conjecture_k_max(int r) {
  if (r < 3) throw std::invalid_argument("conjecture_k_max: need r >= 3");
  BigInt cube = BigInt(r) * r * r;
  BigInt root = isqrt(cube);
  return r - 1 + root.get_si();
}

BigInt f_value(long long k, int r) {
  if (k < 3 || r < 3) throw std::invalid_argument("f_value: need k >= 3, r >= 3");
  BigInt g = g_bound(r * (k - 2) + 2, r);
  std::vector<unsigned long> parts(static_cast<std::size_t>(r), static_cast<unsigned long>(k - 1));
  return g - multinomial(parts);
}

namespace {

constexpr mpfr_prec_t kPrec = 128;

// ln of g(k_star, r) with directed rounding: `up` selects the upper bound.
// g is reconstructed from its geometric-sum closed form with every operation
// rounded toward the requested direction; all quantities are positive, so the
// chains are monotone.
double ln_g_directed(long long k_star, int r, bool up) {
  mpfr_rnd_t rnd = up ? MPFR_RNDU : MPFR_RNDD;
  mpfr_t p1, p2, acc;
  mpfr_inits2(kPrec, p1, p2, acc, nullptr);
  if (r % 2 == 1) {
    // (r^(K-1) - 1)/(r - 1) + 1
    mpfr_set_ui(p1, static_cast<unsigned long>(r), rnd);
    mpfr_pow_ui(p1, p1, static_cast<unsigned long>(k_star - 1), rnd);
    mpfr_sub_ui(p1, p1, 1, rnd);
    mpfr_div_ui(p1, p1, static_cast<unsigned long>(r - 1), rnd);
    mpfr_add_ui(p1, p1, 1, rnd);
    mpfr_log(acc, p1, rnd);
  } else {
    // (r^(K-3) - 1)/(r - 1) + r^(K-2) + 1
    mpfr_set_ui(p1, static_cast<unsigned long>(r), rnd);
    mpfr_pow_ui(p1, p1, static_cast<unsigned long>(k_star - 3), rnd);
    mpfr_sub_ui(p1, p1, 1, rnd);
    mpfr_div_ui(p1, p1, static_cast<unsigned long>(r - 1), rnd);
    mpfr_set_ui(p2, static_cast<unsigned long>(r), rnd);
    mpfr_pow_ui(p2, p2, static_cast<unsigned long>(k_star - 2), rnd);
    mpfr_add(p1, p1, p2, rnd);
    mpfr_add_ui(p1, p1, 1, rnd);
    mpfr_log(acc, p1, rnd);
  }
  double out = mpfr_get_d(acc, rnd);
  mpfr_clears(p1, p2, acc, nullptr);
  return out;
}

// ln(t * (rm)! / (m!)^r) with directed rounding via lngamma.
double ln_rhs_directed(int r, long long t, long long m, bool up) {
  mpfr_rnd_t rnd = up ? MPFR_RNDU : MPFR_RNDD;
  mpfr_rnd_t anti = up ? MPFR_RNDD : MPFR_RNDU;
  mpfr_t x, num, den, acc;
  mpfr_inits2(kPrec, x, num, den, acc, nullptr);
  mpfr_set_ui(x, static_cast<unsigned long>(r) * static_cast<unsigned long>(m) + 1, MPFR_RNDN);
  mpfr_lngamma(num, x, rnd);
  mpfr_set_ui(x, static_cast<unsigned long>(m) + 1, MPFR_RNDN);
  mpfr_lngamma(den, x, anti);
  mpfr_mul_ui(den, den, static_cast<unsigned long>(r), anti);
  mpfr_sub(acc, num, den, rnd);
  mpfr_set_ui(x, static_cast<unsigned long>(t), MPFR_RNDN);
  mpfr_log(x, x, rnd);
  mpfr_add(acc, acc, x, rnd);
  double out = mpfr_get_d(acc, rnd);
  mpfr_clears(x, num, den, acc, nullptr);
  return out;
}

int exact_sign(long long k_star, int r, long long t, long long m) {
  BigInt lhs = k_star <= 2 ? BigInt(2) : g_bound(k_star, r);
  std::vector<unsigned long> parts(static_cast<std::size_t>(r), static_cast<unsigned long>(m));
  BigInt rhs = static_cast<long>(t) * multinomial(parts);
  int c = cmp(lhs, rhs);
  return (c > 0) - (c < 0);
}

// splitmix64; used for the deterministic exact-sampling decision so that the
// sampled set is identical for any worker count.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

CompareOutcome compare_chi_vs_multinomial(long long k_star, int r, long long t, long long m,
                                          bool exact_only) {
  if (r < 2 || t < 1 || m < 0) throw std::invalid_argument("compare: bad arguments");
  CompareOutcome out;
  if (exact_only || m == 0 || k_star <= 2) {
    out.sign = exact_sign(k_star, r, t, m);
    out.exact = true;
    return out;
  }
  double lhs_lo = ln_g_directed(k_star, r, false);
  double lhs_hi = ln_g_directed(k_star, r, true);
  double rhs_lo = ln_rhs_directed(r, t, m, false);
  double rhs_hi = ln_rhs_directed(r, t, m, true);
  out.log_margin_lo = rhs_lo - lhs_hi;
  out.log_margin_hi = rhs_hi - lhs_lo;
  if (out.log_margin_lo > 0) {
    out.sign = -1;  // lhs certainly below rhs
  } else if (out.log_margin_hi < 0) {
    out.sign = +1;
  } else {
    out.sign = exact_sign(k_star, r, t, m);
    out.exact = true;
  }
  return out;
}

nlohmann::json ConjectureReport::to_json() const {
  nlohmann::json vs = nlohmann::json::array();
  for (const KVerdict& v : verdicts)
    vs.push_back({{"k", v.k},
                  {"pass", v.pass},
                  {"margin_sign", v.margin_sign},
                  {"resolved_exact", v.resolved_exact},
                  {"sampled", v.sampled}});
  return nlohmann::json{{"r", r},
                        {"k_max", k_max},
                        {"all_pass", all_pass},
                        {"comparison_mode", comparison_mode},
                        {"verdicts", vs}};
}

nlohmann::json ScanResult::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const ConjectureReport& r : reports) rs.push_back(r.to_json());
  return nlohmann::json{{"all_pass", all_pass},
                        {"exact_fallbacks", exact_fallbacks},
                        {"sampled_checks", sampled_checks},
                        {"sample_mismatches", sample_mismatches},
                        {"reports", rs}};
}

namespace {

ConjectureReport scan_one(int r, const ScanOptions& opts, std::uint64_t& exact_fallbacks,
                          std::uint64_t& sampled, std::uint64_t& mismatches) {
  ConjectureReport rep;
  rep.r = r;
  rep.k_max = conjecture_k_max(r);
  rep.comparison_mode = opts.exact_only ? "exact" : "log-guarded-with-exact-fallback";
  rep.all_pass = true;
  for (long long k = 3; k <= rep.k_max; ++k) {
    long long k_star = static_cast<long long>(r) * (k - 2) + 2;
    CompareOutcome cmp = compare_chi_vs_multinomial(k_star, r, 1, k - 1, opts.exact_only);
    KVerdict v;
    v.k = k;
    v.margin_sign = cmp.sign;
    v.pass = cmp.sign < 0;
    v.resolved_exact = cmp.exact;
    if (cmp.exact && !opts.exact_only) ++exact_fallbacks;
    if (!cmp.exact && opts.sample_permille > 0) {
      std::uint64_t h = mix(opts.sample_seed ^ mix(static_cast<std::uint64_t>(r) << 32 |
                                                   static_cast<std::uint64_t>(k)));
      if (h % 1000 < static_cast<std::uint64_t>(opts.sample_permille)) {
        v.sampled = true;
        ++sampled;
        int es = exact_sign(k_star, r, 1, k - 1);
        if (es != cmp.sign) ++mismatches;
      }
    }
    if (!v.pass) rep.all_pass = false;
    rep.verdicts.push_back(v);
  }
  return rep;
}

}  // namespace

ScanResult conjecture_scan(int r_lo, int r_hi, const ScanOptions& opts) {
  if (r_lo < 3 || r_hi < r_lo) throw std::invalid_argument("conjecture_scan: need 3 <= r_lo <= r_hi");
  std::size_t count = static_cast<std::size_t>(r_hi - r_lo + 1);
  std::vector<ConjectureReport> reports(count);
  std::vector<std::uint64_t> fallbacks(count, 0), samples(count, 0), bad(count, 0);

  auto run_index = [&](std::size_t i) {
    reports[i] = scan_one(r_lo + static_cast<int>(i), opts, fallbacks[i], samples[i], bad[i]);
  };
  if (opts.workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) run_index(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        run_index(i);
      }
    };
    std::vector<std::thread> pool;
    int nw = std::min<int>(opts.workers, static_cast<int>(count));
    for (int i = 0; i < nw; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  ScanResult out;
  out.reports = std::move(reports);
  out.all_pass = true;
  for (std::size_t i = 0; i < count; ++i) {
    if (!out.reports[i].all_pass) out.all_pass = false;
    out.exact_fallbacks += fallbacks[i];
    out.sampled_checks += samples[i];
    out.sample_mismatches += bad[i];
  }
  return out;
}

nlohmann::json IntervalResult::to_json() const {
  nlohmann::json j{{"t", t}, {"r", r}, {"k_cap", k_cap}, {"empty", empty}, {"capped", capped}};
  if (!empty) j["interval"] = {3, c};
  return j;
}

IntervalResult interval_search(int t, int r, long long k_cap, bool exact_only) {
  if (t < 1 || r < 3 || k_cap < 3) throw std::invalid_argument("interval_search: need t >= 1, r >= 3, k_cap >= 3");
  IntervalResult out;
  out.t = t;
  out.r = r;
  out.k_cap = k_cap;
  long long k = 3;
  while (k <= k_cap) {
    long long k_star = static_cast<long long>(r) * (k - t - 1) + t + 1;
    CompareOutcome cmp = compare_chi_vs_multinomial(k_star, r, t, std::max<long long>(k - t, 0), exact_only);
    if (cmp.sign >= 0) break;
    out.empty = false;
    out.c = k;
    ++k;
  }
  out.capped = !out.empty && out.c == k_cap;
  return out;
}

void emit_f_table(int r, long long k_lo, long long k_hi, std::ostream& out) {
  if (k_lo < 3 || k_hi < k_lo) throw std::invalid_argument("emit_f_table: need 3 <= k_lo <= k_hi");
  out << "k,f_exact,sign,digits\n";
  for (long long k = k_lo; k <= k_hi; ++k) {
    BigInt f = f_value(k, r);
    int sign = sgn(f);
    out << k << ',' << f.get_str() << ',' << sign << ',' << decimal_digits(f) << '\n';
  }
}

void emit_f_table_file(int r, long long k_lo, long long k_hi, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_f_table: cannot write " + path);
  emit_f_table(r, k_lo, k_hi, out);
  if (!out.good()) throw std::runtime_error("emit_f_table: write failed for " + path);
}

}  // namespace ramsey
