#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ramsey/bigint.hpp"
#include "ramsey/conjecture.hpp"

using ramsey::BigInt;
using ramsey::compare_chi_vs_multinomial;
using ramsey::conjecture_k_max;
using ramsey::conjecture_scan;
using ramsey::emit_f_table;
using ramsey::emit_f_table_file;
using ramsey::f_value;
using ramsey::interval_search;
using ramsey::ScanOptions;

TEST_CASE("k_max by exact integer characterization") {
  CHECK(conjecture_k_max(3) == 7);
  CHECK(conjecture_k_max(4) == 11);  // 4^(3/2) = 8 exactly
  CHECK(conjecture_k_max(150) == 149 + 1837);
  for (int r = 3; r <= 150; ++r) {
    long long kmax = conjecture_k_max(r);
    BigInt cube = BigInt(r) * r * r;
    BigInt lo = BigInt(static_cast<long>(kmax - r + 1)) * static_cast<long>(kmax - r + 1);
    BigInt hi = BigInt(static_cast<long>(kmax - r + 2)) * static_cast<long>(kmax - r + 2);
    CHECK(lo <= cube);
    CHECK(cube < hi);
  }
}

TEST_CASE("k_max agrees with a 100-digit floating evaluation") {
  mpfr_t x, root;
  mpfr_inits2(340, x, root, nullptr);  // ~100 decimal digits
  for (int r = 3; r <= 150; ++r) {
    mpfr_set_ui(x, static_cast<unsigned long>(r), MPFR_RNDN);
    mpfr_pow_ui(root, x, 3, MPFR_RNDN);
    mpfr_sqrt(root, root, MPFR_RNDN);
    mpfr_add_ui(root, root, static_cast<unsigned long>(r - 1), MPFR_RNDN);
    mpfr_floor(root, root);
    CHECK(mpfr_get_si(root, MPFR_RNDN) == conjecture_k_max(r));
  }
  mpfr_clears(x, root, nullptr);
}

TEST_CASE("exact f values at small points") {
  CHECK(f_value(3, 3) == -49);
  CHECK(f_value(4, 3) == -586);
  CHECK(f_value(5, 3) == -5125);
  // The inequality genuinely flips inside the stated range: these are exact.
  CHECK(f_value(6, 3) == 40406);
  CHECK(f_value(7, 3) == 4370225);
  CHECK_THROWS_AS(f_value(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(f_value(2, 3), std::invalid_argument);
}

TEST_CASE("guarded comparisons agree with exact ones everywhere they are certified") {
  for (int r = 3; r <= 12; ++r) {
    long long kmax = conjecture_k_max(r);
    for (long long k = 3; k <= kmax; ++k) {
      long long k_star = static_cast<long long>(r) * (k - 2) + 2;
      auto guarded = compare_chi_vs_multinomial(k_star, r, 1, k - 1, false);
      auto exact = compare_chi_vs_multinomial(k_star, r, 1, k - 1, true);
      CHECK(guarded.sign == exact.sign);
      if (!guarded.exact) {
        // The certified interval must bracket the true log-margin side.
        CHECK(guarded.log_margin_lo <= guarded.log_margin_hi);
        CHECK((guarded.sign < 0) == (guarded.log_margin_lo > 0));
      }
    }
  }
}

TEST_CASE("scan of r = 3 finds the exact verdict pattern") {
  auto res = conjecture_scan(3, 3);
  REQUIRE(res.reports.size() == 1);
  const auto& rep = res.reports[0];
  CHECK(rep.k_max == 7);
  REQUIRE(rep.verdicts.size() == 5);
  CHECK(rep.verdicts[0].pass);       // k=3
  CHECK(rep.verdicts[1].pass);       // k=4
  CHECK(rep.verdicts[2].pass);       // k=5
  CHECK_FALSE(rep.verdicts[3].pass); // k=6: g exceeds the multinomial
  CHECK_FALSE(rep.verdicts[4].pass); // k=7
  CHECK_FALSE(rep.all_pass);
  CHECK(rep.verdicts[0].margin_sign == -1);
  CHECK(rep.verdicts[3].margin_sign == 1);
}

TEST_CASE("exact-only scan matches the guarded scan") {
  ScanOptions guarded;
  ScanOptions exact;
  exact.exact_only = true;
  auto a = conjecture_scan(3, 8, guarded);
  auto b = conjecture_scan(3, 8, exact);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].all_pass == b.reports[i].all_pass);
    REQUIRE(a.reports[i].verdicts.size() == b.reports[i].verdicts.size());
    for (std::size_t j = 0; j < a.reports[i].verdicts.size(); ++j) {
      CHECK(a.reports[i].verdicts[j].pass == b.reports[i].verdicts[j].pass);
      CHECK(a.reports[i].verdicts[j].margin_sign == b.reports[i].verdicts[j].margin_sign);
    }
  }
  CHECK(a.sample_mismatches == 0);
}

TEST_CASE("scan reports are identical for any worker count") {
  ScanOptions w1;
  ScanOptions w4;
  w4.workers = 4;
  auto a = conjecture_scan(3, 12, w1);
  auto b = conjecture_scan(3, 12, w4);
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("interval search endpoints for small r") {
  auto t2r3 = interval_search(2, 3, 50);
  CHECK_FALSE(t2r3.empty);
  CHECK(t2r3.c == 5);

  auto t3r3 = interval_search(3, 3, 50);
  CHECK_FALSE(t3r3.empty);
  CHECK(t3r3.c == 4);

  auto t2r10 = interval_search(2, 10, 100);
  CHECK_FALSE(t2r10.empty);
  CHECK(t2r10.c == 25);

  auto capped = interval_search(2, 3, 4);
  CHECK_FALSE(capped.empty);
  CHECK(capped.c == 4);
  CHECK(capped.capped);
}

TEST_CASE("interval search at t = 1 matches the conjecture comparison") {
  for (int r = 3; r <= 10; ++r) {
    auto res = conjecture_scan(r, r);
    long long expect = 0;
    for (const auto& v : res.reports[0].verdicts) {
      if (!v.pass) break;
      expect = v.k;
    }
    auto iv = interval_search(1, r, conjecture_k_max(r));
    if (expect == 0) {
      CHECK(iv.empty);
    } else {
      CHECK_FALSE(iv.empty);
      CHECK(iv.c == expect);
    }
  }
}

TEST_CASE("f table emission format and round trip") {
  std::ostringstream out;
  emit_f_table(3, 3, 7, out);
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "k,f_exact,sign,digits");
  int rows = 0;
  for (long long k = 3; std::getline(in, line); ++k) {
    ++rows;
    std::istringstream fields(line);
    std::string kf, vf, sf, df;
    REQUIRE(std::getline(fields, kf, ','));
    REQUIRE(std::getline(fields, vf, ','));
    REQUIRE(std::getline(fields, sf, ','));
    REQUIRE(std::getline(fields, df, ','));
    CHECK(std::stoll(kf) == k);
    BigInt expect = f_value(k, 3);
    CHECK(BigInt(vf) == expect);
    CHECK(std::stoi(sf) == (expect < 0 ? -1 : (expect > 0 ? 1 : 0)));
    CHECK(std::stoul(df) == ramsey::decimal_digits(expect));
  }
  CHECK(rows == 5);

  CHECK_THROWS_AS(emit_f_table_file(3, 3, 5, "/nonexistent-dir/f.csv"), std::runtime_error);
}
