#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include "ramsey/bounds.hpp"
#include "ramsey/chi.hpp"

using ramsey::base_case;
using ramsey::best_bound;
using ramsey::BigInt;
using ramsey::BoundKind;
using ramsey::BoundResult;
using ramsey::chi_based_bound;
using ramsey::explicit_bound;
using ramsey::factorial;
using ramsey::g_bound;
using ramsey::multinomial;
using ramsey::Pattern;
using ramsey::PatternList;
using ramsey::PolyFamily;
using ramsey::polynomial_bound;
using ramsey::recursive_bound;
using ramsey::replay_trace;
using ramsey::SeedTable;
using ramsey::symmetric_bound;

namespace {

BigInt naive_factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("factorial product tree matches the naive product") {
  for (unsigned n : {0u, 1u, 2u, 5u, 20u, 67u, 150u}) CHECK(factorial(n) == naive_factorial(n));
}

TEST_CASE("multinomial values") {
  CHECK(multinomial({1, 1}) == 2);
  CHECK(multinomial({2, 2, 2}) == 90);
  CHECK(multinomial({}) == 1);
  CHECK(multinomial({0, 0}) == 1);
  CHECK(multinomial({5}) == 1);
}

TEST_CASE("multinomial satisfies the one-step splitting identity") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 2000; ++iter) {
    int r = 2 + static_cast<int>(rng() % 4);
    std::vector<unsigned long> parts(static_cast<std::size_t>(r));
    for (auto& p : parts) p = 1 + rng() % 9;
    BigInt whole = multinomial(parts);
    BigInt sum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::vector<unsigned long> reduced = parts;
      --reduced[i];
      sum += multinomial(reduced);
    }
    CHECK(whole == sum);
  }
}

TEST_CASE("base case picks the smallest degenerate t") {
  auto a = base_case(PatternList({{2, 2}, {5, 1}}));
  REQUIRE(a.has_value());
  CHECK(a->value == 2);
  CHECK(a->kind == BoundKind::kExact);

  auto b = base_case(PatternList({{3, 3}, {2, 2}}));
  REQUIRE(b.has_value());
  CHECK(b->value == 2);

  CHECK_FALSE(base_case(PatternList({{4, 2}, {5, 1}})).has_value());
}

TEST_CASE("explicit bound values") {
  CHECK(explicit_bound(PatternList({{3, 2}, {3, 2}})).value == 4);
  CHECK(explicit_bound(PatternList({{3, 1}, {3, 1}, {3, 1}})).value == 90);
  // Degenerate patterns short-circuit to the base case, even for r = 1
  // where the multinomial form itself does not apply.
  BoundResult d = explicit_bound(PatternList({{4, 4}}));
  CHECK(d.value == 4);
  CHECK(d.kind == BoundKind::kExact);
  CHECK_THROWS_AS(explicit_bound(PatternList({{4, 2}})), std::invalid_argument);
}

TEST_CASE("explicit bound equals the classical multinomial form on all-ones patterns") {
  for (int r = 2; r <= 4; ++r) {
    std::vector<int> ks(static_cast<std::size_t>(r), 2);
    while (true) {
      std::vector<Pattern> pats;
      std::vector<unsigned long> parts;
      for (int k : ks) {
        pats.push_back({k, 1});
        parts.push_back(static_cast<unsigned long>(k - 1));
      }
      CHECK(explicit_bound(PatternList(pats)).value == multinomial(parts));
      int i = r - 1;
      while (i >= 0 && ks[static_cast<std::size_t>(i)] == 6) ks[static_cast<std::size_t>(i--)] = 2;
      if (i < 0) break;
      ++ks[static_cast<std::size_t>(i)];
    }
  }
}

TEST_CASE("symmetric bound values and agreement with replicated patterns") {
  CHECK(symmetric_bound(3, 2, 2).value == 4);
  CHECK(symmetric_bound(3, 1, 3).value == 90);
  CHECK(symmetric_bound(4, 2, 3).value == 180);
  for (int r = 2; r <= 4; ++r)
    for (int t = 1; t <= 3; ++t)
      for (int k = t; k <= 8; ++k) {
        std::vector<Pattern> pats(static_cast<std::size_t>(r), Pattern{k, t});
        CHECK(symmetric_bound(k, t, r).value == explicit_bound(PatternList(pats)).value);
      }
}

TEST_CASE("unseeded recursion on two dropped-edge targets") {
  SeedTable empty;
  BoundResult r = recursive_bound(PatternList({{3, 2}, {3, 2}}), empty);
  CHECK(r.value == 4);
  CHECK(replay_trace(r, empty));

  BoundResult seeded = recursive_bound(PatternList({{3, 2}, {3, 2}}), SeedTable::table1());
  CHECK(seeded.value == 3);
  CHECK(replay_trace(seeded, SeedTable::table1()));
}

TEST_CASE("seeded recursion reproduces the spliced sums") {
  const SeedTable& t1 = SeedTable::table1();
  CHECK(recursive_bound(PatternList({{5, 2}, {8, 2}}), t1).value == 104);
  CHECK(recursive_bound(PatternList({{5, 2}, {9, 2}}), t1).value == 138);
  CHECK(recursive_bound(PatternList({{6, 2}, {8, 2}}), t1).value == 239);
}

TEST_CASE("unseeded symmetric-t recursion is the Pascal sequence") {
  // Reference: u[t][k] = t on the boundary, u[a][b] = u[a-1][b] + u[a][b-1].
  SeedTable empty;
  for (int t = 1; t <= 3; ++t) {
    std::map<std::pair<int, int>, BigInt> u;
    for (int a = t; a <= 12; ++a)
      for (int b = t; b <= 12; ++b) {
        if (a == t || b == t)
          u[{a, b}] = t;
        else
          u[{a, b}] = u[{a - 1, b}] + u[{a, b - 1}];
      }
    for (int a = t; a <= 12; ++a)
      for (int b = a; b <= 12; ++b)
        CHECK(recursive_bound(PatternList({{a, t}, {b, t}}), empty).value == u[{a, b}]);
  }
}

TEST_CASE("recursion never exceeds the explicit bound without seeds") {
  SeedTable empty;
  for (int r = 2; r <= 3; ++r) {
    std::vector<int> idx(static_cast<std::size_t>(2 * r), 1);
    // Enumerate (k_i, t_i) with t_i <= k_i <= 8 via odometer over pairs.
    std::vector<Pattern> pats(static_cast<std::size_t>(r));
    std::function<void(int)> rec = [&](int i) {
      if (i == r) {
        PatternList p(pats);
        CHECK(recursive_bound(p, empty).value <= explicit_bound(p).value);
        return;
      }
      for (int k = 1; k <= 8; ++k)
        for (int t = 1; t <= std::min(k, 3); ++t) {
          pats[static_cast<std::size_t>(i)] = {k, t};
          rec(i + 1);
        }
    };
    rec(0);
  }
}

TEST_CASE("polynomial families evaluate integrally and respect thresholds") {
  auto d4 = polynomial_bound(PolyFamily::kDropped, 4, 10);
  REQUIRE(d4.has_value());
  CHECK(d4->value == 41);
  CHECK_FALSE(polynomial_bound(PolyFamily::kDropped, 4, 9).has_value());

  auto d5_anchor = polynomial_bound(PolyFamily::kDropped, 5, 8);
  REQUIRE(d5_anchor.has_value());
  CHECK(d5_anchor->value == 104);
  CHECK_FALSE(polynomial_bound(PolyFamily::kDropped, 5, 7).has_value());

  auto c3 = polynomial_bound(PolyFamily::kClique, 3, 3);
  REQUIRE(c3.has_value());
  CHECK(c3->value == 5);
  CHECK(c3->kind == BoundKind::kExact);

  auto a5 = polynomial_bound(PolyFamily::kDropped, 3, 5);
  REQUIRE(a5.has_value());
  CHECK(a5->value == 7);

  CHECK_FALSE(polynomial_bound(PolyFamily::kClique, 12, 9).has_value());
  CHECK_FALSE(polynomial_bound(PolyFamily::kDropped, 8, 9).has_value());
}

TEST_CASE("successive polynomial families differ by the previous family") {
  // P_s(k) - P_s(k-1) = P_{s-1}(k) on the derivation ranges; catches any
  // coefficient transcription slip.
  for (int s = 4; s <= 7; ++s) {
    long long lo = std::map<int, long long>{{4, 11}, {5, 10}, {6, 9}, {7, 8}}[s];
    for (long long k = lo; k <= 40; ++k) {
      auto cur = polynomial_bound(PolyFamily::kDropped, s, k);
      auto prev = polynomial_bound(PolyFamily::kDropped, s, k - 1);
      auto sub = polynomial_bound(PolyFamily::kDropped, s - 1, k);
      REQUIRE(cur.has_value());
      REQUIRE(prev.has_value());
      REQUIRE(sub.has_value());
      CHECK(cur->value - prev->value == sub->value);
    }
  }
  for (int s = 4; s <= 11; ++s)
    for (long long k = 9; k <= 40; ++k) {
      auto cur = polynomial_bound(PolyFamily::kClique, s, k);
      auto prev = polynomial_bound(PolyFamily::kClique, s, k - 1);
      auto sub = polynomial_bound(PolyFamily::kClique, s - 1, k);
      REQUIRE(cur.has_value());
      CHECK(cur->value - prev->value == sub->value);
    }
}

TEST_CASE("seeded recursion matches polynomial families at spot points") {
  const SeedTable& t1 = SeedTable::table1();
  for (long long k : {10, 11, 17, 25}) {
    CHECK(recursive_bound(PatternList({{4, 2}, {static_cast<int>(k), 2}}), t1).value ==
          polynomial_bound(PolyFamily::kDropped, 4, k)->value);
  }
  for (long long k : {8, 9, 15}) {
    CHECK(recursive_bound(PatternList({{11, 2}, {static_cast<int>(k), 1}}), t1).value ==
          polynomial_bound(PolyFamily::kClique, 11, k)->value);
  }
}

TEST_CASE("chi-based bound values") {
  BoundResult a = chi_based_bound(PatternList({{3, 1}, {3, 1}, {3, 1}}));
  CHECK(a.value == 41);  // k* = 5, g(5,3)

  BoundResult b = chi_based_bound(PatternList({{3, 2}, {3, 2}}));
  CHECK(b.value == 3);  // k* = 3, g(3,2)

  BoundResult c = chi_based_bound(PatternList({{4, 1}, {4, 1}}));
  CHECK(c.value == g_bound(6, 2));  // k* = 2(4-2)+2

  BoundResult d = chi_based_bound(PatternList({{1, 1}, {1, 1}}));
  CHECK(d.value == 2);  // k* < 3 falls back to two vertices
}

TEST_CASE("chi-based bound agrees with the symmetric corollary forms") {
  for (int r = 2; r <= 5; ++r)
    for (int k = 2; k <= 7; ++k) {
      std::vector<Pattern> ones(static_cast<std::size_t>(r), Pattern{k, 1});
      long long k_star1 = static_cast<long long>(r) * (k - 2) + 2;
      BigInt expect1 = k_star1 < 3 ? BigInt(2) : g_bound(k_star1, r);
      CHECK(chi_based_bound(PatternList(ones)).value == expect1);
      if (k >= 2) {
        std::vector<Pattern> twos(static_cast<std::size_t>(r), Pattern{k, 2});
        long long k_star2 = static_cast<long long>(r) * (k - 3) + 3;
        BigInt expect2 = k_star2 < 3 ? BigInt(2) : g_bound(k_star2, r);
        CHECK(chi_based_bound(PatternList(twos)).value == expect2);
      }
    }
}

TEST_CASE("best bound on table entries") {
  const SeedTable& t1 = SeedTable::table1();

  BoundResult a = best_bound(PatternList({{3, 2}, {6, 2}}), t1);
  CHECK(a.value == 9);
  CHECK(a.kind == BoundKind::kExact);
  REQUIRE(a.lower.has_value());
  CHECK(*a.lower == 9);
  CHECK(replay_trace(a, t1));

  BoundResult b = best_bound(PatternList({{4, 2}, {7, 2}}), t1);
  CHECK(b.value == 28);
  CHECK(b.kind == BoundKind::kExact);

  BoundResult c = best_bound(PatternList({{5, 2}, {6, 2}}), t1);
  CHECK(c.value == 39);
  CHECK(c.kind == BoundKind::kUpper);
  REQUIRE(c.lower.has_value());
  CHECK(*c.lower == 31);

  for (int k = 3; k <= 10; ++k)
    CHECK(best_bound(PatternList({{3, 2}, {k, 1}}), t1).value == 2 * k - 1);
}

TEST_CASE("bounds are invariant under pattern reordering") {
  const SeedTable& t1 = SeedTable::table1();
  std::mt19937_64 rng(5150);
  for (int iter = 0; iter < 60; ++iter) {
    int r = 2 + static_cast<int>(rng() % 2);
    std::vector<Pattern> pats;
    for (int i = 0; i < r; ++i) {
      int t = 1 + static_cast<int>(rng() % 2);
      int k = t + static_cast<int>(rng() % 5);
      pats.push_back({k, t});
    }
    PatternList p(pats);
    std::vector<Pattern> shuffled = pats;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    PatternList q(shuffled);
    CHECK(explicit_bound(p).value == explicit_bound(q).value);
    CHECK(recursive_bound(p, t1).value == recursive_bound(q, t1).value);
    CHECK(chi_based_bound(p).value == chi_based_bound(q).value);
    CHECK(best_bound(p, t1).value == best_bound(q, t1).value);
  }
}

TEST_CASE("trace replay validates every method") {
  const SeedTable& t1 = SeedTable::table1();
  SeedTable empty;
  for (const PatternList& p : {PatternList({{4, 2}, {10, 2}}), PatternList({{3, 1}, {3, 1}}),
                               PatternList({{5, 2}, {8, 2}}), PatternList({{2, 2}, {7, 1}})}) {
    CHECK(replay_trace(best_bound(p, t1), t1));
    CHECK(replay_trace(recursive_bound(p, t1), t1));
    CHECK(replay_trace(recursive_bound(p, empty), empty));
    CHECK(replay_trace(explicit_bound(p), t1));
    CHECK(replay_trace(chi_based_bound(p), t1));
  }
  // A tampered trace must fail replay.
  BoundResult r = best_bound(PatternList({{3, 2}, {6, 2}}), t1);
  r.trace.back().value += 1;
  r.value += 1;
  CHECK_FALSE(replay_trace(r, t1));
}

TEST_CASE("the recursion memo tolerates concurrent evaluation") {
  const SeedTable& t1 = SeedTable::table1();
  ramsey::RecursiveEngine engine(t1);
  std::vector<std::thread> pool;
  std::atomic<bool> ok{true};
  for (int w = 0; w < 4; ++w)
    pool.emplace_back([&engine, &ok, w] {
      for (int k = 8 + w % 2; k <= 28; ++k) {
        if (engine.value(PatternList({{4, 2}, {k, 2}})) !=
            recursive_bound(PatternList({{4, 2}, {k, 2}}), SeedTable::table1()).value)
          ok = false;
        if (engine.value(PatternList({{5, 2}, {k, 1}})) !=
            recursive_bound(PatternList({{k, 1}, {5, 2}}), SeedTable::table1()).value)
          ok = false;
      }
    });
  for (auto& t : pool) t.join();
  CHECK(ok);
}

TEST_CASE("bundled table contents and validation") {
  const SeedTable& t1 = SeedTable::table1();
  CHECK(t1.size() == 76);

  auto row = [&](int s, int t2, int tt) { return t1.find(PatternList({{s, 2}, {t2, tt}})); };
  CHECK(row(3, 3, 2)->upper == 3);
  CHECK(row(3, 11, 2)->upper == 19);
  CHECK(row(4, 8, 2)->lower == 29);
  CHECK(row(4, 8, 2)->upper == 38);
  CHECK(row(7, 7, 2)->upper == 251);
  CHECK(row(11, 3, 1)->lower == 42);
  CHECK(row(11, 3, 1)->upper == 45);
  CHECK(row(11, 8, 1)->upper == 8200);
  CHECK_FALSE(t1.find(PatternList({{11, 2}, {4, 2}})).has_value());  // blank cell
  CHECK_FALSE(t1.find(PatternList({{8, 2}, {5, 2}})).has_value());   // blank cell

  // Symmetric duplicates in the source collapse to one canonical entry.
  CHECK(t1.find(PatternList({{5, 2}, {6, 2}}))->upper == 39);
  CHECK(t1.find(PatternList({{6, 2}, {5, 2}}))->upper == 39);

  CHECK_THROWS_AS(SeedTable::from_json(nlohmann::json::parse(
                      R"([{"patterns": [[3,2],[3,2]], "lower": 5, "upper": 4}])")),
                  std::invalid_argument);
  CHECK_THROWS_AS(SeedTable::from_json(nlohmann::json::parse(
                      R"([{"patterns": [[3,2],[3,2]]}])")),
                  std::invalid_argument);
  CHECK_THROWS_AS(SeedTable::from_json(nlohmann::json::parse(
                      R"([{"patterns": [[3,2],[4,2]], "upper": 5},
                          {"patterns": [[4,2],[3,2]], "upper": 6}])")),
                  std::invalid_argument);
  CHECK_NOTHROW(SeedTable::from_json(nlohmann::json::parse(
      R"([{"patterns": [[3,2],[4,2]], "upper": 5},
          {"patterns": [[4,2],[3,2]], "upper": 5}])")));
}

TEST_CASE("bundled table matches the shipped data file") {
  SeedTable from_file = SeedTable::load_file(std::string(RAMSEY_DATA_DIR) + "/seeds_table1.json");
  CHECK(from_file.to_json() == SeedTable::table1().to_json());
  CHECK(nlohmann::json::parse(SeedTable::table1_text()).size() == 86);
}
