#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey/bigint.hpp"
#include "ramsey/patterns.hpp"

namespace ramsey {

enum class BoundKind { kLower, kUpper, kExact };

std::string to_string(BoundKind k);

// One derivation step. `key` is the canonical pattern key the step evaluates,
// `deps` the keys of sub-results it consumes, `params` machine-readable extras
// (used by trace replay), `citation` a human-oriented description.
struct TraceStep {
  std::string method;
  std::string citation;
  std::string key;
  std::string params;
  std::vector<std::string> deps;
  BigInt value;
};

struct BoundResult {
  BigInt value;
  BoundKind kind = BoundKind::kUpper;
  std::optional<BigInt> lower;  // best known lower bound, when one is attached
  std::vector<TraceStep> trace;

  nlohmann::json to_json() const;
};

struct SeedEntry {
  std::optional<long long> lower;
  std::optional<long long> upper;
  std::string source;
};

// Known values and bounds for small targets, keyed by canonical pattern list.
// Loading validates each entry (k >= t >= 1, lower <= upper, at least one
// bound) and requires entries that collide after canonicalization to agree,
// which closes the table under pattern reordering.
class SeedTable {
 public:
  SeedTable() = default;

  static SeedTable from_json(const nlohmann::json& j);
  static SeedTable load_file(const std::string& path);

  // The bundled table of published values/bounds for R([s,2],[t,2]) and
  // R([s,2],[t,1]), s = 3..11, t <= 8.
  static const SeedTable& table1();
  static const char* table1_text();

  std::optional<SeedEntry> find(const PatternList& p) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, SeedEntry>& entries() const { return entries_; }

  nlohmann::json to_json() const;

 private:
  std::map<std::string, SeedEntry> entries_;
};

// Degenerate targets: when some k_i = t_i, the empty pattern can always be
// realized and R equals the smallest such t_i. Absent when no k_i = t_i.
std::optional<BoundResult> base_case(const PatternList& p);

// max_i t_i * multinomial(k_1-t_1, ..., k_r-t_r); collapses to the base case
// when one applies (the base value is exact and never larger).
BoundResult explicit_bound(const PatternList& p);

// Same bound for r copies of [k,t]: t * multinomial(k-t repeated r). For
// t = 1 this is the classical (rk-r)!/((k-1)!)^r.
BoundResult symmetric_bound(int k, int t, int r);

// Memoized dynamic program over canonical pattern keys:
//   value(P) = min( seed upper, base case,
//                   sum_i value(P with k_i-1) - (r-2) when all k_i > t_i ).
// The memo tolerates concurrent lookups; inserts are idempotent because
// values are deterministic per key.
class RecursiveEngine {
 public:
  explicit RecursiveEngine(const SeedTable& seeds) : seeds_(&seeds) {}

  BigInt value(const PatternList& p) const;
  BoundResult bound(const PatternList& p) const;

 private:
  struct Node {
    BigInt value;
    std::string method;  // "seed" | "base-case" | "recursion"
    std::vector<std::string> deps;
  };
  const Node& eval(const PatternList& canonical) const;

  const SeedTable* seeds_;
  mutable std::map<std::string, Node> memo_;
  mutable std::shared_mutex mutex_;
};

BoundResult recursive_bound(const PatternList& p, const SeedTable& seeds);

// Closed-form two-color families R([s,2],[k,2]) (dropped) and R([s,2],[k,1])
// (clique), with exact rational coefficients. Absent outside the validity
// range. Every evaluation asserts integrality of the result.
enum class PolyFamily { kDropped, kClique };

std::optional<BoundResult> polynomial_bound(PolyFamily family, int s, long long k);

// R(P) <= g(k*, r) with k* = sum_i (k_i - t_i - 1) + 1 + max_i t_i. Values of
// k* below 3 fall back to chi_r(2) = 2.
BoundResult chi_based_bound(const PatternList& p);

// Minimum over base case, seed upper, recursive bound, applicable polynomial
// families, the multinomial bound and the chi-based bound. Attaches any seed
// lower bound and marks the result exact when lower meets upper.
BoundResult best_bound(const PatternList& p, const SeedTable& seeds);

// Recomputes every trace step bottom-up from its recorded inputs and checks
// that it reproduces the recorded values, ending at the result's value.
bool replay_trace(const BoundResult& result, const SeedTable& seeds);

}  // namespace ramsey
