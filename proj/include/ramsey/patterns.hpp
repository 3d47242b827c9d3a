#pragma once

#include <compare>
#include <string>
#include <vector>

#include <json.hpp>

namespace ramsey {

// One Ramsey target: a complete graph on k vertices with the edges inside a
// t-clique removed. t = 1 is the plain k-clique, t = k the empty graph on k
// vertices.
struct Pattern {
  int k = 0;
  int t = 0;
  auto operator<=>(const Pattern&) const = default;
};

// Ordered list of (k_i, t_i) targets, one per color. Construction rejects
// k < t, t < 1 and empty lists. The canonical (sorted) form is the key used
// by the bound engine and the seed table, since R is invariant under
// reordering of the list.
class PatternList {
 public:
  explicit PatternList(std::vector<Pattern> patterns);

  // Parses "k1,t1;k2,t2;...". Errors carry the character position and the
  // index of the offending pair.
  static PatternList parse(const std::string& text);

  int r() const { return static_cast<int>(patterns_.size()); }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  const Pattern& operator[](int i) const { return patterns_[static_cast<std::size_t>(i)]; }

  PatternList canonical() const;
  bool is_canonical() const;

  // Canonical key, e.g. "3,2;6,2".
  std::string key() const;

  // Replaces pattern i by (k_i - 1, t_i). Requires k_i - 1 >= t_i.
  PatternList with_decremented(int i) const;

  nlohmann::json to_json() const;
  static PatternList from_json(const nlohmann::json& j);

  bool operator==(const PatternList& o) const { return patterns_ == o.patterns_; }

 private:
  std::vector<Pattern> patterns_;
};

}  // namespace ramsey
