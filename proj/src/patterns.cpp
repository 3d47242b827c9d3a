#include "ramsey/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ramsey {

namespace {

void validate(const std::vector<Pattern>& pats) {
  if (pats.empty()) throw std::invalid_argument("pattern list must not be empty");
  for (std::size_t i = 0; i < pats.size(); ++i) {
    const Pattern& p = pats[i];
    if (p.t < 1)
      throw std::invalid_argument("patterns[" + std::to_string(i) + "]: t must be >= 1, got " +
                                  std::to_string(p.t));
    if (p.k < p.t)
      throw std::invalid_argument("patterns[" + std::to_string(i) + "]: k must be >= t, got (" +
                                  std::to_string(p.k) + "," + std::to_string(p.t) + ")");
  }
}

}  // namespace

PatternList::PatternList(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {
  validate(patterns_);
}

PatternList PatternList::parse(const std::string& text) {
  std::vector<Pattern> pats;
  std::size_t pos = 0;
  const auto fail = [&](const std::string& what) {
    throw std::invalid_argument("pattern string at char " + std::to_string(pos) + " (pair " +
                                std::to_string(pats.size()) + "): " + what);
  };
  const auto read_int = [&]() -> int {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    long v = 0;
    for (std::size_t i = start; i < pos; ++i) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000) fail("integer out of range");
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return static_cast<int>(v);
  };
  if (text.empty()) fail("empty pattern string");
  while (true) {
    int k = read_int();
    if (pos >= text.size() || text[pos] != ',') fail("expected ',' between k and t");
    ++pos;
    int t = read_int();
    if (k < t || t < 1)
      fail("invalid pair (" + std::to_string(k) + "," + std::to_string(t) + "): need k >= t >= 1");
    pats.push_back({k, t});
    if (pos == text.size()) break;
    if (text[pos] != ';') fail("expected ';' between pairs");
    ++pos;
  }
  return PatternList(std::move(pats));
}

PatternList PatternList::canonical() const {
  std::vector<Pattern> sorted = patterns_;
  std::sort(sorted.begin(), sorted.end());
  return PatternList(std::move(sorted));
}

bool PatternList::is_canonical() const {
  return std::is_sorted(patterns_.begin(), patterns_.end());
}

std::string PatternList::key() const {
  PatternList c = canonical();
  std::ostringstream out;
  for (std::size_t i = 0; i < c.patterns_.size(); ++i) {
    if (i) out << ';';
    out << c.patterns_[i].k << ',' << c.patterns_[i].t;
  }
  return out.str();
}

PatternList PatternList::with_decremented(int i) const {
  std::vector<Pattern> pats = patterns_;
  Pattern& p = pats.at(static_cast<std::size_t>(i));
  if (p.k - 1 < p.t)
    throw std::invalid_argument("cannot decrement pattern below its dropped-clique order");
  p.k -= 1;
  return PatternList(std::move(pats));
}

nlohmann::json PatternList::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Pattern& p : patterns_) arr.push_back({p.k, p.t});
  return arr;
}

PatternList PatternList::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("patterns: expected an array of [k,t] pairs");
  std::vector<Pattern> pats;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("patterns: each entry must be a [k,t] pair");
    pats.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return PatternList(std::move(pats));
}

}  // namespace ramsey
