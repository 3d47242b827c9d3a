#include "ramsey/coloring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ramsey {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

int lowest_bit(std::uint64_t m) { return std::countr_zero(m); }

}  // namespace

CompleteColoring::CompleteColoring(int n, int r, std::vector<std::uint8_t> edge_colors)
    : n_(n), r_(r), colors_(std::move(edge_colors)) {
  if (n < 2) throw std::invalid_argument("coloring: need at least 2 vertices");
  if (n > kMaxVertices) throw std::invalid_argument("coloring: vertex count above supported limit (64)");
  if (r < 1 || r > 255) throw std::invalid_argument("coloring: color count must be in 1..255");
  std::size_t edges = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (colors_.size() != edges)
    throw std::invalid_argument("coloring: expected " + std::to_string(edges) + " edge colors, got " +
                                std::to_string(colors_.size()));
  for (std::uint8_t c : colors_)
    if (c >= r) throw std::invalid_argument("coloring: edge color out of range");

  adj_.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(n), 0);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int c = colors_[pair_rank(i, j)];
      adj_[static_cast<std::size_t>(c) * n + i] |= bit(j);
      adj_[static_cast<std::size_t>(c) * n + j] |= bit(i);
    }
}

CompleteColoring CompleteColoring::monochromatic(int n, int r, int color) {
  if (color < 0 || color >= r) throw std::invalid_argument("monochromatic: color out of range");
  std::size_t edges = static_cast<std::size_t>(n) * (n - 1) / 2;
  return CompleteColoring(n, r, std::vector<std::uint8_t>(edges, static_cast<std::uint8_t>(color)));
}

std::size_t CompleteColoring::pair_rank(int i, int j) {
  return static_cast<std::size_t>(j) * (j - 1) / 2 + static_cast<std::size_t>(i);
}

int CompleteColoring::color(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::out_of_range("coloring: bad vertex pair");
  if (i > j) std::swap(i, j);
  return colors_[pair_rank(i, j)];
}

CompleteColoring CompleteColoring::induced(std::span<const int> s) const {
  if (s.size() < 2) throw std::invalid_argument("induced: need at least 2 vertices");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n_) throw std::invalid_argument("induced: vertex out of range");
    if (i > 0 && s[i - 1] >= s[i]) throw std::invalid_argument("induced: vertices must be strictly increasing");
  }
  int m = static_cast<int>(s.size());
  std::vector<std::uint8_t> cols(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (int j = 1; j < m; ++j)
    for (int i = 0; i < j; ++i)
      cols[pair_rank(i, j)] = static_cast<std::uint8_t>(color(s[i], s[j]));
  return CompleteColoring(m, r_, std::move(cols));
}

bool CompleteColoring::is_surjective() const {
  std::vector<bool> seen(static_cast<std::size_t>(r_), false);
  int left = r_;
  for (std::uint8_t c : colors_)
    if (!seen[c]) {
      seen[c] = true;
      if (--left == 0) return true;
    }
  return left == 0;
}

nlohmann::json CompleteColoring::to_json() const {
  nlohmann::json edges = nlohmann::json::array();
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) edges.push_back({i, j, color(i, j)});
  return nlohmann::json{{"n", n_}, {"r", r_}, {"edges", edges}};
}

CompleteColoring CompleteColoring::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("edges"))
    throw std::invalid_argument("coloring json: expected {n, r, edges}");
  int n = j.at("n").get<int>();
  int r = j.at("r").get<int>();
  if (n < 2 || n > kMaxVertices) throw std::invalid_argument("coloring json: bad vertex count");
  std::size_t edges = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<std::uint8_t> cols(edges);
  std::vector<bool> seen(edges, false);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("coloring json: edge must be [i,j,color]");
    int a = e[0].get<int>(), b = e[1].get<int>(), c = e[2].get<int>();
    if (a < 0 || b <= a || b >= n) throw std::invalid_argument("coloring json: edge endpoints must satisfy 0 <= i < j < n");
    if (c < 0 || c >= r) throw std::invalid_argument("coloring json: edge color out of range");
    std::size_t idx = pair_rank(a, b);
    if (seen[idx]) throw std::invalid_argument("coloring json: duplicate edge");
    seen[idx] = true;
    cols[idx] = static_cast<std::uint8_t>(c);
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("coloring json: missing edge");
  return CompleteColoring(n, r, std::move(cols));
}

bool witness_is_valid(const CompleteColoring& c, int k, int t, const DroppedCliqueWitness& w) {
  if (static_cast<int>(w.s_set.size()) != k || static_cast<int>(w.t_set.size()) != t) return false;
  std::uint64_t smask = 0, tmask = 0;
  for (int v : w.s_set) {
    if (v < 0 || v >= c.n() || (smask & bit(v))) return false;
    smask |= bit(v);
  }
  for (int v : w.t_set) {
    if (!(smask & bit(v)) || (tmask & bit(v))) return false;
    tmask |= bit(v);
  }
  for (std::size_t a = 0; a < w.s_set.size(); ++a)
    for (std::size_t b = a + 1; b < w.s_set.size(); ++b) {
      int u = w.s_set[a], v = w.s_set[b];
      bool dropped = (tmask & bit(u)) && (tmask & bit(v));
      if (!dropped && c.color(u, v) != w.color) return false;
    }
  return true;
}

namespace {

// Detector state: grow a color-c clique A of size k-t in increasing vertex
// order; `common` is the set of vertices c-adjacent to all of A (it never
// contains A itself), `cand` the subset of `common` above the last chosen
// vertex. Once |A| = k-t, any t vertices of `common` complete the witness:
// their edges to A all have color c and their internal edges are the dropped
// clique.
struct DetectorState {
  const CompleteColoring& c;
  int color;
  int a_need;
  int t;

  std::optional<DroppedCliqueWitness> run() {
    std::uint64_t all = (c.n() == 64) ? ~std::uint64_t{0} : (bit(c.n()) - 1);
    std::vector<int> a_set;
    a_set.reserve(static_cast<std::size_t>(a_need));
    return grow(a_set, all, all);
  }

  std::optional<DroppedCliqueWitness> grow(std::vector<int>& a_set, std::uint64_t common,
                                           std::uint64_t cand) {
    int have = static_cast<int>(a_set.size());
    if (have == a_need) {
      if (std::popcount(common) < t) return std::nullopt;
      DroppedCliqueWitness w;
      w.color = color;
      std::uint64_t rest = common;
      for (int picked = 0; picked < t; ++picked) {
        w.t_set.push_back(lowest_bit(rest));
        rest &= rest - 1;
      }
      w.s_set = a_set;
      w.s_set.insert(w.s_set.end(), w.t_set.begin(), w.t_set.end());
      std::sort(w.s_set.begin(), w.s_set.end());
      return w;
    }
    // Both the remaining clique vertices and the final T come out of `common`.
    if (std::popcount(common) < (a_need - have) + t) return std::nullopt;
    std::uint64_t iter = cand;
    while (iter) {
      if (std::popcount(iter) < a_need - have) return std::nullopt;
      int v = lowest_bit(iter);
      iter &= iter - 1;
      std::uint64_t nb = c.adjacency(color, v);
      a_set.push_back(v);
      auto found = grow(a_set, common & nb, iter & nb);
      a_set.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<DroppedCliqueWitness> find_mono_dropped_clique(const CompleteColoring& c, int k,
                                                             int t, int color) {
  if (t < 1 || t > k) throw std::invalid_argument("detector: need 1 <= t <= k");
  if (color < 0 || color >= c.r()) throw std::invalid_argument("detector: color out of range");
  if (k > c.n()) return std::nullopt;  // pattern larger than host
  DetectorState st{c, color, k - t, t};
  return st.run();
}

CompleteColoring matching_witness(int k) {
  if (k < 4) throw std::invalid_argument("matching_witness: need k >= 4");
  int n = 2 * (k - 2);
  std::size_t edges = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<std::uint8_t> cols(edges, 1);
  for (int i = 0; i + 1 < n; i += 2) cols[CompleteColoring::pair_rank(i, i + 1)] = 0;
  return CompleteColoring(n, 2, std::move(cols));
}

bool verify_lower_bound(const CompleteColoring& c, const PatternList& p) {
  if (c.r() != p.r())
    throw std::invalid_argument("verify_lower_bound: coloring has " + std::to_string(c.r()) +
                                " colors but the pattern list has " + std::to_string(p.r()));
  for (int i = 0; i < p.r(); ++i)
    if (find_mono_dropped_clique(c, p[i].k, p[i].t, i)) return false;
  return true;
}

}  // namespace ramsey
