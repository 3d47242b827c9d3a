#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "ramsey/patterns.hpp"

namespace ramsey {

// An r-edge coloring of the complete graph K_n: one color in {0,...,r-1} per
// unordered vertex pair. Immutable after construction; all queries are const
// and safe to run concurrently.
//
// Storage is a flat triangular array indexed by pair rank, plus one adjacency
// bitset per (color, vertex) so the pattern detector and the chi search can
// filter candidates with word operations. Vertex count is capped at 64 (one
// machine word per bitset); every search in this project operates far below
// that.
class CompleteColoring {
 public:
  static constexpr int kMaxVertices = 64;

  CompleteColoring(int n, int r, std::vector<std::uint8_t> edge_colors);

  static CompleteColoring monochromatic(int n, int r, int color);

  int n() const { return n_; }
  int r() const { return r_; }

  static std::size_t pair_rank(int i, int j);  // requires i < j
  int color(int i, int j) const;               // unordered; i != j

  // Bitmask of vertices joined to v by an edge of the given color.
  std::uint64_t adjacency(int color, int v) const {
    return adj_[static_cast<std::size_t>(color) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(v)];
  }

  // Coloring induced on the vertex subset S (strictly increasing), with
  // vertices relabeled to 0..|S|-1 in order. The color count r is preserved.
  CompleteColoring induced(std::span<const int> s) const;

  // True when every color in 0..r-1 appears on some edge. Colorings are not
  // required to be surjective; callers that want the stricter notion check
  // this flag.
  bool is_surjective() const;

  const std::vector<std::uint8_t>& edge_colors() const { return colors_; }

  // {n, r, edges: [[i, j, color], ...]} with i < j, sorted lexicographically.
  nlohmann::json to_json() const;
  static CompleteColoring from_json(const nlohmann::json& j);

  bool operator==(const CompleteColoring& o) const {
    return n_ == o.n_ && r_ == o.r_ && colors_ == o.colors_;
  }

 private:
  int n_;
  int r_;
  std::vector<std::uint8_t> colors_;  // triangular, pair_rank order
  std::vector<std::uint64_t> adj_;    // [color * n + vertex]
};

// A monochromatic copy of the dropped-clique graph inside a host coloring:
// vertex set S of size k whose pairs all carry `color` except possibly those
// inside the sub-clique T of size t.
struct DroppedCliqueWitness {
  std::vector<int> s_set;
  std::vector<int> t_set;
  int color = 0;
};

// Checks the witness against the coloring by direct edge scan.
bool witness_is_valid(const CompleteColoring& c, int k, int t,
                      const DroppedCliqueWitness& w);

// Searches for a monochromatic K_[k,t] in the given color. Returns a witness
// if one exists, std::nullopt otherwise (in particular when k > n). Exact for
// every n the type supports; requires 1 <= t <= k and a valid color.
std::optional<DroppedCliqueWitness> find_mono_dropped_clique(
    const CompleteColoring& c, int k, int t, int color);

// The 2-coloring of K_{2(k-2)} whose color-0 (red) edges form a perfect
// matching {0,1},{2,3},... and all other edges are color 1 (blue). It has no
// red K_[3,2] (no vertex sees two red edges) and no blue K_[k,2] (any k
// vertices meet the matching in at least two edges), so it certifies
// R([3,2],[k,2]) > 2k-4. Requires k >= 4.
CompleteColoring matching_witness(int k);

// True iff no color i contains a monochromatic K_[k_i,t_i]; this certifies
// R(P) > c.n(). Throws if the color counts disagree.
bool verify_lower_bound(const CompleteColoring& c, const PatternList& p);

}  // namespace ramsey
