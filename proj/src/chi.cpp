#include "ramsey/chi.hpp"

#include <bit>
#include <stdexcept>

namespace ramsey {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Color of v's edges into `others`, or -1 if they disagree.
int mono_color_into(const CompleteColoring& c, int v, std::uint64_t others) {
  int col = -1;
  std::uint64_t m = others;
  while (m) {
    int u = std::countr_zero(m);
    m &= m - 1;
    int cu = c.color(v, u);
    if (col == -1)
      col = cu;
    else if (col != cu)
      return -1;
  }
  return col;
}

}  // namespace

bool certificate_is_valid(const CompleteColoring& c, const ChiCertificate& cert) {
  int n = c.n();
  if (static_cast<int>(cert.ordering.size()) != n || static_cast<int>(cert.phi.size()) != n)
    return false;
  std::uint64_t seen = 0;
  for (int v : cert.ordering) {
    if (v < 0 || v >= n || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (cert.phi[i] < 0 || cert.phi[i] >= c.r()) return false;
    for (int j = i + 1; j < n; ++j)
      if (c.color(cert.ordering[i], cert.ordering[j]) != cert.phi[i]) return false;
  }
  return true;
}

std::optional<ChiCertificate> recognize_chi(const CompleteColoring& c) {
  int n = c.n();
  std::uint64_t remaining = (n == 64) ? ~std::uint64_t{0} : (bit(n) - 1);
  ChiCertificate cert;
  cert.ordering.reserve(static_cast<std::size_t>(n));
  cert.phi.reserve(static_cast<std::size_t>(n));
  while (std::popcount(remaining) > 2) {
    int pick = -1, pick_color = -1;
    std::uint64_t m = remaining;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      int col = mono_color_into(c, v, remaining & ~bit(v));
      if (col >= 0) {
        pick = v;
        pick_color = col;
        break;  // lowest-indexed monochromatic vertex
      }
    }
    if (pick < 0) return std::nullopt;
    cert.ordering.push_back(pick);
    cert.phi.push_back(pick_color);
    remaining &= ~bit(pick);
  }
  int a = std::countr_zero(remaining);
  int b = std::countr_zero(remaining & ~bit(a));
  int last_color = c.color(a, b);
  cert.ordering.push_back(a);
  cert.phi.push_back(last_color);
  cert.ordering.push_back(b);
  cert.phi.push_back(last_color);  // unconstrained position
  return cert;
}

namespace {

bool oracle_rec(const CompleteColoring& c, std::uint64_t remaining) {
  if (std::popcount(remaining) <= 2) return true;
  std::uint64_t m = remaining;
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    if (mono_color_into(c, v, remaining & ~bit(v)) >= 0)
      if (oracle_rec(c, remaining & ~bit(v))) return true;
  }
  return false;
}

}  // namespace

bool recognize_chi_oracle(const CompleteColoring& c, int size_cap) {
  if (c.n() > size_cap)
    throw std::invalid_argument("chi oracle: host has " + std::to_string(c.n()) +
                                " vertices, above the size cap " + std::to_string(size_cap));
  std::uint64_t all = bit(c.n()) - 1;
  return oracle_rec(c, all);
}

long long chi3_formula(int r) {
  if (r < 2) throw std::invalid_argument("chi3: need r >= 2");
  return (r % 2 == 0) ? r + 1 : r + 2;
}

BigInt chi_recurrence_step(const BigInt& prev, int r) {
  if (prev < 2 || r < 2) throw std::invalid_argument("chi recurrence: need prev >= 2, r >= 2");
  return r * prev - r + 2;
}

BigInt g_bound(long long k, int r) {
  if (k < 3 || r < 2) throw std::invalid_argument("g_bound: need k >= 3, r >= 2");
  BigInt base = r;
  if (r % 2 == 1) {
    BigInt num = pow_ui(base, static_cast<unsigned long>(k - 1)) - 1;
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(r - 1));
    return q + 1;
  }
  BigInt num = pow_ui(base, static_cast<unsigned long>(k - 3)) - 1;
  BigInt q;
  mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(r - 1));
  return q + pow_ui(base, static_cast<unsigned long>(k - 2)) + 1;
}

nlohmann::json ChiSearchReport::to_json() const {
  nlohmann::json j{{"r", r},
                   {"k", k},
                   {"n_max", n_max},
                   {"surjective_only", surjective_only},
                   {"exact", exact},
                   {"value", value},
                   {"colorings_examined", colorings_examined},
                   {"budget_exhausted", budget_exhausted}};
  if (witness) j["witness"] = witness->to_json();
  return j;
}

}  // namespace ramsey
