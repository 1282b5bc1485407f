// Slow reference implementations, written without the library's tables or
// search kernels.
#ifndef TORICODE_TESTS_ORACLE_HPP
#define TORICODE_TESTS_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "toricode/toric_code.hpp"

namespace oracle {

using Poly = std::vector<std::uint32_t>;  // low degree first

inline Poly decode(std::uint32_t v, std::uint32_t p, std::uint32_t m) {
  Poly c(m);
  for (auto& x : c) {
    x = v % p;
    v /= p;
  }
  return c;
}

inline std::uint32_t encode(const Poly& c, std::uint32_t p) {
  std::uint32_t v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * p + *it;
  return v;
}

// Schoolbook product reduced by a monic modulus.
inline Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  const auto m = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * m, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t d = prod.size(); d-- > m;) {
    const auto lead = prod[d];
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + (p - lead) * modulus[i]) % p;
  }
  Poly r(m);
  for (std::size_t i = 0; i < m; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

// Remainder of a by monic b over GF(p); zero remainder means b divides a.
inline bool divides(const Poly& b, Poly a, std::uint32_t p) {
  const auto db = b.size() - 1;
  for (std::size_t d = a.size(); d-- > db;) {
    const auto lead = a[d];
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) a[d - db + i] = (a[d - db + i] + (p - lead) * b[i]) % p;
  }
  for (std::size_t i = 0; i < db && i < a.size(); ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool irreducible(const Poly& f, std::uint32_t p) {
  const auto m = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= m; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t v = 0; v < count; ++v) {
      auto g = decode(v, p, d);
      g.push_back(1);
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

// Minimum weight over all q^k - 1 nonzero messages, each evaluated from
// scratch with the library's field arithmetic.
inline std::size_t brute_force_distance(const toricode::ToricCode& code) {
  const auto& f = code.field();
  const auto q = f.order();
  const auto k = code.rows();
  std::vector<std::uint32_t> digits(k, 0);
  std::size_t best = code.length() + 1;
  for (;;) {
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
    if (i == k) break;
    std::vector<toricode::FieldElement> msg;
    for (auto v : digits) msg.push_back(f.element(v));
    const auto w = toricode::weight(toricode::evaluate(code, msg));
    if (w > 0 && w < best) best = w;
  }
  return best;
}

}  // namespace oracle

#endif  // TORICODE_TESTS_ORACLE_HPP
