#include "toricode/field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace toricode {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients over GF(p), low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly decode(std::uint32_t value, std::uint32_t p, std::uint32_t len) {
  Poly out(len);
  for (auto& c : out) {
    c = value % p;
    value /= p;
  }
  return out;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t v = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * p + *it;
  return v;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // p prime: a^(p-2)
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b (b nonzero, trimmed).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t f = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - f) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), modulus, p);
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t deg = 1; 2 * deg <= m; ++deg) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = decode(static_cast<std::uint32_t>(low), p, deg);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

struct GaloisField::Tables {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  Poly modulus;
  std::uint32_t generator = 0;
  std::vector<std::uint32_t> antilog;  // size q - 1
  std::vector<std::uint32_t> log;      // size q, log[0] unused
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& m) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d <= q; ++d) {
    if (q % d != 0) continue;
    std::uint32_t e = 0;
    while (q % d == 0) {
      q /= d;
      ++e;
    }
    if (q != 1) return false;
    p = static_cast<std::uint32_t>(d);
    m = e;
    return true;
  }
  return false;
}

GaloisField GaloisField::make(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw FieldError("field characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw FieldError("field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw FieldError("field order " + std::to_string(p) + "^" + std::to_string(m) +
                       " exceeds the supported maximum " + std::to_string(kMaxFieldOrder));
    }
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<std::uint32_t>(q);

  if (m == 1) {
    t->modulus = {0, 1};
  } else {
    for (std::uint32_t low = 0; low < t->q; ++low) {
      Poly f = decode(low, p, m);
      f.push_back(1);
      if (f[0] != 0 && irreducible(f, p)) {
        t->modulus = std::move(f);
        break;
      }
    }
  }

  // Arithmetic in the quotient ring, used only during construction.
  auto mulmod = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (m == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    Poly r = poly_mulmod(decode(a, p, m), decode(b, p, m), t->modulus, p);
    return encode(r, p);
  };
  auto powmod = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };

  const std::uint64_t group = q - 1;
  const auto factors = prime_factors(group);
  for (std::uint32_t g = 1; g < t->q; ++g) {
    const bool generates = std::all_of(factors.begin(), factors.end(),
                                       [&](std::uint64_t r) { return powmod(g, group / r) != 1; });
    if (generates) {
      t->generator = g;
      break;
    }
  }

  t->antilog.resize(group);
  t->log.assign(t->q, 0);
  std::uint32_t x = 1;
  for (std::uint64_t e = 0; e < group; ++e) {
    t->antilog[e] = x;
    t->log[x] = static_cast<std::uint32_t>(e);
    x = mulmod(x, t->generator);
  }
  return GaloisField(std::move(t));
}

std::uint32_t GaloisField::characteristic() const { return t_->p; }
std::uint32_t GaloisField::degree() const { return t_->m; }
std::uint32_t GaloisField::order() const { return t_->q; }
const std::vector<std::uint32_t>& GaloisField::modulus() const { return t_->modulus; }

std::span<const std::uint32_t> GaloisField::antilog_table() const { return t_->antilog; }

void GaloisField::check(FieldElement a) const {
  if (a.order != t_->q) {
    throw FieldError("field element of GF(" + std::to_string(a.order) + ") used with GF(" +
                     std::to_string(t_->q) + ")");
  }
}

FieldElement GaloisField::element(std::uint32_t canonical) const {
  if (canonical >= t_->q) {
    throw FieldError("canonical value " + std::to_string(canonical) + " out of range for GF(" +
                     std::to_string(t_->q) + ")");
  }
  return {canonical, t_->q};
}

std::uint32_t GaloisField::add_raw(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = t_->p;
  if (p == 2) return a ^ b;
  if (t_->m == 1) {
    const std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t out = 0, place = 1;
  while (a || b) {
    std::uint32_t d = a % p + b % p;
    if (d >= p) d -= p;
    out += d * place;
    place *= p;
    a /= p;
    b /= p;
  }
  return out;
}

std::uint32_t GaloisField::sub_raw(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = t_->p;
  if (p == 2) return a ^ b;
  if (t_->m == 1) return a >= b ? a - b : a + p - b;
  std::uint32_t out = 0, place = 1;
  while (a || b) {
    const std::uint32_t x = a % p, y = b % p;
    out += (x >= y ? x - y : x + p - y) * place;
    place *= p;
    a /= p;
    b /= p;
  }
  return out;
}

std::uint32_t GaloisField::mul_raw(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  std::uint32_t e = t_->log[a] + t_->log[b];
  const std::uint32_t group = t_->q - 1;
  if (e >= group) e -= group;
  return t_->antilog[e];
}

FieldElement GaloisField::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {add_raw(a.value, b.value), t_->q};
}

FieldElement GaloisField::sub(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {sub_raw(a.value, b.value), t_->q};
}

FieldElement GaloisField::neg(FieldElement a) const {
  check(a);
  return {sub_raw(0, a.value), t_->q};
}

FieldElement GaloisField::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {mul_raw(a.value, b.value), t_->q};
}

FieldElement GaloisField::inv(FieldElement a) const {
  check(a);
  if (a.is_zero()) throw FieldError("inverse of zero");
  const std::uint32_t group = t_->q - 1;
  const std::uint32_t e = t_->log[a.value];
  return {t_->antilog[e == 0 ? 0 : group - e], t_->q};
}

FieldElement GaloisField::pow(FieldElement a, std::uint64_t e) const {
  check(a);
  if (e == 0) return one();
  if (a.is_zero()) return zero();
  const std::uint64_t group = t_->q - 1;
  return {t_->antilog[(std::uint64_t{t_->log[a.value]} * (e % group)) % group], t_->q};
}

FieldElement GaloisField::primitive_element() const { return {t_->generator, t_->q}; }

FieldElement GaloisField::exp(std::uint64_t e) const {
  return {t_->antilog[e % (t_->q - 1)], t_->q};
}

std::uint32_t GaloisField::log(FieldElement a) const {
  check(a);
  if (a.is_zero()) throw FieldError("discrete log of zero");
  return t_->log[a.value];
}

std::string GaloisField::describe() const {
  std::ostringstream os;
  os << "GF(" << t_->q << ") p=" << t_->p << " m=" << t_->m << " modulus=[";
  for (std::size_t i = 0; i < t_->modulus.size(); ++i) os << (i ? "," : "") << t_->modulus[i];
  os << "] primitive=" << t_->generator;
  return os.str();
}

GaloisField parse_field(const std::string& descriptor) {
  auto parse_uint = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw FieldError("malformed field descriptor '" + descriptor + "' (expected p, p^m, or q)");
    }
    return v;
  };
  const auto caret = descriptor.find('^');
  if (caret != std::string::npos) {
    const std::string_view view(descriptor);
    const auto p = parse_uint(view.substr(0, caret));
    const auto m = parse_uint(view.substr(caret + 1));
    if (p > kMaxFieldOrder || m > 64) throw FieldError("field " + descriptor + " too large");
    return GaloisField::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
  }
  const auto q = parse_uint(descriptor);
  if (q > kMaxFieldOrder) throw FieldError("field order " + descriptor + " exceeds the supported maximum");
  std::uint32_t p = 0, m = 0;
  if (!prime_power(q, p, m)) throw FieldError(descriptor + " is not a prime power");
  return GaloisField::make(p, m);
}

std::vector<std::vector<FieldElement>> torus_points(const GaloisField& field, int n) {
  if (n <= 0) throw FieldError("torus dimension must be positive");
  const std::uint64_t side = field.order() - 1;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= side;
    if (total > (std::uint64_t{1} << 32)) throw FieldError("torus too large to enumerate");
  }
  std::vector<std::vector<FieldElement>> out;
  out.reserve(total);
  std::vector<std::uint64_t> j(n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<FieldElement> pt(n);
    for (int i = 0; i < n; ++i) pt[i] = field.exp(j[i]);
    out.push_back(std::move(pt));
    for (int i = n - 1; i >= 0; --i) {
      if (++j[i] < side) break;
      j[i] = 0;
    }
  }
  return out;
}

}  // namespace toricode
