#ifndef TORICODE_FIELD_HPP
#define TORICODE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricode {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest field order supported; log/antilog tables are sized q.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// An element of GF(q) in canonical form.
///
/// The canonical value encodes the polynomial residue c_0 + c_1 x + ... +
/// c_{m-1} x^{m-1} as the integer c_0 + c_1 p + ... + c_{m-1} p^{m-1}, so 0 is
/// zero, 1 is one, and for prime fields the value is the residue itself.
/// `order` records q of the owning field and is used to reject mixed-field
/// arithmetic.
struct FieldElement {
  std::uint32_t value = 0;
  std::uint32_t order = 0;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  bool is_zero() const { return value == 0; }
};

/// GF(p^m) built from the smallest monic irreducible polynomial of degree m,
/// where polynomials are ordered by their canonical integer encoding
/// (low-degree coefficient least significant).
///
/// Codes built over different models of the same GF(q) are monomially
/// equivalent, so code parameters never depend on the modulus choice.
///
/// Instances are immutable and cheap to copy; tables are shared.
class GaloisField {
 public:
  static GaloisField make(std::uint32_t p, std::uint32_t m);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;

  /// Monic modulus, coefficients low degree first (size m + 1). For m = 1
  /// this is x, i.e. {0, 1}.
  const std::vector<std::uint32_t>& modulus() const;

  FieldElement element(std::uint32_t canonical) const;
  FieldElement zero() const { return element(0); }
  FieldElement one() const { return element(1); }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// Smallest canonical value generating the multiplicative group.
  FieldElement primitive_element() const;
  /// g^e for the primitive element g.
  FieldElement exp(std::uint64_t e) const;
  /// Discrete log base g; throws on zero.
  std::uint32_t log(FieldElement a) const;

  // Unchecked canonical-value arithmetic for hot loops.
  std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub_raw(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;
  /// antilog[e] = g^e for 0 <= e < q - 1.
  std::span<const std::uint32_t> antilog_table() const;

  std::string describe() const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.order() == b.order();
  }

 private:
  struct Tables;
  explicit GaloisField(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  void check(FieldElement a) const;

  std::shared_ptr<const Tables> t_;
};

inline GaloisField make_field(std::uint32_t p, std::uint32_t m) {
  return GaloisField::make(p, m);
}

/// Parses "p", "p^m", or a prime power "q" (e.g. "5", "2^3", "8").
GaloisField parse_field(const std::string& descriptor);

/// Factors q = p^m; returns false when q is not a prime power.
bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& m);

bool is_prime(std::uint64_t n);

/// All points of (F_q^*)^n, lexicographic in their discrete-log exponent
/// vectors (j_1, ..., j_n), j_1 most significant.
std::vector<std::vector<FieldElement>> torus_points(const GaloisField& field, int n);

}  // namespace toricode

#endif  // TORICODE_FIELD_HPP
