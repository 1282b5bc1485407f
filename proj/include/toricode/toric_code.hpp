#ifndef TORICODE_TORIC_CODE_HPP
#define TORICODE_TORIC_CODE_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "toricode/field.hpp"
#include "toricode/polytope.hpp"

namespace toricode {

class CodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation code of a lattice polytope on the torus (F_q^*)^n.
///
/// Row i evaluates the monomial x^{m_i} (m_i the i-th lattice point, in
/// lexicographic order); column j is the torus point (g^{j_1}, ..., g^{j_n})
/// whose exponent vector is the j-th in lexicographic order. The entry is
/// therefore g^{<m_i, j> mod (q-1)}, computed with integer dot products.
class ToricCode {
 public:
  struct Options {
    /// Build even when P is not inside [0, q-2]^n. The dimension is then the
    /// generator rank rather than the monomial count.
    bool allow_outside_cube = false;
  };

  static ToricCode build(const LatticePolytope& polytope, const GaloisField& field, Options options);
  static ToricCode build(const LatticePolytope& polytope, const GaloisField& field) {
    return build(polytope, field, Options{});
  }

  const GaloisField& field() const { return field_; }
  const LatticePolytope& polytope() const { return polytope_; }
  const std::vector<LatticePoint>& monomials() const { return monomials_; }

  int torus_dim() const { return polytope_.ambient_dim(); }
  /// Block length N = (q-1)^n.
  std::size_t length() const { return length_; }
  /// Number of generator rows (lattice points of P).
  std::size_t rows() const { return monomials_.size(); }
  /// Code dimension k.
  std::size_t dimension() const { return dimension_; }

  /// Canonical field values, row-major, rows() x length().
  std::span<const std::uint16_t> generator() const { return generator_; }
  std::span<const std::uint16_t> row(std::size_t i) const {
    return std::span<const std::uint16_t>(generator_).subspan(i * length_, length_);
  }

  /// Discrete-log exponent vector of torus column j.
  std::vector<std::uint32_t> column_exponents(std::size_t j) const;

 private:
  ToricCode(GaloisField f, LatticePolytope p) : field_(std::move(f)), polytope_(std::move(p)) {}

  GaloisField field_;
  LatticePolytope polytope_;
  std::vector<LatticePoint> monomials_;
  std::size_t length_ = 0;
  std::size_t dimension_ = 0;
  std::vector<std::uint16_t> generator_;
};

inline ToricCode build_code(const LatticePolytope& p, const GaloisField& field) {
  return ToricCode::build(p, field);
}

struct Codeword {
  std::vector<FieldElement> coefficients;
  std::vector<FieldElement> values;
};

/// Codeword of the polynomial sum_i coefficients[i] x^{m_i}.
Codeword evaluate(const ToricCode& code, std::span<const FieldElement> coefficients);

std::size_t weight(const Codeword& c);
std::size_t zero_count(const Codeword& c);

/// Rank of the generator over GF(q), by Gaussian elimination.
std::size_t rank_check(const ToricCode& code);

/// Rank of an arbitrary row-major matrix of canonical values.
std::size_t matrix_rank(const GaloisField& field, std::vector<std::uint32_t> m, std::size_t rows,
                        std::size_t cols);

/// Header line "q n k N", then one row per line of space-separated canonical
/// values.
void write_generator(std::ostream& os, const ToricCode& code);

}  // namespace toricode

#endif  // TORICODE_TORIC_CODE_HPP
