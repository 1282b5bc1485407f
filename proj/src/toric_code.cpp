#include "toricode/toric_code.hpp"

#include <algorithm>
#include <ostream>

namespace toricode {

namespace {

constexpr std::uint64_t kMaxGeneratorEntries = std::uint64_t{1} << 30;

}  // namespace

ToricCode ToricCode::build(const LatticePolytope& polytope, const GaloisField& field, Options options) {
  const std::uint64_t q = field.order();
  const int n = polytope.ambient_dim();
  if (n < 1) throw CodeError("toric code needs a polytope of ambient dimension >= 1");
  if (!options.allow_outside_cube) {
    for (const auto& v : polytope.vertices()) {
      for (int i = 0; i < n; ++i) {
        if (v[i] < 0 || static_cast<std::uint64_t>(v[i]) > q - 2) {
          std::string vs;
          for (int t = 0; t < n; ++t) vs += (t ? "," : "") + std::to_string(v[t]);
          throw CodeError("polytope is not contained in [0," + std::to_string(q - 2) + "]^" +
                          std::to_string(n) + ": coordinate " + std::to_string(i + 1) + " of vertex (" +
                          vs + ") is " + std::to_string(v[i]));
        }
      }
    }
  }

  ToricCode code(field, polytope);
  code.monomials_ = polytope.lattice_points();
  const std::uint64_t side = q - 1;
  std::uint64_t length = 1;
  for (int i = 0; i < n; ++i) {
    length *= side;
    if (length * code.monomials_.size() > kMaxGeneratorEntries) {
      throw CodeError("generator matrix too large to materialize");
    }
  }
  code.length_ = static_cast<std::size_t>(length);

  const auto antilog = field.antilog_table();
  const auto k = code.monomials_.size();
  code.generator_.resize(k * code.length_);
  // Exponents reduced once per row; the column walk then only adds.
  std::vector<std::uint64_t> m(n);
  std::vector<std::uint64_t> j(n);
  for (std::size_t r = 0; r < k; ++r) {
    for (int i = 0; i < n; ++i) {
      const auto c = code.monomials_[r][i] % static_cast<std::int64_t>(side);
      m[i] = static_cast<std::uint64_t>(c < 0 ? c + static_cast<std::int64_t>(side) : c);
    }
    std::fill(j.begin(), j.end(), 0);
    std::uint64_t dot = 0;
    std::uint16_t* out = code.generator_.data() + r * code.length_;
    for (std::size_t col = 0; col < code.length_; ++col) {
      out[col] = static_cast<std::uint16_t>(antilog[dot]);
      for (int i = n - 1; i >= 0; --i) {
        if (++j[i] < side) {
          dot = (dot + m[i]) % side;
          break;
        }
        j[i] = 0;
        // wrapping j_i from side-1 to 0 subtracts (side-1) m_i == adds m_i
        dot = (dot + m[i]) % side;
      }
    }
  }

  code.dimension_ = options.allow_outside_cube ? rank_check(code) : k;
  return code;
}

std::vector<std::uint32_t> ToricCode::column_exponents(std::size_t j) const {
  const int n = torus_dim();
  const std::size_t side = field_.order() - 1;
  std::vector<std::uint32_t> e(n);
  for (int i = n - 1; i >= 0; --i) {
    e[i] = static_cast<std::uint32_t>(j % side);
    j /= side;
  }
  return e;
}

Codeword evaluate(const ToricCode& code, std::span<const FieldElement> coefficients) {
  if (coefficients.size() != code.rows()) {
    throw CodeError("message has " + std::to_string(coefficients.size()) + " coefficients, code has " +
                    std::to_string(code.rows()) + " monomials");
  }
  const auto& field = code.field();
  Codeword c;
  c.coefficients.assign(coefficients.begin(), coefficients.end());
  std::vector<std::uint32_t> acc(code.length(), 0);
  for (std::size_t r = 0; r < code.rows(); ++r) {
    const auto a = coefficients[r];
    if (a.order != field.order()) throw FieldError("message coefficient from a different field");
    if (a.is_zero()) continue;
    const auto row = code.row(r);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      acc[j] = field.add_raw(acc[j], field.mul_raw(a.value, row[j]));
    }
  }
  c.values.reserve(acc.size());
  for (auto v : acc) c.values.push_back(field.element(v));
  return c;
}

std::size_t weight(const Codeword& c) {
  return static_cast<std::size_t>(
      std::count_if(c.values.begin(), c.values.end(), [](FieldElement e) { return !e.is_zero(); }));
}

std::size_t zero_count(const Codeword& c) { return c.values.size() - weight(c); }

std::size_t matrix_rank(const GaloisField& field, std::vector<std::uint32_t> m, std::size_t rows,
                        std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(m.begin() + pivot * cols, m.begin() + (pivot + 1) * cols, m.begin() + rank * cols);
    }
    const auto inv = field.inv(field.element(m[rank * cols + col])).value;
    for (std::size_t j = col; j < cols; ++j) m[rank * cols + j] = field.mul_raw(inv, m[rank * cols + j]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const auto f = m[r * cols + col];
      if (!f) continue;
      for (std::size_t j = col; j < cols; ++j) {
        m[r * cols + j] = field.sub_raw(m[r * cols + j], field.mul_raw(f, m[rank * cols + j]));
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_check(const ToricCode& code) {
  const auto g = code.generator();
  return matrix_rank(code.field(), std::vector<std::uint32_t>(g.begin(), g.end()), code.rows(), code.length());
}

void write_generator(std::ostream& os, const ToricCode& code) {
  os << code.field().order() << ' ' << code.torus_dim() << ' ' << code.dimension() << ' ' << code.length()
     << '\n';
  for (std::size_t r = 0; r < code.rows(); ++r) {
    const auto row = code.row(r);
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << '\n';
  }
}

}  // namespace toricode
