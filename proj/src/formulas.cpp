#include "toricode/formulas.hpp"

#include <map>

namespace toricode {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw FormulaError("integer overflow in formula evaluation");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw FormulaError("integer overflow in formula evaluation");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw FormulaError("integer overflow in formula evaluation");
  return r;
}

std::uint64_t checked_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

void check_q(std::uint64_t q) {
  if (q < 2) throw FormulaError("field size must be at least 2, got " + std::to_string(q));
}

std::uint64_t positive(std::int64_t v, const std::string& what) {
  if (v <= 0) throw FormulaError(what + " is not positive (" + std::to_string(v) + ")");
  return static_cast<std::uint64_t>(v);
}

// Largest coordinate along each axis of the s-dilate of the recipe prefix
// ending at step i. Every realized polytope has minimum 0 on each axis.
void extents(const ConstructionRecipe& r, std::size_t i, std::int64_t s, std::vector<std::int64_t>& out) {
  if (r.is_segment(i)) {
    if (i > 0) extents(r, i - 1, s, out);
    out.push_back(checked_mul(s, r.parameter(i)));
  } else {
    const auto sk = checked_mul(s, r.parameter(i));
    extents(r, i - 1, sk, out);
    out.push_back(sk);
  }
}

void check_fits(const ConstructionRecipe& r, std::uint64_t q) {
  std::vector<std::int64_t> ext;
  extents(r, r.size() - 1, 1, ext);
  for (std::size_t i = 0; i < ext.size(); ++i) {
    if (ext[i] > static_cast<std::int64_t>(q) - 2) {
      throw FormulaError("recipe " + r.to_string() + " reaches " + std::to_string(ext[i]) + " on axis " +
                         std::to_string(i + 1) + ", outside [0," + std::to_string(q - 2) + "]");
    }
  }
}

}  // namespace

std::uint64_t d_product(std::uint64_t d_p, std::uint64_t d_q) {
  if (d_p == 0 || d_q == 0) throw FormulaError("minimum distances must be positive");
  return checked_mul(d_p, d_q);
}

std::uint64_t d_pyramid_dilate(std::uint64_t d_kq, std::uint64_t q) {
  check_q(q);
  return checked_mul(q - 1, d_kq);
}

std::vector<MixFactor> mix_factors(const ConstructionRecipe& recipe, std::uint64_t q) {
  check_q(q);
  // suffix[i] = prod of pyramid scales at steps > i
  std::vector<std::int64_t> suffix(recipe.size(), 1);
  for (std::size_t i = recipe.size() - 1; i > 0; --i) {
    suffix[i - 1] = recipe.is_segment(i) ? suffix[i] : checked_mul(suffix[i], recipe.parameter(i));
  }
  std::vector<MixFactor> out;
  for (std::size_t i = 0; i < recipe.size(); ++i) {
    if (!recipe.is_segment(i)) continue;
    MixFactor f;
    f.step = i;
    f.a = recipe.parameter(i);
    f.suffix = suffix[i];
    f.value = static_cast<std::int64_t>(q) - 1 - checked_mul(f.a, f.suffix);
    out.push_back(f);
  }
  return out;
}

std::uint64_t d_recipe(const ConstructionRecipe& recipe, std::uint64_t q) {
  check_q(q);
  check_fits(recipe, q);
  std::uint64_t d = 1;
  std::uint64_t pyramids = 0;
  for (std::size_t i = 0; i < recipe.size(); ++i) pyramids += !recipe.is_segment(i);
  d = checked_pow(q - 1, pyramids);
  for (const auto& f : mix_factors(recipe, q)) {
    if (f.value <= 0) {
      throw FormulaError("recipe " + recipe.to_string() + " has nonpositive factor q-1-a*K = " +
                         std::to_string(f.value) + " at step " + std::to_string(f.step + 1) + " for q=" +
                         std::to_string(q));
    }
    d = checked_mul(d, static_cast<std::uint64_t>(f.value));
  }
  return d;
}

std::uint64_t d_simplex(int n, std::int64_t k, std::uint64_t q) {
  check_q(q);
  if (n < 1 || k < 1) throw FormulaError("simplex needs n >= 1 and k >= 1");
  return checked_mul(checked_pow(q - 1, n - 1),
                     positive(static_cast<std::int64_t>(q) - 1 - k, "q-1-k for the simplex"));
}

std::uint64_t d_box(std::span<const std::int64_t> sides, std::uint64_t q) {
  check_q(q);
  if (sides.empty()) throw FormulaError("box needs at least one side");
  std::uint64_t d = 1;
  for (auto a : sides) {
    if (a < 1) throw FormulaError("box sides must be positive");
    d = checked_mul(d, positive(static_cast<std::int64_t>(q) - 1 - a, "q-1-a for a box side"));
  }
  return d;
}

std::uint64_t d_pyr_cube(int l, int m, std::int64_t k, std::uint64_t q) {
  check_q(q);
  if (l < 0 || m < 1 || k < 1) throw FormulaError("pyramid over a cube needs l >= 0, m >= 1, k >= 1");
  const auto f = positive(static_cast<std::int64_t>(q) - 1 - k, "q-1-k for the pyramid over a cube");
  return checked_mul(checked_pow(q - 1, l), checked_pow(f, m));
}

std::uint64_t d_cross(int n, std::int64_t k, std::uint64_t q) {
  check_q(q);
  if (n < 1 || k < 1) throw FormulaError("cross polytope needs n >= 1 and k >= 1");
  return checked_mul(checked_pow(q - 1, n - 1),
                     positive(static_cast<std::int64_t>(q) - 1 - checked_mul(std::int64_t{2}, k),
                              "q-1-2k for the cross polytope"));
}

std::uint64_t d_double_pyramid(std::uint64_t d_kq, std::uint64_t q, bool q_has_length2_segment) {
  if (!q_has_length2_segment) {
    throw FormulaError("double pyramid formula needs Q to contain a lattice segment of length 2");
  }
  return d_pyramid_dilate(d_kq, q);
}

std::uint64_t d_pyramid_upper_bound(std::uint64_t d_q, std::int64_t k, std::uint64_t q) {
  check_q(q);
  if (k < 0 || static_cast<std::uint64_t>(k) > q - 1) throw FormulaError("pyramid bound needs 0 <= k <= q-1");
  return checked_mul(q - static_cast<std::uint64_t>(k), d_q);
}

DecreaseReport check_decrease(std::span<const std::uint64_t> d_values, std::uint64_t q, std::int64_t lambda) {
  check_q(q);
  if (lambda < 1) throw FormulaError("lambda must be at least 1");
  DecreaseReport report;
  for (std::size_t k = 0; k < d_values.size(); ++k) {
    for (std::size_t l = 0; l <= k; ++l) {
      const __int128 lhs = static_cast<__int128>(d_values[k]) * (q - 1);
      const __int128 rhs = static_cast<__int128>(d_values[k - l]) *
                           (static_cast<__int128>(q) - 1 - static_cast<__int128>(lambda) * l);
      if (lhs > rhs) {
        report.holds = false;
        report.first_violation = DecreaseViolation{k, l};
        return report;
      }
    }
  }
  return report;
}

std::uint64_t dim_product(std::uint64_t dim_p, std::uint64_t dim_q) { return checked_mul(dim_p, dim_q); }

std::uint64_t dim_pyramid_dilate(std::span<const std::uint64_t> dims) {
  std::uint64_t total = 0;
  for (auto d : dims) total = checked_add(total, d);
  return total;
}

std::uint64_t dim_recipe(const ConstructionRecipe& recipe) {
  // count(i, s): lattice points of the s-dilate of the prefix ending at step i
  std::map<std::pair<std::size_t, std::int64_t>, std::uint64_t> memo;
  auto count = [&](auto&& self, std::ptrdiff_t i, std::int64_t s) -> std::uint64_t {
    if (i < 0 || s == 0) return 1;
    const auto key = std::make_pair(static_cast<std::size_t>(i), s);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t r;
    const auto p = recipe.parameter(static_cast<std::size_t>(i));
    if (recipe.is_segment(static_cast<std::size_t>(i))) {
      r = dim_product(self(self, i - 1, s), static_cast<std::uint64_t>(checked_mul(s, p)) + 1);
    } else {
      const auto top = checked_mul(s, p);
      std::vector<std::uint64_t> dims;
      for (std::int64_t l = 0; l <= top; ++l) dims.push_back(self(self, i - 1, l));
      r = dim_pyramid_dilate(dims);
    }
    memo.emplace(key, r);
    return r;
  };
  return count(count, static_cast<std::ptrdiff_t>(recipe.size()) - 1, 1);
}

namespace {

Fraction fraction(std::uint64_t num, std::uint64_t den) {
  constexpr auto kMax = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
  if (num > kMax || den > kMax) throw FormulaError("value too large for an exact fraction");
  return Fraction(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

CodeParams params_report(const LatticePolytope& p, const GaloisField& field, std::optional<SearchMethod> method,
                         const SearchOptions& options) {
  const auto code = ToricCode::build(p, field);
  const auto r = method ? min_distance(code, *method, options) : min_distance(code, options);
  CodeParams out;
  out.N = code.length();
  out.k = code.dimension();
  out.d = r.d;
  out.exact = r.exact;
  out.relative_distance = fraction(out.d, out.N);
  out.rate = fraction(out.k, out.N);
  return out;
}

RecipeParams params_report(const ConstructionRecipe& recipe, std::uint64_t q) {
  RecipeParams out;
  auto& p = out.params;
  p.d = d_recipe(recipe, q);
  p.N = checked_pow(q - 1, recipe.size());
  p.k = dim_recipe(recipe);
  p.exact = true;
  p.relative_distance = fraction(p.d, p.N);
  p.rate = fraction(p.k, p.N);

  const auto side = static_cast<std::int64_t>(q) - 1;
  out.segment_bound = 1;
  out.uniform_bound = 1;
  for (const auto& f : mix_factors(recipe, q)) {
    out.segment_bound *= Fraction(side - f.a, side);
    out.uniform_bound *= Fraction(side - 1, side);
  }
  out.bound_holds = p.relative_distance <= out.segment_bound && out.segment_bound <= out.uniform_bound;
  if (!out.bound_holds) {
    throw FormulaError("recipe " + recipe.to_string() + " violates d/N <= prod (1 - a_i/(q-1))");
  }
  return out;
}

}  // namespace toricode
