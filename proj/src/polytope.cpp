#include "toricode/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace toricode {

namespace {

std::string point_string(const LatticePoint& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void check_dim(const LatticePolytope& p, const LatticePoint& x, const char* what) {
  if (static_cast<int>(x.size()) != p.ambient_dim()) {
    throw PolytopeError(std::string(what) + ": vector of length " + std::to_string(x.size()) +
                        " for polytope in dimension " + std::to_string(p.ambient_dim()));
  }
}

}  // namespace

LatticePolytope LatticePolytope::from_vertices(int n, std::vector<LatticePoint> points) {
  if (n < 0) throw PolytopeError("negative ambient dimension");
  if (points.empty()) throw PolytopeError("polytope needs at least one point");
  for (const auto& v : points) {
    if (static_cast<int>(v.size()) != n) {
      throw PolytopeError("point " + point_string(v) + " does not have " + std::to_string(n) +
                          " coordinates");
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // A non-extreme point stays inside the hull of the remaining points after
  // any other non-extreme point is dropped, so a single sweep suffices.
  for (std::size_t i = 0; i < points.size() && points.size() > 1;) {
    std::vector<LatticePoint> others;
    others.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i) others.push_back(points[j]);
    }
    if (in_convex_hull(others, points[i])) {
      points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return LatticePolytope(n, std::move(points));
}

bool LatticePolytope::contains(const LatticePoint& x) const {
  check_dim(*this, x, "contains_point");
  return in_convex_hull(vertices_, x);
}

std::vector<LatticePoint> LatticePolytope::lattice_points() const {
  if (dim_ == 0) return {LatticePoint{}};
  LatticePoint lo = vertices_.front(), hi = vertices_.front();
  for (const auto& v : vertices_) {
    for (int i = 0; i < dim_; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  std::vector<LatticePoint> out;
  LatticePoint x = lo;
  for (;;) {
    if (in_convex_hull(vertices_, x)) out.push_back(x);
    int i = dim_ - 1;
    for (; i >= 0; --i) {
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
    }
    if (i < 0) break;
  }
  return out;
}

bool LatticePolytope::fits_in_cube(std::uint64_t q) const {
  if (q < 2) return false;
  const auto top = static_cast<std::int64_t>(q - 2);
  for (const auto& v : vertices_) {
    for (auto c : v) {
      if (c < 0 || c > top) return false;
    }
  }
  return true;
}

std::string LatticePolytope::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < vertices_[i].size(); ++j) os << (j ? "," : "") << vertices_[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

LatticePolytope product(const LatticePolytope& p, const LatticePolytope& q) {
  std::vector<LatticePoint> pts;
  pts.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& v : p.vertices()) {
    for (const auto& w : q.vertices()) {
      LatticePoint x = v;
      x.insert(x.end(), w.begin(), w.end());
      pts.push_back(std::move(x));
    }
  }
  return LatticePolytope::from_vertices(p.ambient_dim() + q.ambient_dim(), std::move(pts));
}

LatticePolytope pyramid(const LatticePolytope& q) {
  const int n = q.ambient_dim();
  std::vector<LatticePoint> pts;
  for (const auto& v : q.vertices()) {
    LatticePoint x = v;
    x.push_back(0);
    pts.push_back(std::move(x));
  }
  LatticePoint apex(n + 1, 0);
  apex[n] = 1;
  pts.push_back(std::move(apex));
  return LatticePolytope::from_vertices(n + 1, std::move(pts));
}

LatticePolytope double_pyramid(const LatticePolytope& q) {
  const int n = q.ambient_dim();
  std::vector<LatticePoint> pts;
  for (const auto& v : q.vertices()) {
    LatticePoint x = v;
    x.push_back(1);
    pts.push_back(std::move(x));
  }
  LatticePoint low(n + 1, 0), high(n + 1, 0);
  high[n] = 2;
  pts.push_back(std::move(low));
  pts.push_back(std::move(high));
  return LatticePolytope::from_vertices(n + 1, std::move(pts));
}

LatticePolytope dilate(const LatticePolytope& p, std::int64_t k) {
  if (k < 0) throw PolytopeError("dilation factor must be nonnegative, got " + std::to_string(k));
  std::vector<LatticePoint> pts = p.vertices();
  for (auto& v : pts) {
    for (auto& c : v) c *= k;
  }
  return LatticePolytope::from_vertices(p.ambient_dim(), std::move(pts));
}

LatticePolytope translate(const LatticePolytope& p, const LatticePoint& t) {
  check_dim(p, t, "translate");
  std::vector<LatticePoint> pts = p.vertices();
  for (auto& v : pts) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += t[i];
  }
  return LatticePolytope::from_vertices(p.ambient_dim(), std::move(pts));
}

LatticePolytope cross_polytope(int n, std::int64_t k) {
  if (n < 1) throw PolytopeError("cross polytope dimension must be positive");
  if (k < 1) throw PolytopeError("cross polytope dilation must be positive");
  std::vector<LatticePoint> pts;
  for (int i = 0; i < n; ++i) {
    for (std::int64_t s : {std::int64_t{1}, std::int64_t{-1}}) {
      LatticePoint v(n, k);
      v[i] += s * k;
      pts.push_back(std::move(v));
    }
  }
  return LatticePolytope::from_vertices(n, std::move(pts));
}

LatticePolytope standard_simplex(int n) {
  if (n < 0) throw PolytopeError("negative simplex dimension");
  std::vector<LatticePoint> pts{LatticePoint(n, 0)};
  for (int i = 0; i < n; ++i) {
    LatticePoint e(n, 0);
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  return LatticePolytope::from_vertices(n, std::move(pts));
}

LatticePolytope box(std::span<const std::int64_t> sides) {
  LatticePolytope p = origin(0);
  for (auto a : sides) {
    if (a < 0) throw PolytopeError("box side must be nonnegative");
    p = product(p, segment(a));
  }
  return p;
}

LatticePolytope segment(std::int64_t a) {
  return LatticePolytope::from_vertices(1, {{0}, {a}});
}

LatticePolytope origin(int n) { return LatticePolytope::from_vertices(n, {LatticePoint(n, 0)}); }

std::int64_t determinant(const IntMatrix& u) {
  const std::size_t n = u.size();
  for (const auto& row : u) {
    if (row.size() != n) throw PolytopeError("determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  // Bareiss elimination; every intermediate value is an exact minor.
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = u[i][j];
  }
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

LatticePolytope unimodular_transform(const LatticePolytope& p, const IntMatrix& u, const LatticePoint& t) {
  const auto n = static_cast<std::size_t>(p.ambient_dim());
  if (u.size() != n) throw PolytopeError("transform matrix size does not match polytope dimension");
  check_dim(p, t, "unimodular_transform");
  const auto det = determinant(u);
  if (det != 1 && det != -1) {
    throw PolytopeError("matrix is not unimodular (determinant " + std::to_string(det) + ")");
  }
  std::vector<LatticePoint> pts;
  for (const auto& v : p.vertices()) {
    LatticePoint w(t);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) w[i] += u[i][j] * v[j];
    }
    pts.push_back(std::move(w));
  }
  return LatticePolytope::from_vertices(p.ambient_dim(), std::move(pts));
}

std::vector<AffineMap> lattice_automorphisms(const LatticePolytope& p) {
  const int n = p.ambient_dim();
  const auto& vs = p.vertices();
  AffineMap identity{IntMatrix(n, std::vector<std::int64_t>(n, 0)), LatticePoint(n, 0)};
  for (int i = 0; i < n; ++i) identity.linear[i][i] = 1;
  std::vector<AffineMap> out{identity};
  if (n == 0) return out;

  // Affine basis v_0, ..., v_n among the vertices, chosen greedily.
  std::vector<std::size_t> basis{0};
  IntMatrix dirs;  // rows v_i - v_0
  for (std::size_t i = 1; i < vs.size() && static_cast<int>(dirs.size()) < n; ++i) {
    LatticePoint d(n);
    for (int c = 0; c < n; ++c) d[c] = vs[i][c] - vs[0][c];
    auto trial = dirs;
    trial.push_back(d);
    // rank test: some maximal minor of the stacked rows is nonzero
    const std::size_t r = trial.size();
    bool independent = false;
    std::vector<int> cols(r);
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
      IntMatrix minor(r, std::vector<std::int64_t>(r));
      std::size_t cj = 0;
      for (int c = 0; c < n; ++c) {
        if (!pick[c]) continue;
        for (std::size_t row = 0; row < r; ++row) minor[row][cj] = trial[row][c];
        ++cj;
      }
      if (determinant(minor) != 0) independent = true;
    } while (!independent && std::prev_permutation(pick.begin(), pick.end()));
    if (independent) {
      dirs = std::move(trial);
      basis.push_back(i);
    }
  }
  if (static_cast<int>(dirs.size()) < n) return out;

  // D has columns v_i - v_0; A = W D^{-1} = W adj(D) / det(D).
  IntMatrix d(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < n; ++c) d[c][i] = dirs[i][c];
  }
  const auto det = determinant(d);
  IntMatrix adj(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // adj[i][j] = (-1)^{i+j} M_{j,i}
      IntMatrix minor;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<std::int64_t> row;
        for (int c = 0; c < n; ++c) {
          if (c != i) row.push_back(d[r][c]);
        }
        minor.push_back(std::move(row));
      }
      adj[i][j] = ((i + j) % 2 ? -1 : 1) * determinant(minor);
    }
  }

  constexpr double kMaxAssignments = 2e6;
  double assignments = 1;
  for (int i = 0; i <= n; ++i) assignments *= static_cast<double>(vs.size() - static_cast<std::size_t>(i));
  if (vs.size() < static_cast<std::size_t>(n) + 1 || assignments > kMaxAssignments) return out;

  std::vector<std::size_t> image(n + 1);
  std::vector<bool> used(vs.size(), false);
  auto try_map = [&] {
    AffineMap m{IntMatrix(n, std::vector<std::int64_t>(n)), LatticePoint(n)};
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        __int128 acc = 0;
        for (int i = 0; i < n; ++i) acc += static_cast<__int128>(vs[image[i + 1]][r] - vs[image[0]][r]) * adj[i][c];
        if (acc % det != 0) return;
        m.linear[r][c] = static_cast<std::int64_t>(acc / det);
      }
    }
    const auto dm = determinant(m.linear);
    if (dm != 1 && dm != -1) return;
    for (int r = 0; r < n; ++r) {
      std::int64_t acc = vs[image[0]][r];
      for (int c = 0; c < n; ++c) acc -= m.linear[r][c] * vs[0][c];
      m.shift[r] = acc;
    }
    std::vector<LatticePoint> mapped;
    for (const auto& v : vs) {
      LatticePoint w = m.shift;
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) w[r] += m.linear[r][c] * v[c];
      }
      mapped.push_back(std::move(w));
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == vs && !(m == identity)) out.push_back(std::move(m));
  };
  auto assign = [&](auto&& self, int level) -> void {
    if (level > n) {
      try_map();
      return;
    }
    for (std::size_t v = 0; v < vs.size(); ++v) {
      if (used[v]) continue;
      used[v] = true;
      image[level] = v;
      self(self, level + 1);
      used[v] = false;
    }
  };
  assign(assign, 0);
  return out;
}

ConstructionRecipe ConstructionRecipe::make(std::vector<RecipeStep> steps) {
  if (steps.empty()) throw PolytopeError("recipe has no steps");
  if (!std::holds_alternative<Segment>(steps.front())) {
    throw PolytopeError("recipe must start with a segment step");
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto v = std::visit([](auto s) {
      if constexpr (std::is_same_v<decltype(s), Segment>) return s.length;
      else return s.factor;
    }, steps[i]);
    if (v < 1) {
      throw PolytopeError("recipe step " + std::to_string(i + 1) + " has non-positive parameter " +
                          std::to_string(v));
    }
  }
  return ConstructionRecipe(std::move(steps));
}

std::int64_t ConstructionRecipe::parameter(std::size_t i) const {
  if (const auto* s = std::get_if<Segment>(&steps_[i])) return s->length;
  return std::get<PyramidScale>(steps_[i]).factor;
}

std::string ConstructionRecipe::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) out += ",";
    out += (is_segment(i) ? "S" : "P") + std::to_string(parameter(i));
  }
  return out;
}

LatticePolytope realize_recipe(const ConstructionRecipe& recipe) {
  LatticePolytope p = origin(0);
  for (std::size_t i = 0; i < recipe.size(); ++i) {
    if (recipe.is_segment(i)) {
      p = product(p, segment(recipe.parameter(i)));
    } else {
      p = dilate(pyramid(p), recipe.parameter(i));
    }
  }
  return p;
}

}  // namespace toricode
