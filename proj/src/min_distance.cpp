#include "toricode/min_distance.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <new>
#include <numeric>
#include <span>
#include <thread>

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace toricode {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr std::size_t kLane = 32;
constexpr std::uint64_t kExhaustiveAutoLimit = std::uint64_t{1} << 22;
constexpr std::uint64_t kMaxSearchTableBytes = std::uint64_t{1} << 30;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_add_overflow(a, b, &r) ? kSaturated : r;
}

std::uint64_t sat_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = sat_mul(r, b);
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

// Bytes on 64-byte boundaries, so 32-byte lanes never
// straddle a cache line.
template <class T>
struct CacheAligned {
  using value_type = T;
  CacheAligned() = default;
  template <class U>
  CacheAligned(const CacheAligned<U>&) {}
  T* allocate(std::size_t n) {
    return static_cast<T*>(::operator new[](n * sizeof(T), std::align_val_t{64}));
  }
  void deallocate(T* p, std::size_t) { ::operator delete[](p, std::align_val_t{64}); }
  bool operator==(const CacheAligned&) const = default;
};
using Bytes = std::vector<std::uint8_t, CacheAligned<std::uint8_t>>;

// How canonical symbol values combine under field addition.
enum class AddKind { xor_add, mod_p, table };

// A basis of the code as byte symbols, with every row pre-multiplied by every
// field element so the walk only ever adds rows.
struct SearchTables {
  GaloisField field;
  std::uint32_t q = 0;
  AddKind kind = AddKind::table;
  std::size_t length = 0;   // N
  std::size_t padded = 0;   // N rounded up to the lane width
  std::size_t dim = 0;      // k
  std::vector<std::uint8_t> add;     // q x q, only for AddKind::table
  Bytes scaled;                      // [row][scalar][padded]

  const std::uint8_t* row(std::size_t r, std::uint32_t scalar) const {
    return scaled.data() + (r * q + scalar) * padded;
  }
};

SearchTables make_tables(const GaloisField& field, const std::vector<std::uint32_t>& basis, std::size_t dim,
                         std::size_t length) {
  SearchTables t{field, 0, AddKind::table, 0, 0, 0, {}, {}};
  t.q = field.order();
  if (t.q > 256) throw CodeError("codeword search supports fields with q <= 256");
  t.length = length;
  t.padded = (length + kLane - 1) / kLane * kLane;
  t.dim = dim;
  if (field.characteristic() == 2) {
    t.kind = AddKind::xor_add;
  } else if (field.degree() == 1 && t.q < 128) {
    t.kind = AddKind::mod_p;
  } else {
    t.kind = AddKind::table;
    t.add.resize(std::size_t{t.q} * t.q);
    for (std::uint32_t a = 0; a < t.q; ++a) {
      for (std::uint32_t b = 0; b < t.q; ++b) t.add[a * t.q + b] = static_cast<std::uint8_t>(field.add_raw(a, b));
    }
  }
  if (sat_mul(sat_mul(dim, t.q), t.padded) > kMaxSearchTableBytes) {
    throw CodeError("code too large for the codeword search tables");
  }
  t.scaled.assign(dim * t.q * t.padded, 0);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::uint32_t s = 0; s < t.q; ++s) {
      auto* out = t.scaled.data() + (r * t.q + s) * t.padded;
      for (std::size_t j = 0; j < length; ++j) out[j] = static_cast<std::uint8_t>(field.mul_raw(s, basis[r * length + j]));
    }
  }
  return t;
}

// c += r over the padded length. Padding stays zero because every row is
// zero there.
template <AddKind K>
inline void add_row(std::uint8_t* c, const std::uint8_t* r, const SearchTables& t) {
  const std::size_t n = t.padded;
#if defined(__AVX2__)
  if constexpr (K != AddKind::table) {
    const __m256i pv = _mm256_set1_epi8(static_cast<char>(t.q));
    for (std::size_t i = 0; i < n; i += kLane) {
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + i));
      __m256i v;
      if constexpr (K == AddKind::xor_add) {
        v = _mm256_xor_si256(a, b);
      } else {
        const __m256i s = _mm256_add_epi8(a, b);
        v = _mm256_min_epu8(s, _mm256_sub_epi8(s, pv));
      }
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(c + i), v);
    }
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) {
    if constexpr (K == AddKind::xor_add) {
      c[i] ^= r[i];
    } else if constexpr (K == AddKind::mod_p) {
      const std::uint8_t s = static_cast<std::uint8_t>(c[i] + r[i]);
      c[i] = s >= t.q ? static_cast<std::uint8_t>(s - t.q) : s;
    } else {
      c[i] = t.add[c[i] * t.q + r[i]];
    }
  }
}

#if defined(__AVX2__)
// zeros[i] += positions where c equals rows[i], for G rows at once. Byte
// lanes count down from zero, so they are flushed every 255 chunks.
template <std::size_t G>
inline void count_equal_group(const std::uint8_t* c, const std::uint8_t* const* rows, std::size_t n,
                              std::uint32_t* zeros) {
  for (std::size_t j = 0; j < n;) {
    __m256i acc[G];
    for (std::size_t i = 0; i < G; ++i) acc[i] = _mm256_setzero_si256();
    const std::size_t stop = std::min(n, j + 255 * kLane);
    for (; j < stop; j += kLane) {
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + j));
      for (std::size_t i = 0; i < G; ++i) {
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows[i] + j));
        acc[i] = _mm256_sub_epi8(acc[i], _mm256_cmpeq_epi8(a, b));
      }
    }
    for (std::size_t i = 0; i < G; ++i) {
      const __m256i s = _mm256_sad_epu8(acc[i], _mm256_setzero_si256());
      const __m128i h = _mm_add_epi64(_mm256_castsi256_si128(s), _mm256_extracti128_si256(s, 1));
      zeros[i] += static_cast<std::uint32_t>(_mm_cvtsi128_si64(h) + _mm_extract_epi64(h, 1));
    }
  }
}
#endif

// Weight of c + v r for the scalars v whose negations are listed: c + v r
// vanishes exactly where c == -v r. One pass over c serves up to eight
// scalars. Returns the lightest weight and its first index.
inline std::pair<std::size_t, std::size_t> best_in_block(const std::uint8_t* c, const SearchTables& t,
                                                         std::size_t row, std::span<const std::uint32_t> negated) {
  const std::size_t n = t.padded;
  const std::size_t m = negated.size();
  std::array<const std::uint8_t*, 256> rows;
  std::array<std::uint32_t, 256> zeros;
  zeros[0] = 0;
  for (std::size_t i = 0; i < m; ++i) {
    rows[i] = t.row(row, negated[i]);
    zeros[i] = 0;
  }
#if defined(__AVX2__)
  std::size_t i = 0;
  for (; i + 8 <= m; i += 8) count_equal_group<8>(c, rows.data() + i, n, zeros.data() + i);
  switch (m - i) {
    case 7: count_equal_group<7>(c, rows.data() + i, n, zeros.data() + i); break;
    case 6: count_equal_group<6>(c, rows.data() + i, n, zeros.data() + i); break;
    case 5: count_equal_group<5>(c, rows.data() + i, n, zeros.data() + i); break;
    case 4: count_equal_group<4>(c, rows.data() + i, n, zeros.data() + i); break;
    case 3: count_equal_group<3>(c, rows.data() + i, n, zeros.data() + i); break;
    case 2: count_equal_group<2>(c, rows.data() + i, n, zeros.data() + i); break;
    case 1: count_equal_group<1>(c, rows.data() + i, n, zeros.data() + i); break;
    default: break;
  }
#else
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) zeros[i] += c[j] == rows[i][j];
  }
#endif
  std::size_t at = 0;
  for (std::size_t i = 1; i < m; ++i) {
    if (zeros[i] > zeros[at]) at = i;
  }
  return {n - zeros[at], at};
}

// Greedy row basis of the generator: keeps rows that raise the rank, in order.
struct Basis {
  std::vector<std::uint32_t> rows;   // dim x N canonical values
  std::vector<std::size_t> source;   // generator row of each basis row
  std::size_t dim = 0;
};

Basis extract_basis(const ToricCode& code) {
  const auto& f = code.field();
  const std::size_t n = code.length();
  Basis b;
  std::vector<std::uint32_t> echelon;  // reduced copies of kept rows
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < code.rows(); ++r) {
    const auto src = code.row(r);
    std::vector<std::uint32_t> v(src.begin(), src.end());
    for (std::size_t e = 0; e < pivots.size(); ++e) {
      const auto coef = v[pivots[e]];
      if (!coef) continue;
      const auto* er = echelon.data() + e * n;
      for (std::size_t j = 0; j < n; ++j) v[j] = f.sub_raw(v[j], f.mul_raw(coef, er[j]));
    }
    const auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (it == v.end()) continue;
    const auto piv = static_cast<std::size_t>(it - v.begin());
    const auto inv = f.inv(f.element(v[piv])).value;
    for (auto& x : v) x = f.mul_raw(inv, x);
    // keep earlier echelon rows reduced at the new pivot
    for (std::size_t e = 0; e < pivots.size(); ++e) {
      auto* er = echelon.data() + e * n;
      const auto coef = er[piv];
      if (!coef) continue;
      for (std::size_t j = 0; j < n; ++j) er[j] = f.sub_raw(er[j], f.mul_raw(coef, v[j]));
    }
    echelon.insert(echelon.end(), v.begin(), v.end());
    pivots.push_back(piv);
    b.rows.insert(b.rows.end(), src.begin(), src.end());
    b.source.push_back(r);
  }
  b.dim = pivots.size();
  if (b.dim == 0) throw CodeError("code has dimension zero");
  return b;
}

std::vector<FieldElement> lift_witness(const ToricCode& code, const Basis& basis,
                                       const std::vector<std::uint32_t>& message) {
  const auto& f = code.field();
  std::vector<FieldElement> out(code.rows(), f.zero());
  for (std::size_t i = 0; i < basis.dim; ++i) out[basis.source[i]] = f.element(message[i]);
  const auto lead = std::find_if(out.begin(), out.end(), [](FieldElement e) { return !e.is_zero(); });
  if (lead != out.end() && lead->value != 1) {
    const auto s = f.inv(*lead);
    for (auto& e : out) e = f.mul(e, s);
  }
  return out;
}

// Runs jobs [0, count) on up to `threads` workers; job order is irrelevant to
// the caller because every job writes its own slot.
template <class Fn>
void run_jobs(std::size_t count, unsigned threads, Fn&& fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
}

struct ChunkBest {
  std::size_t weight = std::numeric_limits<std::size_t>::max();
  std::uint64_t position = 0;  // index in the chunk's own enumeration order
};

// ---------------------------------------------------------------------------
// Exhaustive walk.
//
// Class t fixes coefficient t to one and coefficients before it to zero.
// When t < k-1 the last coefficient is swept as a block over all q values
// (0, 1, ..., q-1), and the L = k-2-t coefficients in between run through the
// q-ary modular Gray code: counter value n has Gray digits
// g_i = (n_i - n_{i+1}) mod q, and n -> n+1 changes only digit
// i = (number of trailing q-1 digits of n), by +1 mod q. Gray digit i (least
// significant first) drives coefficient k-2-i. Codewords are ordered by
// (t, n, block value).

struct GrayRange {
  std::size_t lead = 0;  // t
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

std::vector<std::uint32_t> gray_message(std::size_t k, std::size_t lead, std::uint64_t counter, std::uint32_t q) {
  std::vector<std::uint32_t> msg(k, 0);
  msg[lead] = 1;
  if (lead + 1 >= k) return msg;
  const std::size_t len = k - 2 - lead;
  std::vector<std::uint32_t> digits(len);
  for (auto& d : digits) {
    d = static_cast<std::uint32_t>(counter % q);
    counter /= q;
  }
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint32_t next = i + 1 < len ? digits[i + 1] : 0;
    msg[k - 2 - i] = (digits[i] + q - next) % q;
  }
  return msg;
}

template <AddKind K>
ChunkBest walk_gray(const SearchTables& t, const GrayRange& range) {
  const std::uint32_t q = t.q;
  const std::size_t k = t.dim;
  const auto& f = t.field;
  ChunkBest best;
  Bytes word(t.padded, 0);

  if (range.lead + 1 == k) {
    const std::uint32_t neg_one = f.sub_raw(0, 1);
    best.weight = best_in_block(word.data(), t, k - 1, std::span<const std::uint32_t>(&neg_one, 1)).first;
    return best;
  }

  const std::size_t len = k - 2 - range.lead;
  std::vector<std::uint32_t> negated(q);
  for (std::uint32_t v = 0; v < q; ++v) negated[v] = f.sub_raw(0, v);
  std::vector<std::uint32_t> step(q);
  for (std::uint32_t v = 0; v < q; ++v) step[v] = f.sub_raw(v + 1 == q ? 0 : v + 1, v);

  std::vector<std::uint32_t> msg = gray_message(k, range.lead, range.begin, q);
  std::vector<std::uint32_t> digits(len);
  {
    std::uint64_t c = range.begin;
    for (auto& d : digits) {
      d = static_cast<std::uint32_t>(c % q);
      c /= q;
    }
  }
  for (std::size_t r = range.lead; r + 1 < k; ++r) {
    if (msg[r]) add_row<K>(word.data(), t.row(r, msg[r]), t);
  }
  for (std::uint64_t n = range.begin;;) {
    const auto [w, v] = best_in_block(word.data(), t, k - 1, negated);
    if (w < best.weight) {
      best.weight = w;
      best.position = (n - range.begin) * q + v;
    }
    if (++n == range.end) break;
    std::size_t i = 0;
    while (digits[i] == q - 1) digits[i++] = 0;
    ++digits[i];
    const std::size_t coef = k - 2 - i;
    const std::uint32_t old = msg[coef];
    const std::uint32_t now = old + 1 == q ? 0 : old + 1;
    msg[coef] = now;
    add_row<K>(word.data(), t.row(coef, step[old]), t);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Information-set search helpers.

// Columns of the basis as vectors in GF(q)^k, with incremental elimination.
class ColumnSpan {
 public:
  ColumnSpan(const GaloisField& f, std::size_t k) : f_(&f), k_(k) {}

  std::size_t rank() const { return pivots_.size(); }

  // Adds a column; returns false (and leaves the span unchanged) if it is
  // already in the span.
  bool add(std::vector<std::uint32_t> v) {
    for (std::size_t e = 0; e < pivots_.size(); ++e) {
      const auto coef = v[pivots_[e]];
      if (!coef) continue;
      const auto& b = rows_[e];
      for (std::size_t i = 0; i < k_; ++i) v[i] = f_->sub_raw(v[i], f_->mul_raw(coef, b[i]));
    }
    const auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (it == v.end()) return false;
    const auto piv = static_cast<std::size_t>(it - v.begin());
    const auto inv = f_->inv(f_->element(v[piv])).value;
    for (auto& x : v) x = f_->mul_raw(inv, x);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

 private:
  const GaloisField* f_;
  std::size_t k_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
};

struct InformationSet {
  std::vector<std::size_t> columns;  // ascending
  // perm[h * k + i]: position in `columns` of the image of columns[i] under
  // the h-th group element; h = 0 is the identity.
  std::vector<std::uint32_t> perm;
  std::size_t group_order = 1;
};

std::vector<std::uint32_t> basis_column(const Basis& b, std::size_t n, std::size_t j) {
  std::vector<std::uint32_t> v(b.dim);
  for (std::size_t i = 0; i < b.dim; ++i) v[i] = b.rows[i * n + j];
  return v;
}

// Exponent matrices act on torus columns by j -> M j (mod q-1). For a lattice
// automorphism m -> A m + b of P, M = A^T maps the code onto itself up to
// scaling each position by g^{<b, j>}. Translations j -> j + t do the same.
using ExpMatrix = std::vector<std::vector<std::uint32_t>>;

ExpMatrix identity_matrix(int n) {
  ExpMatrix m(n, std::vector<std::uint32_t>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ExpMatrix multiply(const ExpMatrix& a, const ExpMatrix& b, std::uint32_t side) {
  const auto n = a.size();
  ExpMatrix c(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < n; ++l) acc += std::uint64_t{a[i][l]} * b[l][j];
      c[i][j] = static_cast<std::uint32_t>(acc % side);
    }
  }
  return c;
}

std::vector<ExpMatrix> symmetry_matrices(const ToricCode& code) {
  const int n = code.torus_dim();
  const std::int64_t side = code.field().order() - 1;
  std::vector<ExpMatrix> out;
  for (const auto& a : lattice_automorphisms(code.polytope())) {
    ExpMatrix m(n, std::vector<std::uint32_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = static_cast<std::uint32_t>(((a.linear[j][i] % side) + side) % side);
    }
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  return out;
}

// Subgroup candidate: the linear parts and a product translation subgroup
// prod_i step_i Z_{q-1}. Elements are (M, t) for every pairing.
struct GroupCandidate {
  std::vector<ExpMatrix> linear;
  std::vector<std::uint32_t> step;
  std::size_t order = 1;
};

std::vector<GroupCandidate> group_candidates(const ToricCode& code) {
  const int n = code.torus_dim();
  const std::uint32_t side = code.field().order() - 1;
  const auto full = symmetry_matrices(code);

  // Linear subgroups: everything, each cyclic subgroup, the identity.
  std::vector<std::vector<ExpMatrix>> linear{full};
  for (const auto& m : full) {
    std::vector<ExpMatrix> cyc{identity_matrix(n)};
    for (auto p = m; p != identity_matrix(n); p = multiply(p, m, side)) cyc.push_back(p);
    std::sort(cyc.begin(), cyc.end());
    if (std::find(linear.begin(), linear.end(), cyc) == linear.end()) linear.push_back(std::move(cyc));
  }
  for (auto& l : linear) std::sort(l.begin(), l.end());
  std::sort(linear.begin(), linear.end());
  linear.erase(std::unique(linear.begin(), linear.end()), linear.end());

  std::vector<std::uint32_t> divisors;
  for (std::uint32_t d = 1; d <= side; ++d) {
    if (side % d == 0) divisors.push_back(d);
  }
  std::vector<std::vector<std::uint32_t>> steps;
  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    std::vector<std::uint32_t> step(n);
    for (int i = 0; i < n; ++i) step[i] = divisors[pick[i]];
    steps.push_back(std::move(step));
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++pick[i] < divisors.size()) break;
      pick[i] = 0;
    }
    if (i < 0) break;
  }

  constexpr std::uint64_t kMaxPermEntries = std::uint64_t{1} << 24;
  std::vector<GroupCandidate> out;
  for (const auto& l : linear) {
    for (const auto& step : steps) {
      // the translation subgroup must be stable under every M
      bool stable = true;
      for (const auto& m : l) {
        for (int g = 0; g < n && stable; ++g) {
          for (int r = 0; r < n && stable; ++r) {
            stable = (std::uint64_t{m[r][g]} * step[g]) % side % step[r] == 0;
          }
        }
      }
      if (!stable) continue;
      std::size_t order = l.size();
      for (int i = 0; i < n; ++i) order *= side / step[i];
      if (sat_mul(order, code.length()) > kMaxPermEntries) continue;
      out.push_back({l, step, order});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.order > b.order; });
  return out;
}

std::size_t column_index(const std::vector<std::uint32_t>& e, std::uint32_t side) {
  std::size_t j = 0;
  for (auto x : e) j = j * side + x;
  return j;
}

// Position permutations of the candidate group, identity first.
std::vector<std::vector<std::uint32_t>> group_permutations(const ToricCode& code, const GroupCandidate& g) {
  const int n = code.torus_dim();
  const std::uint32_t side = code.field().order() - 1;
  const std::size_t len = code.length();

  std::vector<std::vector<std::uint32_t>> translations{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& t : translations) {
      for (std::uint32_t x = 0; x < side; x += g.step[i]) {
        auto u = t;
        u.push_back(x);
        next.push_back(std::move(u));
      }
    }
    translations = std::move(next);
  }
  std::vector<const ExpMatrix*> linear;
  const auto id = identity_matrix(n);
  for (const auto& m : g.linear) {
    if (m == id) linear.insert(linear.begin(), &m);
    else linear.push_back(&m);
  }

  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> e(n), img(n);
  for (const auto* m : linear) {
    for (const auto& t : translations) {
      std::vector<std::uint32_t> perm(len);
      for (std::size_t j = 0; j < len; ++j) {
        e = code.column_exponents(j);
        for (int r = 0; r < n; ++r) {
          std::uint64_t acc = t[r];
          for (int c = 0; c < n; ++c) acc += std::uint64_t{(*m)[r][c]} * e[c];
          img[r] = static_cast<std::uint32_t>(acc % side);
        }
        perm[j] = static_cast<std::uint32_t>(column_index(img, side));
      }
      perms.push_back(std::move(perm));
    }
  }
  return perms;
}

// Greedy union of orbits: an orbit is kept when all of its columns are
// independent of the columns kept so far.
std::optional<InformationSet> orbit_information_set(const ToricCode& code, const Basis& b,
                                                    const std::vector<std::vector<std::uint32_t>>& perms) {
  const std::size_t k = b.dim;
  const std::size_t len = code.length();
  ColumnSpan span(code.field(), k);
  std::vector<bool> covered(len, false);
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> orbit;
  for (std::size_t j = 0; j < len && span.rank() < k; ++j) {
    if (covered[j]) continue;
    orbit.clear();
    for (const auto& p : perms) {
      if (!covered[p[j]]) {
        covered[p[j]] = true;
        orbit.push_back(p[j]);
      }
    }
    if (span.rank() + orbit.size() > k) continue;
    ColumnSpan trial = span;
    bool independent = true;
    for (auto c : orbit) {
      if (!trial.add(basis_column(b, len, c))) {
        independent = false;
        break;
      }
    }
    if (independent) {
      span = std::move(trial);
      chosen.insert(chosen.end(), orbit.begin(), orbit.end());
    }
  }
  if (span.rank() != k) return std::nullopt;

  InformationSet s;
  s.columns = std::move(chosen);
  std::sort(s.columns.begin(), s.columns.end());
  s.group_order = perms.size();
  s.perm.resize(perms.size() * k);
  for (std::size_t h = 0; h < perms.size(); ++h) {
    for (std::size_t i = 0; i < k; ++i) {
      const auto it = std::lower_bound(s.columns.begin(), s.columns.end(), perms[h][s.columns[i]]);
      s.perm[h * k + i] = static_cast<std::uint32_t>(it - s.columns.begin());
    }
  }
  return s;
}

// Largest symmetry group that admits an invariant information set; the
// trivial group always does.
InformationSet choose_information_set(const ToricCode& code, const Basis& b) {
  constexpr std::size_t kMaxAttempts = 256;
  const auto candidates = group_candidates(code);
  std::size_t attempts = 0;
  for (const auto& g : candidates) {
    if (g.order == 1 || attempts++ == kMaxAttempts) break;
    if (auto s = orbit_information_set(code, b, group_permutations(code, g))) return std::move(*s);
  }
  std::vector<std::vector<std::uint32_t>> trivial(1, std::vector<std::uint32_t>(code.length()));
  std::iota(trivial[0].begin(), trivial[0].end(), 0u);
  return *orbit_information_set(code, b, trivial);
}

// Row-major inverse of a k x k matrix over the field.
std::vector<std::uint32_t> invert(const GaloisField& f, std::vector<std::uint32_t> a, std::size_t k) {
  std::vector<std::uint32_t> inv(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) inv[i * k + i] = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (a[p * k + c] == 0) ++p;
    if (p != c) {
      std::swap_ranges(a.begin() + p * k, a.begin() + (p + 1) * k, a.begin() + c * k);
      std::swap_ranges(inv.begin() + p * k, inv.begin() + (p + 1) * k, inv.begin() + c * k);
    }
    const auto s = f.inv(f.element(a[c * k + c])).value;
    for (std::size_t j = 0; j < k; ++j) {
      a[c * k + j] = f.mul_raw(s, a[c * k + j]);
      inv[c * k + j] = f.mul_raw(s, inv[c * k + j]);
    }
    for (std::size_t r = 0; r < k; ++r) {
      const auto m = a[r * k + c];
      if (r == c || !m) continue;
      for (std::size_t j = 0; j < k; ++j) {
        a[r * k + j] = f.sub_raw(a[r * k + j], f.mul_raw(m, a[c * k + j]));
        inv[r * k + j] = f.sub_raw(inv[r * k + j], f.mul_raw(m, inv[c * k + j]));
      }
    }
  }
  return inv;
}

// Lexicographic w-subsets of [0, k).
void unrank_combination(std::uint64_t rank, std::size_t k, std::size_t w, std::vector<std::uint32_t>& out) {
  out.resize(w);
  std::uint32_t x = 0;
  for (std::size_t i = 0; i < w; ++i) {
    for (;; ++x) {
      const auto c = binomial(k - x - 1, w - i - 1);
      if (rank < c) break;
      rank -= c;
    }
    out[i] = x++;
  }
}

bool next_combination(std::vector<std::uint32_t>& c, std::size_t k) {
  const std::size_t w = c.size();
  std::size_t i = w;
  while (i > 0 && c[i - 1] == k - w + i - 1) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < w; ++j) c[j] = c[j - 1] + 1;
  return true;
}

// True iff no subgroup translate of the support is lexicographically smaller.
bool canonical_support(const InformationSet& s, std::size_t k, const std::vector<std::uint32_t>& support,
                       std::vector<std::uint32_t>& scratch) {
  for (std::size_t h = 1; h < s.group_order; ++h) {
    scratch.clear();
    for (auto i : support) scratch.push_back(s.perm[h * k + i]);
    std::sort(scratch.begin(), scratch.end());
    if (scratch < support) return false;
  }
  return true;
}

struct LevelChunk {
  std::uint64_t begin = 0;  // combination ranks
  std::uint64_t end = 0;
};

struct LevelBest {
  std::size_t weight = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint32_t> support;
  std::vector<std::uint32_t> exponents;  // of coefficients 1..w-1 of the support
  std::uint64_t canonical = 0;            // canonical supports seen in the chunk
};

// All messages supported exactly on canonical w-subsets of the information
// set: first coefficient one, the middle ones g^e in Gray order over e, and
// the last swept as a block over g^0, ..., g^{q-2}.
template <AddKind K>
LevelBest walk_level(const SearchTables& t, const InformationSet& s, std::size_t w, const LevelChunk& chunk) {
  const std::size_t k = t.dim;
  const std::uint32_t side = t.q - 1;
  const auto antilog = t.field.antilog_table();
  const auto& f = t.field;
  LevelBest best;
  std::vector<std::uint32_t> support, scratch, exps(w, 0), counter(w, 0);
  Bytes word(t.padded);
  std::vector<std::uint32_t> negated;
  if (w == 1) {
    negated.push_back(f.sub_raw(0, 1));
  } else {
    for (std::uint32_t e = 0; e < side; ++e) negated.push_back(f.sub_raw(0, antilog[e]));
  }
  // scalar that moves coefficient g^e to g^{e+1}
  std::vector<std::uint32_t> step(side);
  for (std::uint32_t e = 0; e < side; ++e) step[e] = f.sub_raw(antilog[e + 1 == side ? 0 : e + 1], antilog[e]);
  unrank_combination(chunk.begin, k, w, support);
  for (std::uint64_t rank = chunk.begin; rank < chunk.end; ++rank) {
    if (rank != chunk.begin) next_combination(support, k);
    if (s.group_order > 1 && !canonical_support(s, k, support, scratch)) continue;
    ++best.canonical;

    std::fill(word.begin(), word.end(), 0);
    for (std::size_t i = 0; i + 1 < w; ++i) add_row<K>(word.data(), t.row(support[i], 1), t);
    std::fill(exps.begin(), exps.end(), 0);
    std::fill(counter.begin(), counter.end(), 0);
    for (;;) {
      const auto [wt, e] = best_in_block(word.data(), t, support[w - 1], negated);
      if (wt < best.weight) {
        best.weight = wt;
        best.support = support;
        best.exponents = exps;
        best.exponents[w - 1] = static_cast<std::uint32_t>(e);
      }
      // modular Gray step over digits 1..w-2 (digit w-2 fastest)
      if (w < 3) break;
      std::size_t i = w - 2;
      while (i >= 1 && counter[i] == side - 1) counter[i--] = 0;
      if (i == 0) break;
      ++counter[i];
      const std::uint32_t old = exps[i];
      const std::uint32_t now = old + 1 == side ? 0 : old + 1;
      exps[i] = now;
      add_row<K>(word.data(), t.row(support[i], step[old]), t);
    }
  }
  return best;
}

template <class Fn>
decltype(auto) dispatch(AddKind kind, Fn&& fn) {
  switch (kind) {
    case AddKind::xor_add:
      return fn(std::integral_constant<AddKind, AddKind::xor_add>{});
    case AddKind::mod_p:
      return fn(std::integral_constant<AddKind, AddKind::mod_p>{});
    default:
      return fn(std::integral_constant<AddKind, AddKind::table>{});
  }
}

std::size_t ceil_div(std::uint64_t a, std::uint64_t b) { return static_cast<std::size_t>((a + b - 1) / b); }

}  // namespace

std::string_view method_name(SearchMethod m) { return m == SearchMethod::exhaustive ? "exhaustive" : "isd"; }

std::optional<SearchMethod> parse_method(std::string_view name) {
  if (name == "exhaustive") return SearchMethod::exhaustive;
  if (name == "isd") return SearchMethod::isd;
  return std::nullopt;
}

std::uint64_t exhaustive_codewords(const ToricCode& code) {
  const std::uint64_t q = code.field().order();
  std::uint64_t total = 0;
  for (std::size_t t = 0; t < code.dimension(); ++t) total = sat_add(total, sat_pow(q, code.dimension() - 1 - t));
  return total;
}

MinDistResult min_distance_exhaustive(const ToricCode& code, const SearchOptions& options) {
  const Basis basis = extract_basis(code);
  const SearchTables t = make_tables(code.field(), basis.rows, basis.dim, code.length());
  const std::uint64_t q = t.q;
  const std::size_t k = basis.dim;
  const std::uint64_t n = code.length();

  std::uint64_t allowed = options.budget / n;
  const std::uint64_t total = exhaustive_codewords(code);
  const bool complete = total <= allowed;
  if (complete) allowed = total;

  // Split each class into ranges of outer Gray steps (one block of q
  // codewords each, or a single codeword for the last class); ranges are
  // processed as independent jobs.
  const std::uint64_t target = std::max<std::uint64_t>(
      std::uint64_t{1} << 12, allowed / q / (std::uint64_t{std::max(1u, options.threads)} * 64 + 1));
  std::vector<GrayRange> ranges;
  std::uint64_t remaining = allowed;
  std::uint64_t visited = 0;
  for (std::size_t lead = 0; lead < k; ++lead) {
    const std::uint64_t per = lead + 1 < k ? q : 1;
    const std::uint64_t size = std::min(lead + 1 < k ? sat_pow(q, k - 2 - lead) : 1, remaining / per);
    if (size == 0) break;
    for (std::uint64_t b = 0; b < size; b += target) ranges.push_back({lead, b, std::min(size, b + target)});
    remaining -= size * per;
    visited += size * per;
  }

  std::vector<ChunkBest> results(ranges.size());
  dispatch(t.kind, [&](auto kind) {
    run_jobs(ranges.size(), options.threads,
             [&](std::size_t i) { results[i] = walk_gray<decltype(kind)::value>(t, ranges[i]); });
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].weight < results[best].weight) best = i;
  }
  MinDistResult r;
  r.method = SearchMethod::exhaustive;
  r.work_count = visited;
  r.exact = complete;
  if (ranges.empty()) {
    r.d = code.length();
    r.lower_bound = 1;
  } else {
    const auto& range = ranges[best];
    const auto pos = results[best].position;
    auto msg = gray_message(k, range.lead, range.begin + (range.lead + 1 < k ? pos / q : 0), t.q);
    if (range.lead + 1 < k) msg[k - 1] = static_cast<std::uint32_t>(pos % q);
    r.d = results[best].weight;
    r.lower_bound = complete ? r.d : 1;
    r.witness = lift_witness(code, basis, msg);
  }
  r.max_zeroes = code.length() - r.d;
  return r;
}

MinDistResult min_distance_isd(const ToricCode& code, const SearchOptions& options) {
  const Basis basis = extract_basis(code);
  const auto& f = code.field();
  const std::size_t k = basis.dim;
  const std::size_t n = code.length();
  if (f.order() > 256) throw CodeError("codeword search supports fields with q <= 256");

  const InformationSet info = choose_information_set(code, basis);

  // Systematic generator: rows r_i with r_i = e_i on the information set.
  std::vector<std::uint32_t> square(k * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) square[r * k + c] = basis.rows[r * n + info.columns[c]];
  }
  // Systematic rows are inv(G_S) * B, so message x has codeword x * inv * B
  // and basis coordinates x * inv.
  const auto inv = invert(f, square, k);
  std::vector<std::uint32_t> systematic(k * n, 0);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t m = 0; m < k; ++m) {
      const auto c = inv[r * k + m];
      if (!c) continue;
      for (std::size_t j = 0; j < n; ++j) {
        systematic[r * n + j] = f.add_raw(systematic[r * n + j], f.mul_raw(c, basis.rows[m * n + j]));
      }
    }
  }
  const SearchTables t = make_tables(f, systematic, k, n);

  MinDistResult result;
  result.method = SearchMethod::isd;
  std::size_t best_weight = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint32_t> best_message;
  std::size_t lower = 1;
  std::uint64_t work = 0;
  bool exact = false;

  for (std::size_t w = 1; w <= k; ++w) {
    const std::uint64_t combos = binomial(k, w);
    // Count canonical supports first so the level's cost is known up front.
    std::uint64_t canonical = combos;
    if (info.group_order > 1) {
      canonical = 0;
      std::vector<std::uint32_t> support, scratch;
      unrank_combination(0, k, w, support);
      do {
        canonical += canonical_support(info, k, support, scratch);
      } while (next_combination(support, k));
    }
    const std::uint64_t level_words = sat_mul(canonical, sat_pow(f.order() - 1, w - 1));
    if (sat_mul(sat_add(work, level_words), n) > options.budget) break;

    const std::uint64_t per = std::max<std::uint64_t>(
        1, combos / (std::uint64_t{std::max(1u, options.threads)} * 32 + 1));
    std::vector<LevelChunk> chunks;
    for (std::uint64_t b = 0; b < combos; b += per) chunks.push_back({b, std::min(combos, b + per)});
    std::vector<LevelBest> results(chunks.size());
    dispatch(t.kind, [&](auto kind) {
      run_jobs(chunks.size(), options.threads,
               [&](std::size_t i) { results[i] = walk_level<decltype(kind)::value>(t, info, w, chunks[i]); });
    });
    work += level_words;

    for (const auto& r : results) {
      if (r.weight < best_weight) {
        best_weight = r.weight;
        best_message.assign(k, 0);
        best_message[r.support[0]] = 1;
        for (std::size_t i = 1; i < w; ++i) best_message[r.support[i]] = f.exp(r.exponents[i]).value;
      }
    }
    lower = std::max(lower, ceil_div(std::uint64_t{n} * (w + 1), k));
    if (w == k || lower >= best_weight) {
      exact = true;
      break;
    }
  }

  result.work_count = work;
  result.exact = exact;
  if (best_message.empty()) {
    result.d = n;
    result.lower_bound = 1;
  } else {
    // Back to the basis: message x in systematic coordinates is x * inv.
    std::vector<std::uint32_t> msg(k, 0);
    for (std::size_t r = 0; r < k; ++r) {
      if (!best_message[r]) continue;
      for (std::size_t m = 0; m < k; ++m) {
        msg[m] = f.add_raw(msg[m], f.mul_raw(best_message[r], inv[r * k + m]));
      }
    }
    result.d = best_weight;
    result.lower_bound = exact ? best_weight : std::min(lower, best_weight);
    result.witness = lift_witness(code, basis, msg);
  }
  result.max_zeroes = n - result.d;
  return result;
}

MinDistResult min_distance(const ToricCode& code, SearchMethod method, const SearchOptions& options) {
  return method == SearchMethod::exhaustive ? min_distance_exhaustive(code, options)
                                            : min_distance_isd(code, options);
}

MinDistResult min_distance(const ToricCode& code, const SearchOptions& options) {
  const bool small = exhaustive_codewords(code) <= kExhaustiveAutoLimit;
  return min_distance(code, small ? SearchMethod::exhaustive : SearchMethod::isd, options);
}

std::size_t max_zeroes(const ToricCode& code, const SearchOptions& options) {
  const auto r = min_distance(code, options);
  if (!r.exact) throw CodeError("minimum distance search exceeded its budget");
  return r.max_zeroes;
}

}  // namespace toricode
