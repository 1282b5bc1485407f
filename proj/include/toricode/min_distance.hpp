#ifndef TORICODE_MIN_DISTANCE_HPP
#define TORICODE_MIN_DISTANCE_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "toricode/toric_code.hpp"

namespace toricode {

enum class SearchMethod { exhaustive, isd };

std::string_view method_name(SearchMethod m);
std::optional<SearchMethod> parse_method(std::string_view name);

/// Default work cap, in codeword-symbol operations (codewords x N).
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 34;

struct SearchOptions {
  unsigned threads = 1;
  std::uint64_t budget = kDefaultBudget;
};

struct MinDistResult {
  /// Minimum distance when exact, otherwise the best weight found.
  std::size_t d = 0;
  /// Proven lower bound; equals d when exact.
  std::size_t lower_bound = 0;
  /// N - d.
  std::size_t max_zeroes = 0;
  /// Message (one coefficient per monomial, first nonzero equal to one)
  /// whose codeword has weight d.
  std::vector<FieldElement> witness;
  SearchMethod method = SearchMethod::exhaustive;
  bool exact = false;
  /// Codewords examined.
  std::uint64_t work_count = 0;
};

/// Walks every message with leading coefficient one, (q^k - 1)/(q - 1) of
/// them, in Gray-code order so consecutive codewords differ by one scaled
/// generator row. The witness is the first minimum in that order. When the
/// budget cannot cover the whole walk, the walk is truncated and the result
/// is an upper bound only.
MinDistResult min_distance_exhaustive(const ToricCode& code, const SearchOptions& options = {});

/// Information-set search. Messages are enumerated by increasing weight on
/// one information set S. Torus translations permute coordinates and map the
/// code onto itself, so once every codeword with at most w nonzeros on S is
/// seen, any unseen codeword has weight >= N(w+1)/k. Lattice symmetries of P
/// also act on positions; when S is a union of orbits of a group H built from
/// those and translations, supports are enumerated only up to H. Stops when
/// the bound reaches the lightest codeword found.
MinDistResult min_distance_isd(const ToricCode& code, const SearchOptions& options = {});

/// Exhaustive for small message spaces, information sets otherwise.
MinDistResult min_distance(const ToricCode& code, const SearchOptions& options = {});
MinDistResult min_distance(const ToricCode& code, SearchMethod method, const SearchOptions& options = {});

/// Z_P = N - d(C_P); throws if the search could not be completed exactly.
std::size_t max_zeroes(const ToricCode& code, const SearchOptions& options = {});

/// Number of codewords the exhaustive walk visits, saturating at 2^64 - 1.
std::uint64_t exhaustive_codewords(const ToricCode& code);

}  // namespace toricode

#endif  // TORICODE_MIN_DISTANCE_HPP
