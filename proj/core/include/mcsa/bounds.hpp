#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mcsa {

/// Raised for infeasible or malformed bound queries.
class BoundsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Signature = std::vector<std::int64_t>;

/// "(2,10,2)"
std::string signature_to_string(std::span<const std::int64_t> sig);

/// ceil(a / b) for a >= 0, b > 0.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

/// Lower bound on dim A for a local maximal commutative algebra with the given
/// Loewy signature, together with the middle-layer sums it is built from:
/// S = sum of middle layers, P = sum of pairwise products of middle layers.
struct SignatureBound {
  std::size_t r = 0;
  Signature signature;
  std::int64_t value = 0;
  std::int64_t S = 0;
  std::int64_t P = 0;
};

/// 1 + n1 n3 + ceil(n2 (n1 + n3) / (n1 n3 + 1)).
std::int64_t f3(std::int64_t n1, std::int64_t n2, std::int64_t n3);

/// 1 + n1 n4 + ceil(((n2 + n3)(n1 + n4) + n2 n3) / (n1 n4 + 1)).
std::int64_t f4(std::int64_t n1, std::int64_t n2, std::int64_t n3, std::int64_t n4);

/// 1 + n1 nr + ceil((S (n1 + nr) + P) / (n1 nr + 1)). Requires r >= 3,
/// sig.size() == r and all layers >= 1.
SignatureBound f_general(std::span<const std::int64_t> sig, std::size_t r);

/// Minimum of f_general over compositions of n into r parts with both outer
/// layers >= 2, plus the lexicographically smallest minimizing signature.
struct BoundEntry {
  std::size_t r = 0;
  std::int64_t value = 0;
  Signature argmin;
};

/// Throws BoundsError when r < 3 or n < r + 2.
BoundEntry d_r(std::int64_t n, std::size_t r);

struct ExceptionalPoint {
  std::int64_t n = 0;
  std::int64_t value = 0;
  Signature argmin;
};

constexpr std::int64_t kDefaultSearchCap = 200;

/// Smallest n <= cap with d_r(n, r) < n. Requires 3 <= r <= 8; throws
/// BoundsError when no such n exists below the cap.
ExceptionalPoint first_exceptional(std::size_t r, std::int64_t cap = kDefaultSearchCap);

/// Rational enclosure [lower, upper] of a real number; exact when lower == upper.
struct Enclosure {
  mpq_class lower;
  mpq_class upper;

  bool exact() const { return lower == upper; }
  mpq_class width() const { return upper - lower; }
  mpq_class midpoint() const { return (lower + upper) / 2; }
};

/// Enclosure of x^{2/3} for x >= 0, of width at most 10^-digits.
Enclosure two_thirds_power(std::uint64_t x, unsigned digits = 12);

/// Enclosure of (2n)^{2/3} - 1, width < 1e-9; exact when 2n is a perfect cube.
Enclosure laffey_bound(std::int64_t n);

/// floor((2n)^{2/3} - 1), exact.
std::int64_t laffey_floor(std::int64_t n);

/// Fixed-point decimal rendering of q rounded half-up to `digits` places.
std::string to_decimal(const mpq_class& q, unsigned digits);

/// min over a + b = n, a, b >= 1 of 1 + ab (the radical-square-zero case). Requires n >= 2.
std::int64_t deg2_min_dim(std::int64_t n);

/// One row of the signature-free comparison table.
struct BoundReport {
  std::int64_t n = 0;
  /// One slot per requested r, in request order; empty when n < r + 2.
  std::vector<std::optional<BoundEntry>> per_r;
  Enclosure laffey;
  std::int64_t trivial = 0;
};

BoundReport bound_row(std::int64_t n, std::span<const std::size_t> r_set);

/// Rows n_min..n_max in increasing n. Rows are independent and computed on
/// up to `jobs` threads.
std::vector<BoundReport> bound_table(std::int64_t n_min, std::int64_t n_max, std::span<const std::size_t> r_set,
                                     unsigned jobs = 1);

}  // namespace mcsa
