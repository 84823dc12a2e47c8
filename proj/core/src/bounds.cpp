#include "mcsa/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <thread>

namespace mcsa {

namespace {

constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

std::int64_t bound_from_sums(std::int64_t n1, std::int64_t nr, std::int64_t s, std::int64_t p) {
  const std::int64_t socle = n1 * nr;
  return 1 + socle + ceil_div(s * (n1 + nr) + p, socle + 1);
}

// Minimal pairwise-product sum of `parts` positive integers summing to `total`
// (one large part, the rest equal to 1).
std::int64_t min_pair_sum(std::int64_t total, std::int64_t parts) {
  if (parts <= 1) return 0;
  return (parts - 1) * (total - parts + 1) + (parts - 1) * (parts - 2) / 2;
}

// Branch and bound over compositions in lexicographic order. The completion
// bound is exact: for fixed n1 and nr, F is nondecreasing in P, and P is
// minimized by concentrating the free middle mass in one layer.
class CompositionSearch {
 public:
  CompositionSearch(std::int64_t n, std::size_t r) : n_(n), middle_(static_cast<std::int64_t>(r) - 2) {
    prefix_.reserve(r);
  }

  BoundEntry run(std::size_t r) {
    for (std::int64_t n1 = 2; n1 <= n_ - 2 - middle_; ++n1) {
      prefix_.assign(1, n1);
      descend(n1, 0, 0, 0);
    }
    return {r, best_, best_sig_};
  }

 private:
  // Tight lower bound over all completions of the current prefix.
  std::int64_t completion_bound(std::int64_t n1, std::int64_t fixed_sum, std::int64_t fixed_pairs,
                                std::int64_t placed) const {
    const std::int64_t free_parts = middle_ - placed;
    const std::int64_t rem = n_ - n1 - fixed_sum;
    std::int64_t lb = kInfinity;
    const std::int64_t nr_lo = free_parts == 0 ? rem : 2;
    for (std::int64_t nr = nr_lo; nr <= rem - free_parts; ++nr) {
      if (nr < 2) continue;
      const std::int64_t free_sum = rem - nr;
      const std::int64_t p = fixed_pairs + fixed_sum * free_sum + min_pair_sum(free_sum, free_parts);
      lb = std::min(lb, bound_from_sums(n1, nr, fixed_sum + free_sum, p));
    }
    return lb;
  }

  void descend(std::int64_t n1, std::int64_t fixed_sum, std::int64_t fixed_pairs, std::int64_t placed) {
    if (completion_bound(n1, fixed_sum, fixed_pairs, placed) >= best_) return;
    const std::int64_t rem = n_ - n1 - fixed_sum;
    if (placed == middle_) {
      const std::int64_t value = bound_from_sums(n1, rem, fixed_sum, fixed_pairs);
      if (value < best_) {
        best_ = value;
        best_sig_ = prefix_;
        best_sig_.push_back(rem);
      }
      return;
    }
    const std::int64_t later = middle_ - placed - 1;
    for (std::int64_t x = 1; x <= rem - 2 - later; ++x) {
      prefix_.push_back(x);
      descend(n1, fixed_sum + x, fixed_pairs + fixed_sum * x, placed + 1);
      prefix_.pop_back();
    }
  }

  std::int64_t n_;
  std::int64_t middle_;
  Signature prefix_;
  std::int64_t best_ = kInfinity;
  Signature best_sig_;
};

mpz_class pow10(unsigned k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
  return p;
}

}  // namespace

std::string signature_to_string(std::span<const std::int64_t> sig) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < sig.size(); ++i) os << (i ? "," : "") << sig[i];
  os << ')';
  return os.str();
}

std::int64_t f3(std::int64_t n1, std::int64_t n2, std::int64_t n3) {
  if (n1 < 1 || n2 < 1 || n3 < 1) throw BoundsError("f3: layers must be positive");
  return bound_from_sums(n1, n3, n2, 0);
}

std::int64_t f4(std::int64_t n1, std::int64_t n2, std::int64_t n3, std::int64_t n4) {
  if (n1 < 1 || n2 < 1 || n3 < 1 || n4 < 1) throw BoundsError("f4: layers must be positive");
  return bound_from_sums(n1, n4, n2 + n3, n2 * n3);
}

SignatureBound f_general(std::span<const std::int64_t> sig, std::size_t r) {
  if (r < 3) throw BoundsError("f_general: nilpotency degree must be at least 3");
  if (sig.size() != r) {
    throw BoundsError("f_general: signature length " + std::to_string(sig.size()) + " != r = " + std::to_string(r));
  }
  if (std::any_of(sig.begin(), sig.end(), [](std::int64_t x) { return x < 1; })) {
    throw BoundsError("f_general: layers must be positive");
  }
  SignatureBound b;
  b.r = r;
  b.signature.assign(sig.begin(), sig.end());
  for (std::size_t i = 1; i + 1 < r; ++i) {
    b.P += b.S * sig[i];
    b.S += sig[i];
  }
  b.value = bound_from_sums(sig.front(), sig.back(), b.S, b.P);
  return b;
}

BoundEntry d_r(std::int64_t n, std::size_t r) {
  if (r < 3) throw BoundsError("d_r: nilpotency degree must be at least 3");
  if (n < static_cast<std::int64_t>(r) + 2) {
    throw BoundsError("d_r: n = " + std::to_string(n) + " admits no signature of length " + std::to_string(r) +
                      " with outer layers >= 2");
  }
  return CompositionSearch(n, r).run(r);
}

ExceptionalPoint first_exceptional(std::size_t r, std::int64_t cap) {
  if (r < 3 || r > 8) throw BoundsError("first_exceptional: r must lie in 3..8");
  for (std::int64_t n = static_cast<std::int64_t>(r) + 2; n <= cap; ++n) {
    auto e = d_r(n, r);
    if (e.value < n) return {n, e.value, std::move(e.argmin)};
  }
  throw BoundsError("first_exceptional: no exceptional n <= " + std::to_string(cap) + " for r = " +
                    std::to_string(r));
}

Enclosure two_thirds_power(std::uint64_t x, unsigned digits) {
  mpz_class scale = pow10(digits);
  mpz_class sq = mpz_class(static_cast<unsigned long>(x)) * static_cast<unsigned long>(x);
  mpz_class target = sq * scale * scale * scale;
  mpz_class root;
  const bool exact = mpz_root(root.get_mpz_t(), target.get_mpz_t(), 3) != 0;
  Enclosure e;
  e.lower = mpq_class(root, scale);
  e.lower.canonicalize();
  e.upper = exact ? e.lower : mpq_class(root + 1, scale);
  e.upper.canonicalize();
  return e;
}

Enclosure laffey_bound(std::int64_t n) {
  if (n < 1) throw BoundsError("laffey_bound: n must be positive");
  Enclosure e = two_thirds_power(static_cast<std::uint64_t>(2 * n), 12);
  e.lower -= 1;
  e.upper -= 1;
  return e;
}

std::int64_t laffey_floor(std::int64_t n) {
  if (n < 1) throw BoundsError("laffey_floor: n must be positive");
  mpz_class sq = mpz_class(static_cast<unsigned long>(2 * n)) * static_cast<unsigned long>(2 * n);
  mpz_class root;
  mpz_root(root.get_mpz_t(), sq.get_mpz_t(), 3);
  return root.get_si() - 1;
}

std::string to_decimal(const mpq_class& q, unsigned digits) {
  const bool negative = sgn(q) < 0;
  const mpq_class a = negative ? mpq_class(-q) : q;
  const mpz_class scale = pow10(digits);
  mpq_class shifted = a * scale + mpq_class(1, 2);
  mpz_class units;
  mpz_fdiv_q(units.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  mpz_class whole;
  mpz_class frac;
  mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), units.get_mpz_t(), scale.get_mpz_t());
  std::string out = (negative && units != 0 ? "-" : "") + whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += '.';
    out += std::string(digits - f.size(), '0');
    out += f;
  }
  return out;
}

std::int64_t deg2_min_dim(std::int64_t n) {
  if (n < 2) throw BoundsError("deg2_min_dim: n must be at least 2");
  std::int64_t best = kInfinity;
  for (std::int64_t a = 1; a < n; ++a) best = std::min(best, 1 + a * (n - a));
  return best;
}

BoundReport bound_row(std::int64_t n, std::span<const std::size_t> r_set) {
  BoundReport row;
  row.n = n;
  row.trivial = n;
  row.laffey = laffey_bound(n);
  for (auto r : r_set) {
    if (r < 3) throw BoundsError("bound_row: r must be at least 3");
    if (n >= static_cast<std::int64_t>(r) + 2) {
      row.per_r.emplace_back(d_r(n, r));
    } else {
      row.per_r.emplace_back(std::nullopt);
    }
  }
  return row;
}

std::vector<BoundReport> bound_table(std::int64_t n_min, std::int64_t n_max, std::span<const std::size_t> r_set,
                                     unsigned jobs) {
  if (n_min > n_max) throw BoundsError("bound_table: n_min > n_max");
  if (n_min < 1) throw BoundsError("bound_table: n must be positive");
  // Validate here: an exception escaping a worker thread would terminate.
  for (auto r : r_set) {
    if (r < 3) throw BoundsError("bound_table: r must be at least 3");
  }
  const auto count = static_cast<std::size_t>(n_max - n_min + 1);
  std::vector<BoundReport> rows(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) rows[i] = bound_row(n_min + static_cast<std::int64_t>(i), r_set);
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return rows;
}

}  // namespace mcsa
