#include "mcsa/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mcsa/echelon.hpp"
#include "mcsa/linalg.hpp"

namespace mcsa {

namespace {

void require_square_family(std::size_t n, const std::vector<RationalMatrix>& mats) {
  for (const auto& m : mats) {
    if (m.rows() != n || m.cols() != n) {
      throw DimensionError("MatrixAlgebra: expected " + std::to_string(n) + "x" + std::to_string(n) + " matrices");
    }
  }
}

RowEchelon span_echelon(const MatrixAlgebra& a) {
  const std::size_t n = a.ambient_size();
  RowEchelon e(n * n);
  for (const auto& b : a.basis()) e.add_row(b.entries());
  return e;
}

// Integer rows of X -> BX - XB (vec column-major), one per output entry (i, j).
void append_commutator_rows(const RationalMatrix& b, RowEchelon& system) {
  const std::size_t n = b.rows();
  mpz_class lcm = 1;
  for (const auto& x : b.entries()) {
    if (!x.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.value().get_den_mpz_t());
  }
  std::vector<mpz_class> scaled(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    const mpq_class& q = b.entries()[k].value();
    scaled[k] = lcm / q.get_den() * q.get_num();
  }
  auto at = [&](std::size_t r, std::size_t c) -> const mpz_class& { return scaled[r * n + c]; };

  std::vector<std::pair<std::uint32_t, mpz_class>> terms;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      terms.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (at(i, k) != 0) terms.emplace_back(static_cast<std::uint32_t>(k + n * j), at(i, k));
        if (at(k, j) != 0) terms.emplace_back(static_cast<std::uint32_t>(i + n * k), -at(k, j));
      }
      if (terms.empty()) continue;
      std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      SparseRow row;
      for (auto& [col, v] : terms) {
        if (!row.empty() && row.back().col == col) {
          row.back().value += v;
          if (row.back().value == 0) row.pop_back();
        } else {
          row.push_back({col, std::move(v)});
        }
      }
      if (!row.empty()) system.add_row(std::move(row));
    }
  }
}

bool is_scalar(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && !m(i, j).is_zero()) return false;
      if (i == j && m(i, i) != m(0, 0)) return false;
    }
  }
  return true;
}

}  // namespace

MatrixAlgebra::MatrixAlgebra(std::size_t n, const std::vector<RationalMatrix>& spanning) : n_(n) {
  if (n == 0) throw DimensionError("MatrixAlgebra: ambient size must be positive");
  require_square_family(n, spanning);
  RowEchelon e(n * n);
  for (const auto& m : spanning) {
    if (e.add_row(m.entries())) basis_.push_back(m);
  }
  contains_identity_ = !e.is_independent(RationalMatrix::identity(n).entries());
}

std::size_t LoewySignature::total() const { return std::accumulate(layers.begin(), layers.end(), std::size_t{0}); }

std::string LoewySignature::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < layers.size(); ++i) os << (i ? "," : "") << layers[i];
  os << ')';
  return os.str();
}

std::size_t dimension(const MatrixAlgebra& a) { return a.dimension(); }

RationalMatrix commutator_operator(const RationalMatrix& b) {
  if (!b.is_square()) throw DimensionError("commutator_operator: matrix is not square");
  const auto id = RationalMatrix::identity(b.rows());
  return kronecker(id, b) - kronecker(b.transpose(), id);
}

MatrixAlgebra centralizer(const MatrixAlgebra& a) {
  const std::size_t n = a.ambient_size();
  // Sparse generators first: socle-type matrix units pin most unknowns with
  // one- and two-term equations before the denser generators arrive.
  std::vector<const RationalMatrix*> order;
  for (const auto& b : a.basis()) {
    if (!is_scalar(b)) order.push_back(&b);
  }
  std::stable_sort(order.begin(), order.end(), [](const RationalMatrix* x, const RationalMatrix* y) {
    return x->nonzero_count() < y->nonzero_count();
  });

  RowEchelon system(n * n);
  for (const auto* b : order) {
    append_commutator_rows(*b, system);
    if (system.nullity() == 1) break;  // only the scalars remain
  }
  std::vector<RationalMatrix> mats;
  for (const auto& v : system.nullspace()) mats.push_back(RationalMatrix::from_vec(v, n));
  return MatrixAlgebra(n, mats);
}

bool is_commutative(const MatrixAlgebra& a) {
  const auto& b = a.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (matmul(b[i], b[j]) != matmul(b[j], b[i])) return false;
    }
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> first_unclosed_product(const MatrixAlgebra& a) {
  const auto e = span_echelon(a);
  const auto& b = a.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto p = matmul(b[i], b[j]);
      if (!p.is_zero() && e.is_independent(p.entries())) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

bool is_closed(const MatrixAlgebra& a) { return !first_unclosed_product(a).has_value(); }

bool is_maximal_commutative(const MatrixAlgebra& a) {
  if (!is_commutative(a)) return false;
  const auto c = centralizer(a);
  if (c.dimension() != a.dimension()) return false;
  // A is inside C(A) for commutative A; equal dimensions must mean equal spans.
  const auto e = span_echelon(c);
  for (const auto& b : a.basis()) {
    if (e.is_independent(b.entries())) {
      throw AlgebraError("is_maximal_commutative: commutative algebra not contained in its centralizer");
    }
  }
  return true;
}

std::vector<RationalMatrix> radical(const MatrixAlgebra& a) {
  if (!a.contains_identity()) throw AlgebraError("radical: algebra does not contain the identity");
  const auto& b = a.basis();
  const std::size_t d = b.size();
  const std::size_t n = a.ambient_size();
  RationalMatrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Rational t;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          if (!b[i](r, c).is_zero() && !b[j](c, r).is_zero()) t += b[i](r, c) * b[j](c, r);
        }
      }
      gram(i, j) = t;
      gram(j, i) = t;
    }
  }
  std::vector<RationalMatrix> rad;
  for (const auto& coeffs : nullspace_basis(gram)) {
    auto x = combine(coeffs.entries(), b);
    if (!power(x, n).is_zero()) {
      throw AlgebraError("radical: trace-form kernel element is not nilpotent (input not a closed algebra?)");
    }
    rad.push_back(std::move(x));
  }
  return rad;
}

bool is_local(const MatrixAlgebra& a) { return a.dimension() - radical(a).size() == 1; }

std::vector<SubspaceBasis> loewy_filtration(const MatrixAlgebra& a) {
  const auto rad = radical(a);
  if (a.dimension() - rad.size() != 1) throw AlgebraError("loewy_filtration: algebra is not local");
  const std::size_t n = a.ambient_size();

  std::vector<SubspaceBasis> chain;
  SubspaceBasis current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(RationalMatrix::unit(n, 1, i, 0));
  chain.push_back(current);
  while (!current.empty()) {
    SubspaceBasis images;
    for (const auto& r : rad) {
      for (const auto& v : current) {
        auto w = matmul(r, v);
        if (!w.is_zero()) images.push_back(std::move(w));
      }
    }
    current = column_space_basis(images, n);
    if (current.size() >= chain.back().size()) {
      throw AlgebraError("loewy_filtration: radical powers do not decrease");
    }
    chain.push_back(current);
  }
  return chain;
}

LoewySignature loewy_signature(const std::vector<SubspaceBasis>& filtration) {
  LoewySignature sig;
  for (std::size_t i = 1; i < filtration.size(); ++i) {
    sig.layers.push_back(filtration[i - 1].size() - filtration[i].size());
  }
  return sig;
}

LoewySignature loewy_signature(const MatrixAlgebra& a) { return loewy_signature(loewy_filtration(a)); }

std::size_t nilpotency_degree(const MatrixAlgebra& a) { return loewy_signature(a).length(); }

bool spans_equal(const MatrixAlgebra& a, const MatrixAlgebra& b) {
  if (a.ambient_size() != b.ambient_size() || a.dimension() != b.dimension()) return false;
  const auto e = span_echelon(a);
  for (const auto& m : b.basis()) {
    if (e.is_independent(m.entries())) return false;
  }
  return true;
}

MatrixAlgebra conjugate(const MatrixAlgebra& a, const RationalMatrix& p, const RationalMatrix& p_inverse) {
  const std::size_t n = a.ambient_size();
  if (p.rows() != n || p.cols() != n || p_inverse.rows() != n || p_inverse.cols() != n) {
    throw DimensionError("conjugate: conjugator has the wrong size");
  }
  if (matmul(p, p_inverse) != RationalMatrix::identity(n)) {
    throw std::invalid_argument("conjugate: p_inverse is not the inverse of p");
  }
  std::vector<RationalMatrix> mats;
  for (const auto& b : a.basis()) mats.push_back(matmul(matmul(p_inverse, b), p));
  return MatrixAlgebra(n, mats);
}

MatrixAlgebra direct_sum(const MatrixAlgebra& a1, const MatrixAlgebra& a2) {
  const std::size_t n1 = a1.ambient_size();
  const std::size_t n2 = a2.ambient_size();
  std::vector<RationalMatrix> mats;
  for (const auto& b : a1.basis()) mats.push_back(direct_sum(b, RationalMatrix::zeros(n2, n2)));
  for (const auto& b : a2.basis()) mats.push_back(direct_sum(RationalMatrix::zeros(n1, n1), b));
  return MatrixAlgebra(n1 + n2, mats);
}

}  // namespace mcsa
