#include "mcsa/bricks.hpp"

#include "mcsa/bounds.hpp"
#include "mcsa/linalg.hpp"

namespace mcsa {

namespace {

std::string shape(const RationalMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

RationalMatrix pad_rows(const RationalMatrix& m, std::size_t above, std::size_t below) {
  RationalMatrix out(above + m.rows() + below, m.cols());
  out.set_block(above, 0, m);
  return out;
}

RationalMatrix pad_cols(const RationalMatrix& m, std::size_t left, std::size_t right) {
  RationalMatrix out(m.rows(), left + m.cols() + right);
  out.set_block(0, left, m);
  return out;
}

void require_courter_range(std::int64_t n) {
  if (n < 14) throw BrickError("Courter-like construction needs n >= 14, got " + std::to_string(n));
}

}  // namespace

BrickForm::BrickForm(std::size_t n1, std::size_t s, std::size_t n3, std::vector<BrickGenerator> generators)
    : n1_(n1), s_(s), n3_(n3), generators_(std::move(generators)) {
  if (n1_ == 0 || s_ == 0 || n3_ == 0) throw BrickError("BrickForm: layer sizes must be positive");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.top_to_middle.rows() != s_ || g.top_to_middle.cols() != n1_) {
      throw BrickError("BrickForm: generator " + std::to_string(i) + " has A of shape " + shape(g.top_to_middle));
    }
    if (g.middle_to_bottom.rows() != n3_ || g.middle_to_bottom.cols() != s_) {
      throw BrickError("BrickForm: generator " + std::to_string(i) + " has B of shape " +
                       shape(g.middle_to_bottom));
    }
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (matmul(generators_[i].middle_to_bottom, generators_[j].top_to_middle) !=
          matmul(generators_[j].middle_to_bottom, generators_[i].top_to_middle)) {
        throw BrickError("BrickForm: B_" + std::to_string(i) + " A_" + std::to_string(j) + " != B_" +
                         std::to_string(j) + " A_" + std::to_string(i));
      }
    }
  }
}

BrickForm brick_e() {
  std::vector<BrickGenerator> g{
      {RationalMatrix{{1, -1}, {0, 0}, {-1, 0}, {1, 0}, {0, -1}},
       RationalMatrix{{0, 0, 1, 0, 0}, {1, 0, -1, -1, 0}}},
      {RationalMatrix{{0, 0}, {0, 1}, {0, 0}, {0, 1}, {-1, 2}},
       RationalMatrix{{-1, 0, 0, 1, 1}, {-1, 0, 1, 2, 2}}},
      {RationalMatrix{{1, 0}, {0, 1}, {0, 1}, {0, -1}, {1, 0}},
       RationalMatrix{{-1, -1, -1, 0, 0}, {1, 0, 1, 1, -1}}},
      {RationalMatrix{{0, 1}, {-1, -1}, {0, -1}, {0, 2}, {0, 0}},
       RationalMatrix{{1, 0, 2, 1, 0}, {0, 2, 0, 0, 0}}},
  };
  return BrickForm(2, 5, 2, std::move(g));
}

BrickForm brick_d() { return BrickForm(2, 1, 2, {{RationalMatrix{{1, 0}}, RationalMatrix{{0}, {1}}}}); }

BrickForm brick_d_appendix() { return BrickForm(2, 1, 2, {{RationalMatrix{{1, 0}}, RationalMatrix{{1}, {0}}}}); }

MatrixAlgebra realize(const BrickForm& b) {
  const std::size_t n = b.ambient_size();
  const std::size_t mid = b.n1();
  const std::size_t bottom = b.n1() + b.s();
  std::vector<RationalMatrix> span;
  span.push_back(RationalMatrix::identity(n));
  for (const auto& g : b.generators()) {
    RationalMatrix x(n, n);
    x.set_block(mid, 0, g.top_to_middle);
    x.set_block(bottom, mid, g.middle_to_bottom);
    span.push_back(std::move(x));
  }
  for (std::size_t a = 0; a < b.n3(); ++a) {
    for (std::size_t c = 0; c < b.n1(); ++c) span.push_back(RationalMatrix::unit(n, n, bottom + a, c));
  }
  return MatrixAlgebra(n, span);
}

BrickForm stack(const BrickForm& b1, const BrickForm& b2) {
  if (b1.n1() != b2.n1() || b1.n3() != b2.n3()) {
    throw BrickError("stack: outer layers differ (" + std::to_string(b1.n1()) + "," + std::to_string(b1.n3()) +
                     ") vs (" + std::to_string(b2.n1()) + "," + std::to_string(b2.n3()) + ")");
  }
  std::vector<BrickGenerator> gens;
  for (const auto& g : b1.generators()) {
    gens.push_back({pad_rows(g.top_to_middle, 0, b2.s()), pad_cols(g.middle_to_bottom, 0, b2.s())});
  }
  for (const auto& g : b2.generators()) {
    gens.push_back({pad_rows(g.top_to_middle, b1.s(), 0), pad_cols(g.middle_to_bottom, b1.s(), 0)});
  }
  return BrickForm(b1.n1(), b1.s() + b2.s(), b1.n3(), std::move(gens));
}

RationalMatrix mixed_rigidity_system(const BrickForm& p, const BrickForm& q) {
  const std::size_t sp = p.s();
  const std::size_t sq = q.s();
  const auto var = [sq](std::size_t row, std::size_t col) { return row * sq + col; };
  std::vector<std::vector<Rational>> eqs;

  // (T A)_{a,b} = sum_c t_{a,c} A_{c,b}
  for (const auto& g : q.generators()) {
    const auto& a = g.top_to_middle;
    for (std::size_t r = 0; r < sp; ++r) {
      for (std::size_t b = 0; b < a.cols(); ++b) {
        std::vector<Rational> eq(sp * sq);
        for (std::size_t c = 0; c < sq; ++c) eq[var(r, c)] = a(c, b);
        eqs.push_back(std::move(eq));
      }
    }
  }
  // (B T)_{a,b} = sum_c B_{a,c} t_{c,b}
  for (const auto& g : p.generators()) {
    const auto& bm = g.middle_to_bottom;
    for (std::size_t r = 0; r < bm.rows(); ++r) {
      for (std::size_t b = 0; b < sq; ++b) {
        std::vector<Rational> eq(sp * sq);
        for (std::size_t c = 0; c < sp; ++c) eq[var(c, b)] = bm(r, c);
        eqs.push_back(std::move(eq));
      }
    }
  }
  std::vector<Rational> flat;
  flat.reserve(eqs.size() * sp * sq);
  for (auto& e : eqs) flat.insert(flat.end(), e.begin(), e.end());
  return {eqs.size(), sp * sq, std::move(flat)};
}

std::size_t mixed_rigidity_rank(const BrickForm& p, const BrickForm& q) { return rank(mixed_rigidity_system(p, q)); }

std::string StackSpec::label() const {
  auto part = [](const char* name, std::size_t k) {
    return k == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(k);
  };
  std::string out;
  if (e_count > 0) out += part("E", e_count);
  if (d_count > 0) out += (out.empty() ? "" : "*") + part("D", d_count);
  return out;
}

BrickForm stacked_form(const StackSpec& spec) {
  if (spec.e_count + spec.d_count == 0) throw BrickError("StackSpec: at least one brick is required");
  std::vector<BrickForm> parts;
  for (std::size_t i = 0; i < spec.e_count; ++i) parts.push_back(brick_e());
  for (std::size_t i = 0; i < spec.d_count; ++i) parts.push_back(brick_d());
  BrickForm acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = stack(acc, parts[i]);
  return acc;
}

MatrixAlgebra build_stacked(const StackSpec& spec) { return realize(stacked_form(spec)); }

StackSpec courter_spec(std::int64_t n) {
  require_courter_range(n);
  return {static_cast<std::size_t>((n - 4) / 5), static_cast<std::size_t>((n - 4) % 5)};
}

MatrixAlgebra build_courter(std::int64_t n) { return build_stacked(courter_spec(n)); }

std::int64_t courter_dim(std::int64_t n) {
  require_courter_range(n);
  return 5 + ceil_div(4 * (n - 4), 5);
}

}  // namespace mcsa
