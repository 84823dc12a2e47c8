#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "certificate.hpp"
#include "document.hpp"
#include "mcsa/bounds.hpp"

namespace mcsa::cli {

namespace {

using nlohmann::ordered_json;

/// Header plus rows of JSON cells, rendered as CSV, aligned text or a JSON array.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<ordered_json>> rows;
};

std::string cell_text(const ordered_json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void render(const Table& t, Format format, std::ostream& os) {
  switch (format) {
    case Format::kCsv: {
      for (std::size_t c = 0; c < t.header.size(); ++c) os << (c ? "," : "") << csv_field(t.header[c]);
      os << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(cell_text(row[c]));
        os << '\n';
      }
      break;
    }
    case Format::kJson: {
      ordered_json arr = ordered_json::array();
      for (const auto& row : t.rows) {
        ordered_json obj;
        for (std::size_t c = 0; c < row.size(); ++c) obj[t.header[c]] = row[c];
        arr.push_back(std::move(obj));
      }
      os << arr.dump(2) << '\n';
      break;
    }
    case Format::kText: {
      std::vector<std::size_t> width(t.header.size());
      for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
      for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], cell_text(row[c]).size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          os << (c ? "  " : "") << cells[c];
          if (c + 1 < cells.size()) os << std::string(width[c] - cells[c].size(), ' ');
        }
        os << '\n';
      };
      line(t.header);
      for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (const auto& v : row) cells.push_back(cell_text(v));
        line(cells);
      }
      break;
    }
  }
}

void render_certificate(const Certificate& c, Format format, std::ostream& os) {
  const auto j = to_json(c);
  if (format == Format::kJson) {
    os << j.dump(2) << '\n';
    return;
  }
  Table t;
  std::vector<ordered_json> row;
  for (const auto& [key, value] : j.items()) {
    t.header.push_back(key);
    row.push_back(value.is_array() ? ordered_json(c.loewy_signature->to_string()) : value);
  }
  t.rows.push_back(std::move(row));
  if (format == Format::kCsv) {
    render(t, format, os);
  } else {
    for (std::size_t k = 0; k < t.header.size(); ++k) os << t.header[k] << ": " << cell_text(t.rows[0][k]) << '\n';
  }
}

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

ordered_json signature_cell(const Signature& sig) { return signature_to_string(sig); }

}  // namespace

const std::vector<StackTableRow>& reference_stack_table() {
  static const std::vector<StackTableRow> rows{
      {14, 13, {2, 0}, 13}, {15, 14, {2, 1}, 14}, {16, 15, {2, 2}, 15}, {17, 16, {2, 3}, 16},
      {18, 17, {2, 4}, 17}, {19, 17, {3, 0}, 17}, {20, 18, {3, 1}, 18}, {21, 19, {3, 2}, 19},
      {22, 20, {3, 3}, 20}, {23, 21, {3, 4}, 21}, {24, 21, {4, 0}, 21}, {25, 22, {4, 1}, 22},
      {26, 23, {4, 2}, 23}, {27, 24, {4, 3}, 24}, {28, 25, {4, 4}, 25},
  };
  return rows;
}

const std::vector<RigidityExpectation>& reference_rigidity_ranks() {
  static const std::vector<RigidityExpectation> rows{
      {"(E,E)", 25, 25}, {"(E,D)", 5, 5}, {"(D,E)", 5, 5}, {"(D,D)", 1, 1}};
  return rows;
}

std::optional<MatrixAlgebra> builtin_algebra(const std::string& name) {
  if (name == "e") return realize(brick_e());
  if (name == "d") return realize(brick_d());
  if (name == "d-appendix") return realize(brick_d_appendix());
  return std::nullopt;
}

int cmd_verify(const std::string& input, const Context& ctx) {
  std::optional<MatrixAlgebra> algebra = builtin_algebra(input);
  std::string name = input;
  if (!algebra) {
    try {
      const auto doc = load_document(input);
      algebra = to_algebra(doc);
      if (!doc.name.empty()) name = doc.name;
    } catch (const DocumentError& ex) {
      *ctx.err << "error: " << ex.what() << '\n';
      return kExitUsage;
    }
  }
  if (!algebra->contains_identity()) {
    *ctx.err << "error: span does not contain the identity\n";
    return kExitSemantic;
  }
  if (const auto bad = first_unclosed_product(*algebra)) {
    *ctx.err << "error: span is not closed: basis[" << bad->first << "] * basis[" << bad->second
             << "] lies outside the span\n";
    return kExitSemantic;
  }
  const auto cert = certify(*algebra, name, true);
  render_certificate(cert, ctx.format, *ctx.out);
  return cert.maximal_commutative.value_or(false) ? kExitOk : kExitNegative;
}

int cmd_courter(std::int64_t n, std::optional<bool> verify, const std::optional<std::string>& emit,
                const Context& ctx) {
  if (n < 14) {
    *ctx.err << "error: Courter-like construction needs n >= 14, got " << n << '\n';
    return kExitUsage;
  }
  const auto spec = courter_spec(n);
  const auto algebra = build_stacked(spec);
  const bool run = verify.value_or(n <= kDefaultVerifyLimit);
  const std::string name = "A_" + std::to_string(n) + " = " + spec.label();
  if (emit) {
    std::ofstream f(*emit);
    if (!f) {
      *ctx.err << "error: cannot write '" << *emit << "'\n";
      return kExitUsage;
    }
    f << serialize_document(document_from_algebra(algebra, name));
  }
  const auto cert = certify(algebra, name, run);
  render_certificate(cert, ctx.format, *ctx.out);
  return cert.maximal_commutative.value_or(true) ? kExitOk : kExitNegative;
}

int cmd_bounds(std::int64_t n_min, std::int64_t n_max, const std::vector<std::size_t>& rs, const Context& ctx) {
  if (n_min < 1 || n_min > n_max) {
    *ctx.err << "error: need 1 <= n-min <= n-max\n";
    return kExitUsage;
  }
  for (auto r : rs) {
    if (r < 3 || r > 8) {
      *ctx.err << "error: r must lie in 3..8, got " << r << '\n';
      return kExitUsage;
    }
  }
  const auto rows = bound_table(n_min, n_max, rs, ctx.jobs);
  Table t;
  t.header.push_back("n");
  for (auto r : rs) {
    t.header.push_back("D" + std::to_string(r));
    t.header.push_back("argmin" + std::to_string(r));
  }
  t.header.push_back("laffey");
  t.header.push_back("trivial");
  for (const auto& row : rows) {
    std::vector<ordered_json> cells{row.n};
    for (const auto& entry : row.per_r) {
      if (entry) {
        cells.emplace_back(entry->value);
        cells.push_back(signature_cell(entry->argmin));
      } else {
        cells.emplace_back(nullptr);
        cells.emplace_back(nullptr);
      }
    }
    cells.emplace_back(to_decimal(row.laffey.midpoint(), 9));
    cells.emplace_back(row.trivial);
    t.rows.push_back(std::move(cells));
  }
  render(t, ctx.format, *ctx.out);
  return kExitOk;
}

int cmd_first_exceptional(const std::vector<std::size_t>& rs, std::int64_t cap, const Context& ctx) {
  Table t{{"r", "n", "D_r", "argmin"}, {}};
  for (auto r : rs) {
    try {
      const auto p = first_exceptional(r, cap);
      t.rows.push_back({r, p.n, p.value, signature_cell(p.argmin)});
    } catch (const BoundsError& ex) {
      *ctx.err << "error: " << ex.what() << '\n';
      return kExitUsage;
    }
  }
  render(t, ctx.format, *ctx.out);
  return kExitOk;
}

int cmd_table1(const Context& ctx) {
  const auto& ref = reference_stack_table();
  struct Computed {
    BoundEntry bound;
    StackSpec spec;
    std::size_t dim = 0;
    bool verified = false;
  };
  std::vector<Computed> computed(ref.size());
  parallel_for(ref.size(), ctx.jobs, [&](std::size_t i) {
    const std::int64_t n = ref[i].n;
    Computed c;
    c.bound = d_r(n, 3);
    c.spec = courter_spec(n);
    const auto a = build_stacked(c.spec);
    c.dim = a.dimension();
    c.verified = is_maximal_commutative(a);
    computed[i] = std::move(c);
  });

  Table t{{"n", "bound", "argmin", "stack", "dim", "verified"}, {}};
  std::ostringstream diff;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const auto& r = ref[i];
    const auto& c = computed[i];
    t.rows.push_back({r.n, c.bound.value, signature_cell(c.bound.argmin), c.spec.label(), c.dim, c.verified});
    auto mismatch = [&](const char* col, const std::string& expected, const std::string& got) {
      diff << "n=" << r.n << " " << col << ": expected " << expected << ", computed " << got << '\n';
    };
    if (c.bound.value != r.bound) mismatch("bound", std::to_string(r.bound), std::to_string(c.bound.value));
    if (!(c.spec == r.spec)) mismatch("stack", r.spec.label(), c.spec.label());
    if (static_cast<std::int64_t>(c.dim) != r.dim) mismatch("dim", std::to_string(r.dim), std::to_string(c.dim));
    if (!c.verified) mismatch("verified", "yes", "no");
  }
  render(t, ctx.format, *ctx.out);
  if (!diff.str().empty()) {
    *ctx.err << "table mismatch:\n" << diff.str();
    return kExitNegative;
  }
  return kExitOk;
}

int cmd_rigidity(const Context& ctx) {
  const BrickForm e = brick_e();
  const BrickForm d = brick_d();
  const std::vector<std::pair<const BrickForm*, const BrickForm*>> pairs{{&e, &e}, {&e, &d}, {&d, &e}, {&d, &d}};
  const auto& ref = reference_rigidity_ranks();
  Table t{{"pair", "rank", "unknowns"}, {}};
  bool ok = true;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    const std::size_t rank = mixed_rigidity_rank(*p, *q);
    const std::size_t unknowns = p->s() * q->s();
    t.rows.push_back({ref[i].pair, rank, unknowns});
    if (rank != ref[i].rank || unknowns != ref[i].unknowns) {
      *ctx.err << ref[i].pair << ": expected rank " << ref[i].rank << "/" << ref[i].unknowns << ", computed " << rank
               << "/" << unknowns << '\n';
      ok = false;
    }
  }
  render(t, ctx.format, *ctx.out);
  return ok ? kExitOk : kExitNegative;
}

}  // namespace mcsa::cli
