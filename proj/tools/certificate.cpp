#include "certificate.hpp"

namespace mcsa::cli {

Certificate certify(const MatrixAlgebra& a, std::string name, bool run_centralizer) {
  Certificate c;
  c.name = std::move(name);
  c.n = a.ambient_size();
  c.dim_a = a.dimension();
  c.contains_identity = a.contains_identity();
  c.is_commutative = is_commutative(a);
  c.is_closed = is_closed(a);

  if (c.is_closed && c.is_commutative && c.contains_identity) {
    c.is_local = is_local(a);
    if (*c.is_local) {
      c.loewy_signature = loewy_signature(a);
      c.nilpotency_degree = c.loewy_signature->length();
    }
  }
  if (run_centralizer) {
    const auto cent = centralizer(a);
    c.dim_c = cent.dimension();
    c.maximal_commutative = c.is_commutative && spans_equal(cent, a);
    c.courter_like = *c.maximal_commutative && c.dim_a < c.n;
  }
  return c;
}

nlohmann::ordered_json to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  auto opt = [](const auto& v) -> nlohmann::ordered_json {
    if (v) return *v;
    return nullptr;
  };
  j["name"] = c.name;
  j["n"] = c.n;
  j["dim_A"] = c.dim_a;
  j["dim_C"] = opt(c.dim_c);
  j["contains_identity"] = c.contains_identity;
  j["is_commutative"] = c.is_commutative;
  j["is_closed"] = c.is_closed;
  j["is_local"] = opt(c.is_local);
  if (c.loewy_signature) {
    j["loewy_signature"] = c.loewy_signature->layers;
  } else {
    j["loewy_signature"] = nullptr;
  }
  j["nilpotency_degree"] = opt(c.nilpotency_degree);
  j["maximal_commutative"] = opt(c.maximal_commutative);
  j["courter_like"] = opt(c.courter_like);
  return j;
}

}  // namespace mcsa::cli
