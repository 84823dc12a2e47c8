#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "mcsa/algebra.hpp"

namespace mcsa::cli {

/// Machine-readable verification result for one algebra.
///
/// Fields that need the centralizer solve (dim_c, maximal_commutative,
/// courter_like) are empty when verification was skipped. Locality fields are
/// empty unless the span is a closed commutative unital algebra.
struct Certificate {
  std::string name;
  std::size_t n = 0;
  std::size_t dim_a = 0;
  std::optional<std::size_t> dim_c;
  bool contains_identity = false;
  bool is_commutative = false;
  bool is_closed = false;
  std::optional<bool> is_local;
  std::optional<LoewySignature> loewy_signature;
  std::optional<std::size_t> nilpotency_degree;
  std::optional<bool> maximal_commutative;
  /// Maximal commutative with dim A < n.
  std::optional<bool> courter_like;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

Certificate certify(const MatrixAlgebra& a, std::string name, bool run_centralizer = true);

nlohmann::ordered_json to_json(const Certificate& c);

}  // namespace mcsa::cli
