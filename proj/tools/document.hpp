#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcsa/algebra.hpp"
#include "mcsa/matrix.hpp"

namespace mcsa::cli {

/// Malformed algebra document (bad JSON, wrong shapes, non-exact entries).
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On-disk algebra: {"name": str, "n": int, "basis": [matrix, ...], "notes": str?}
/// where every entry is a JSON integer or a "p/q" string. Floats are rejected.
struct AlgebraDocument {
  std::string name;
  std::size_t n = 0;
  std::vector<RationalMatrix> basis;
  std::string notes;

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

AlgebraDocument parse_document(std::string_view json_text);
AlgebraDocument load_document(const std::string& path);

/// Deterministic rendering, one matrix row per line. Integers that fit in 64
/// bits are JSON numbers; everything else is a string.
std::string serialize_document(const AlgebraDocument& doc);

AlgebraDocument document_from_algebra(const MatrixAlgebra& a, std::string name, std::string notes = {});
MatrixAlgebra to_algebra(const AlgebraDocument& doc);

}  // namespace mcsa::cli
