#include "document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mcsa::cli {

namespace {

using nlohmann::json;

Rational parse_entry(const json& e) {
  if (e.is_number_integer()) return Rational(e.get<std::int64_t>());
  if (e.is_number_unsigned()) return Rational(mpz_class(std::to_string(e.get<std::uint64_t>())));
  if (e.is_string()) {
    try {
      return Rational::parse(e.get<std::string>());
    } catch (const std::invalid_argument& ex) {
      throw DocumentError(ex.what());
    }
  }
  throw DocumentError("entries must be integers or \"p/q\" strings, got " + e.dump());
}

std::string render_entry(const Rational& x) {
  if (x.is_integer() && x.numerator().fits_slong_p()) return x.to_string();
  return json(x.to_string()).dump();
}

}  // namespace

AlgebraDocument parse_document(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& ex) {
    throw DocumentError(std::string("invalid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<std::int64_t>() <= 0) {
    throw DocumentError("\"n\" must be a positive integer");
  }
  if (!j.contains("basis") || !j["basis"].is_array()) throw DocumentError("\"basis\" must be an array");

  AlgebraDocument doc;
  doc.n = j["n"].get<std::size_t>();
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw DocumentError("\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("notes")) {
    if (!j["notes"].is_string()) throw DocumentError("\"notes\" must be a string");
    doc.notes = j["notes"].get<std::string>();
  }
  for (std::size_t k = 0; k < j["basis"].size(); ++k) {
    const json& m = j["basis"][k];
    if (!m.is_array() || m.size() != doc.n) {
      throw DocumentError("basis[" + std::to_string(k) + "] must have " + std::to_string(doc.n) + " rows");
    }
    RationalMatrix mat(doc.n, doc.n);
    for (std::size_t r = 0; r < doc.n; ++r) {
      if (!m[r].is_array() || m[r].size() != doc.n) {
        throw DocumentError("basis[" + std::to_string(k) + "] row " + std::to_string(r) + " must have " +
                            std::to_string(doc.n) + " entries");
      }
      for (std::size_t c = 0; c < doc.n; ++c) mat(r, c) = parse_entry(m[r][c]);
    }
    doc.basis.push_back(std::move(mat));
  }
  return doc;
}

AlgebraDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string serialize_document(const AlgebraDocument& doc) {
  std::ostringstream os;
  os << "{\n  \"name\": " << json(doc.name).dump() << ",\n  \"n\": " << doc.n << ",\n";
  if (!doc.notes.empty()) os << "  \"notes\": " << json(doc.notes).dump() << ",\n";
  os << "  \"basis\": [";
  for (std::size_t k = 0; k < doc.basis.size(); ++k) {
    const auto& m = doc.basis[k];
    os << (k ? ",\n    [\n" : "\n    [\n");
    for (std::size_t r = 0; r < m.rows(); ++r) {
      os << "      [";
      for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << render_entry(m(r, c));
      os << (r + 1 < m.rows() ? "],\n" : "]\n");
    }
    os << "    ]";
  }
  os << (doc.basis.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

AlgebraDocument document_from_algebra(const MatrixAlgebra& a, std::string name, std::string notes) {
  return {std::move(name), a.ambient_size(), a.basis(), std::move(notes)};
}

MatrixAlgebra to_algebra(const AlgebraDocument& doc) {
  try {
    return MatrixAlgebra(doc.n, doc.basis);
  } catch (const DimensionError& ex) {
    throw DocumentError(ex.what());
  }
}

}  // namespace mcsa::cli
