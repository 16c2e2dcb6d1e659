#include "xaax/json_io.hpp"

#include "xaax/errors.hpp"

namespace xaax {

namespace {

mpq_class rational_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return mpq_class(std::to_string(j.get<long long>()), 10);
  throw ParseError("expected a rational string, got " + j.dump());
}

std::size_t count_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
    throw ParseError(std::string("missing or invalid \"") + key + "\"");
  }
  return j.at(key).get<std::size_t>();
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  return Json::array({rational_to_string(s.re()), rational_to_string(s.im())});
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError("scalar must be a [re, im] pair, got " + j.dump());
    return Scalar(rational_from_json(j[0]), rational_from_json(j[1]));
  }
  return Scalar(rational_from_json(j), mpq_class(0));
}

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (const auto& s : m.entries()) entries.push_back(scalar_to_json(s));
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix must be a JSON object");
  const std::size_t rows = count_from_json(j, "rows");
  const std::size_t cols = count_from_json(j, "cols");
  if (!j.contains("entries") || !j.at("entries").is_array()) {
    throw ParseError("missing or invalid \"entries\"");
  }
  const Json& entries = j.at("entries");
  if (entries.size() != rows * cols) {
    throw ParseError("\"entries\" has " + std::to_string(entries.size()) + " items, expected " +
                     std::to_string(rows * cols));
  }
  std::vector<Scalar> values;
  values.reserve(entries.size());
  for (const auto& e : entries) values.push_back(scalar_from_json(e));
  return Matrix(rows, cols, std::move(values));
}

std::string dump_matrix(const Matrix& m) { return matrix_to_json(m).dump(); }

Matrix parse_matrix(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

Json basis_to_json(const SolutionBasis& basis) {
  Json out;
  if (basis.spec) {
    out["n"] = basis.spec->n;
    out["mu"] = scalar_to_json(basis.spec->mu);
  }
  out["dimension"] = basis.dimension();
  Json elements = Json::array();
  for (const auto& m : basis.elements) elements.push_back(matrix_to_json(m));
  out["elements"] = std::move(elements);
  Json roles = Json::array();
  for (const auto& r : basis.roles) roles.push_back(r.label());
  out["roles"] = std::move(roles);
  return out;
}

Json structure_to_json(const StructureConstants& sc) {
  Json entries = Json::array();
  const std::size_t d = sc.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& c = sc(i, j, k);
        if (c.is_zero()) continue;
        Json e;
        e["i"] = i;
        e["j"] = j;
        e["k"] = k;
        if (c.is_real()) {
          e["c"] = rational_to_string(c.re());
        } else {
          e["c"] = scalar_to_json(c);
        }
        entries.push_back(std::move(e));
      }
    }
  }
  Json out;
  out["dim"] = d;
  out["entries"] = std::move(entries);
  return out;
}

StructureConstants structure_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("structure constants must be a JSON object");
  const std::size_t d = count_from_json(j, "dim");
  if (!j.contains("entries") || !j.at("entries").is_array()) {
    throw ParseError("missing or invalid \"entries\"");
  }
  StructureConstants sc(d);
  for (const auto& e : j.at("entries")) {
    const std::size_t i = count_from_json(e, "i");
    const std::size_t jj = count_from_json(e, "j");
    const std::size_t k = count_from_json(e, "k");
    if (i >= d || jj >= d || k >= d || i >= jj) {
      throw ParseError("structure entry index out of range: " + e.dump());
    }
    if (!e.contains("c")) throw ParseError("structure entry without \"c\": " + e.dump());
    const Scalar c = scalar_from_json(e.at("c"));
    sc.set(i, jj, k, c);
    sc.set(jj, i, k, -c);
  }
  return sc;
}

}  // namespace xaax
