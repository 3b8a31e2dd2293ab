#include "novikov/io.hpp"

#include <json.hpp>

#include <utility>

#include "novikov/error.hpp"

namespace novikov {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what, 0);
}

Rational read_rational(const json& v, const std::string& where) {
  if (!v.is_string()) schema_error(where, "rational must be a string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    schema_error(where, e.what());
  }
}

std::size_t read_index(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where, "index must be an integer");
  const auto i = v.get<std::int64_t>();
  if (i < 1 || static_cast<std::uint64_t>(i) > dim)
    throw IndexOutOfRange(where + ": index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(i - 1);
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!doc.is_object()) schema_error("$", "top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "dim" && key != "products" && key != "form" && key != "name" && key != "seed")
      schema_error("$." + key, "unknown field");
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<std::int64_t>() < 0)
    schema_error("$.dim", "required non-negative integer");
  const auto dim = static_cast<std::size_t>(doc["dim"].get<std::int64_t>());

  AlgebraBuilder builder(dim);
  if (!doc.contains("products")) schema_error("$.products", "required array");
  {
    const json& products = doc["products"];
    if (!products.is_array()) schema_error("$.products", "must be an array");
    for (std::size_t p = 0; p < products.size(); ++p) {
      const std::string where = "$.products[" + std::to_string(p) + "]";
      const json& entry = products[p];
      if (!entry.is_object() || !entry.contains("left") || !entry.contains("right") ||
          !entry.contains("terms") || entry.size() != 3)
        schema_error(where, "expected {\"left\", \"right\", \"terms\"}");
      const std::size_t i = read_index(entry["left"], dim, where + ".left");
      const std::size_t j = read_index(entry["right"], dim, where + ".right");
      const json& terms = entry["terms"];
      if (!terms.is_array()) schema_error(where + ".terms", "must be an array");
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string tw = where + ".terms[" + std::to_string(t) + "]";
        if (!terms[t].is_array() || terms[t].size() != 2) schema_error(tw, "expected [index, \"rational\"]");
        const std::size_t m = read_index(terms[t][0], dim, tw);
        builder.add(i, j, m, read_rational(terms[t][1], tw));
      }
    }
  }

  AlgebraFile file{builder.build(), std::nullopt, std::nullopt, std::nullopt};

  if (doc.contains("form") && !doc["form"].is_null()) {
    const json& rows = doc["form"];
    if (!rows.is_array() || rows.size() != dim) schema_error("$.form", "must be a dim x dim array");
    Mat b(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      if (!rows[r].is_array() || rows[r].size() != dim) schema_error("$.form", "must be a dim x dim array");
      for (std::size_t c = 0; c < dim; ++c)
        b(r, c) = read_rational(rows[r][c], "$.form[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    if (!b.is_symmetric()) throw NonSymmetricForm("$.form: matrix is not symmetric");
    file.form = SymForm(std::move(b));
  }
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) schema_error("$.name", "must be a string");
    file.name = doc["name"].get<std::string>();
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) schema_error("$.seed", "must be a non-negative integer");
    file.seed = doc["seed"].get<std::uint64_t>();
  }
  return file;
}

std::string serialize_algebra_file(const AlgebraFile& file) {
  const Algebra& a = file.algebra;
  const std::size_t n = a.dim();
  json doc = json::object();
  if (file.name) doc["name"] = *file.name;
  if (file.seed) doc["seed"] = *file.seed;
  doc["dim"] = n;
  json products = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      json terms = json::array();
      for (std::size_t m = 0; m < n; ++m)
        if (sgn(a.c(i, j, m)) != 0) terms.push_back(json::array({m + 1, to_string(a.c(i, j, m))}));
      if (!terms.empty()) products.push_back({{"left", i + 1}, {"right", j + 1}, {"terms", std::move(terms)}});
    }
  doc["products"] = std::move(products);
  if (file.form) {
    json rows = json::array();
    for (std::size_t r = 0; r < n; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < n; ++c) row.push_back(to_string(file.form->matrix()(r, c)));
      rows.push_back(std::move(row));
    }
    doc["form"] = std::move(rows);
  }
  return doc.dump(2) + "\n";
}

}  // namespace novikov
