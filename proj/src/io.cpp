#include "leibniz/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing \"" + key + "\"");
  return *it;
}

std::size_t index_field(const json& obj, const char* key, std::size_t bound, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer()) throw InputError(where + "." + key + ": expected an integer");
  const auto raw = v.get<long long>();
  if (raw < 0 || static_cast<unsigned long long>(raw) >= bound) {
    throw InputError(where + "." + key + ": index " + std::to_string(raw) + " out of range");
  }
  return static_cast<std::size_t>(raw);
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) throw InputError(where + "." + key + ": expected a decimal string");
  return v.get<std::string>();
}

}  // namespace

LeibnizAlgebra parse_algebra_json(std::string_view text, LeibnizAlgebra::Verify verify) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  const json& dim_v = field(doc, "dim", "$");
  if (!dim_v.is_number_integer() || dim_v.get<long long>() < 0) {
    throw InputError("$.dim: expected a nonnegative integer");
  }
  const auto dim = static_cast<std::size_t>(dim_v.get<long long>());
  const json& basis_v = field(doc, "basis", "$");
  if (!basis_v.is_array() || basis_v.size() != dim) {
    throw InputError("$.basis: expected an array of " + std::to_string(dim) + " labels");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!basis_v[i].is_string()) throw InputError("$.basis[" + std::to_string(i) + "]: expected a string");
    labels.push_back(basis_v[i].get<std::string>());
  }
  const json& table_v = field(doc, "table", "$");
  if (!table_v.is_array()) throw InputError("$.table: expected an array");

  std::vector<BasisProduct> products;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < table_v.size(); ++e) {
    const std::string where = "$.table[" + std::to_string(e) + "]";
    const json& entry = table_v[e];
    const std::size_t i = index_field(entry, "i", dim, where);
    const std::size_t j = index_field(entry, "j", dim, where);
    if (!seen.insert({i, j}).second) {
      throw InputError(where + ": duplicate entry for pair (" + std::to_string(i) + ", " +
                       std::to_string(j) + ")");
    }
    const json& prods = field(entry, "products", where);
    if (!prods.is_array()) throw InputError(where + ".products: expected an array");
    SparseVector value;
    for (std::size_t p = 0; p < prods.size(); ++p) {
      const std::string pw = where + ".products[" + std::to_string(p) + "]";
      const std::size_t k = index_field(prods[p], "k", dim, pw);
      Rational c;
      try {
        c = parse_rational(string_field(prods[p], "num", pw), string_field(prods[p], "den", pw));
      } catch (const InputError& err) {
        throw InputError(pw + ": " + err.what());
      }
      value.push_back({k, c});
    }
    canonicalize(value);
    if (!value.empty()) products.push_back({i, j, std::move(value)});
  }
  return LeibnizAlgebra(std::move(labels), std::move(products), verify);
}

LeibnizAlgebra load_algebra(const std::string& path, LeibnizAlgebra::Verify verify) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_algebra_json(ss.str(), verify);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string algebra_to_json(const LeibnizAlgebra& L) {
  nlohmann::ordered_json doc;
  doc["dim"] = L.dim();
  doc["basis"] = L.labels();
  auto table = nlohmann::ordered_json::array();
  for (const auto& p : L.products()) {
    nlohmann::ordered_json entry;
    entry["i"] = p.i;
    entry["j"] = p.j;
    auto prods = nlohmann::ordered_json::array();
    for (const auto& e : p.value) {
      prods.push_back({{"k", e.index},
                       {"num", e.value.get_num().get_str()},
                       {"den", e.value.get_den().get_str()}});
    }
    entry["products"] = std::move(prods);
    table.push_back(std::move(entry));
  }
  doc["table"] = std::move(table);
  return doc.dump(2) + "\n";
}

}  // namespace leibniz
