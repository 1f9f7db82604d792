#include "charpoly/io.hpp"

#include "charpoly/error.hpp"

namespace charpoly {

namespace {

using nlohmann::json;

Integer integer_from_json(const json& v) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) != 0)
      throw Error(ErrorKind::bad_params, "not an integer: " + v.get<std::string>());
    return out;
  }
  throw Error(ErrorKind::bad_params, "expected an integer, got " + v.dump());
}

std::size_t size_param(const json& obj, const char* key) {
  if (!obj.contains(key)) throw Error(ErrorKind::bad_params, std::string("missing parameter \"") + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long>() < 0)
    throw Error(ErrorKind::bad_params, std::string("parameter \"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

json rows_to_json(const std::vector<IntVector>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json jr = json::array();
    for (const auto& x : r) {
      if (x.fits_slong_p())
        jr.push_back(x.get_si());
      else
        jr.push_back(x.get_str());
    }
    out.push_back(std::move(jr));
  }
  return out;
}

}  // namespace

Arrangement named_arrangement(const std::string& named, std::size_t n, std::size_t k, std::size_t h) {
  if (named == "A") return build_type_A(n);
  if (named == "B") return build_type_B(n);
  if (named == "D") return build_type_D(n);
  if (named == "Ank") return build_k_equal(n, k);
  if (named == "Dnk") return build_Dnk(n, k);
  if (named == "Bnkh") return build_Bnkh(n, k, h);
  throw Error(ErrorKind::bad_params, "unknown named arrangement \"" + named + "\"");
}

Arrangement arrangement_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::bad_params, "arrangement spec must be a JSON object");
  const std::size_t n = size_param(j, "ambient_dim");
  const bool has_named = j.contains("named");
  const bool has_subspaces = j.contains("subspaces");
  if (has_named == has_subspaces)
    throw Error(ErrorKind::bad_params, "arrangement spec needs exactly one of \"named\" or \"subspaces\"");

  if (has_named) {
    if (!j.at("named").is_string()) throw Error(ErrorKind::bad_params, "\"named\" must be a string");
    const std::string named = j.at("named").get<std::string>();
    const json params = j.value("params", json::object());
    if (!params.is_object()) throw Error(ErrorKind::bad_params, "\"params\" must be an object");
    std::size_t k = 0, h = 0;
    if (named == "Ank" || named == "Dnk" || named == "Bnkh") k = size_param(params, "k");
    if (named == "Bnkh") h = size_param(params, "h");
    return named_arrangement(named, n, k, h);
  }

  const json& subs = j.at("subspaces");
  if (!subs.is_array()) throw Error(ErrorKind::bad_params, "\"subspaces\" must be an array");
  std::vector<std::vector<IntVector>> systems;
  for (const auto& sys : subs) {
    if (!sys.is_array()) throw Error(ErrorKind::bad_params, "each subspace must be an array of rows");
    std::vector<IntVector> rows;
    for (const auto& r : sys) {
      if (!r.is_array()) throw Error(ErrorKind::bad_params, "each row must be an array of integers");
      IntVector row;
      for (const auto& x : r) row.push_back(integer_from_json(x));
      rows.push_back(std::move(row));
    }
    systems.push_back(std::move(rows));
  }
  return build_custom(n, systems, j.value("name", std::string("custom")));
}

json arrangement_to_json(const Arrangement& a) {
  json subs = json::array();
  for (const auto& m : a.members()) subs.push_back(rows_to_json(m.canon()));
  return json{{"ambient_dim", a.ambient_dim()}, {"name", a.name()}, {"subspaces", subs}};
}

json poly_to_json(const IntPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return json{{"coeffs", coeffs}, {"degree", p.degree()}};
}

IntPolynomial poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
    throw Error(ErrorKind::bad_params, "polynomial JSON needs a \"coeffs\" array");
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(integer_from_json(c));
  return IntPolynomial(std::move(coeffs));
}

json poset_to_json(const IntersectionPoset& p) {
  json elements = json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    elements.push_back(json{{"index", i},
                            {"rows", rows_to_json(p.element(i).canon())},
                            {"dim", p.element(i).dim()},
                            {"mobius", p.mobius()[i].get_str()}});
  json covers = json::array();
  for (const auto& [lo, hi] : p.covers()) covers.push_back(json::array({lo, hi}));
  return json{{"ambient_dim", p.ambient_dim()}, {"elements", elements}, {"covers", covers}};
}

json report_to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"instance", c.instance}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.ok}});
  return json{{"ok", r.ok()}, {"checks", checks}};
}

}  // namespace charpoly
