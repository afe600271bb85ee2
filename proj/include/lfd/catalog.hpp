#ifndef LFD_CATALOG_HPP
#define LFD_CATALOG_HPP

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfd/bfunctional.hpp"
#include "lfd/error.hpp"
#include "lfd/freediv.hpp"
#include "lfd/mpoly.hpp"
#include "lfd/poly_io.hpp"

namespace lfd {

/// Input description of a divisor. `op` uses the symbols d<var>.
struct DivisorSpecFile {
  std::string name;
  std::vector<std::string> variables;
  std::string h;
  std::optional<std::string> f;
  std::optional<std::string> op;
};

struct ParsedSpec {
  DivisorSpecFile spec;
  MPoly h;
  std::optional<MPoly> f;
  std::optional<DualOperator> op;
};

inline std::vector<std::string> operator_variable_names(const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  for (const auto& v : vars) out.push_back("d" + v);
  return out;
}

inline ParsedSpec parse_spec(const DivisorSpecFile& spec) {
  if (spec.variables.empty()) throw Error(ErrorCode::InvalidInput, "cli", "no variables declared");
  ParsedSpec p;
  p.spec = spec;
  p.h = parse_poly(spec.h, spec.variables);
  if (p.h.is_zero() || !p.h.is_homogeneous()) {
    throw Error(ErrorCode::DegreeMismatch, "cli", "h must be a nonzero homogeneous polynomial");
  }
  if (spec.f) p.f = parse_poly(*spec.f, spec.variables);
  if (spec.op) p.op = DualOperator{parse_poly(*spec.op, operator_variable_names(spec.variables))};
  return p;
}

inline DivisorSpecFile spec_from_json(const nlohmann::json& j) {
  DivisorSpecFile s;
  try {
    s.name = j.value("name", std::string("unnamed"));
    s.variables = j.at("variables").get<std::vector<std::string>>();
    s.h = j.at("h").get<std::string>();
    if (j.contains("f") && !j.at("f").is_null()) s.f = j.at("f").get<std::string>();
    if (j.contains("operator") && !j.at("operator").is_null()) s.op = j.at("operator").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, "cli", std::string("bad divisor file: ") + e.what());
  }
  return s;
}

inline nlohmann::json spec_to_json(const DivisorSpecFile& s) {
  nlohmann::json j{{"name", s.name}, {"variables", s.variables}, {"h", s.h}};
  if (s.f) j["f"] = *s.f;
  if (s.op) j["operator"] = *s.op;
  return j;
}

inline DivisorSpecFile load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cli", "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, "cli", path + ": " + e.what());
  }
  return spec_from_json(j);
}

/// Discriminant of a X^3 + b X^2 Y + c X Y^2 + d Y^3 from the Sylvester
/// resultant of F_X(X,1) = 3aX^2 + 2bX + c and F_Y(X,1) = bX^2 + 2cX + 3d,
/// which equals 3 times the discriminant.
inline MPoly binary_cubic_discriminant() {
  const std::size_t n = 4;
  const MPoly a = MPoly::variable(n, 0), b = MPoly::variable(n, 1), c = MPoly::variable(n, 2),
              d = MPoly::variable(n, 3), zero(n);
  const std::vector<MPoly> p{Rational(3) * a, Rational(2) * b, c};
  const std::vector<MPoly> q{b, Rational(2) * c, Rational(3) * d};
  const std::vector<std::vector<MPoly>> sylvester{
      {p[0], p[1], p[2], zero},
      {zero, p[0], p[1], p[2]},
      {q[0], q[1], q[2], zero},
      {zero, q[0], q[1], q[2]},
  };
  return Rational(1, 3) * polynomial_determinant(sylvester, n);
}

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"A1", "A2", "A3", "A4", "A5", "A6", "star3", "bracelet"};
  return names;
}

inline std::string catalog_description(const std::string& name) {
  if (name == "star3") return "star quiver with three arms (D4): product of the 2x2 minors of a 2x3 matrix";
  if (name == "bracelet") return "discriminant of binary cubics";
  return "normal crossing divisor x1*...*x" + name.substr(1);
}

inline DivisorSpecFile catalog(const std::string& name) {
  DivisorSpecFile s;
  s.name = name;
  if (name.size() == 2 && name[0] == 'A' && name[1] >= '1' && name[1] <= '6') {
    const std::size_t n = static_cast<std::size_t>(name[1] - '0');
    s.variables = default_variable_names(n);
    for (std::size_t i = 0; i < n; ++i) s.h += (i ? "*" : "") + s.variables[i];
    return s;
  }
  if (name == "star3") {
    s.variables = {"a", "b", "c", "d", "e", "f"};
    s.h = "(a*e - b*d)*(a*f - c*d)*(b*f - c*e)";
    return s;
  }
  if (name == "bracelet") {
    s.variables = {"a", "b", "c", "d"};
    const MPoly h = binary_cubic_discriminant();
    s.h = to_string(h, s.variables);
    // Unitary coordinates for the SL2-invariant form on binary cubics carry
    // binomial weights 1, 1/3, 1/3, 1; in the monomial coordinates this makes
    // h*(d) = h(d_a, 3 d_b, 3 d_c, d_d).
    s.op = to_string(weighted_dual(h, {1, 3, 3, 1}).symbol, operator_variable_names(s.variables));
    return s;
  }
  throw Error(ErrorCode::UnknownCatalogEntry, "cli", "unknown catalog entry '" + name + "'");
}

inline bool is_catalog_name(const std::string& name) {
  for (const auto& c : catalog_names()) {
    if (c == name) return true;
  }
  return false;
}

/// Catalog name or path to a JSON divisor file.
inline DivisorSpecFile resolve_spec(const std::string& name_or_path) {
  return is_catalog_name(name_or_path) ? catalog(name_or_path) : load_spec_file(name_or_path);
}

}  // namespace lfd

#endif  // LFD_CATALOG_HPP
