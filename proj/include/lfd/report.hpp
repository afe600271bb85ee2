#ifndef LFD_REPORT_HPP
#define LFD_REPORT_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lfd/bfunctional.hpp"
#include "lfd/brieskorn.hpp"
#include "lfd/catalog.hpp"
#include "lfd/defalg.hpp"
#include "lfd/error.hpp"
#include "lfd/freediv.hpp"
#include "lfd/poly_io.hpp"

namespace lfd {

struct ReportOptions {
  bool spectral = true;
  bool functional = true;
  bool allow_large = false;
  bool timings = false;
};

struct Report {
  ParsedSpec input;
  DivisorData divisor;
  ReductivityReport reductivity;
  std::string f_rule;  // "given", "sum", "weighted-sum" or "random-<k>"
  PairData pair;
  std::optional<SpectralResult> spectral;
  std::optional<FunctionalResult> functional;
  std::string operator_source;  // "given" or "default"
  std::optional<bool> agree;
  std::vector<std::string> warnings;
  std::vector<std::pair<std::string, double>> timings;

  /// Hard checks: both routes agree (when both ran), the cyclic identity,
  /// exact elementary decomposition and the theorem checks.
  bool hard_checks_pass() const {
    if (agree && !*agree) return false;
    if (spectral) {
      if (!spectral->cyclic.holds || !spectral->elementary.reconstructs || !spectral->checks.hard_checks_pass()) {
        return false;
      }
    }
    return true;
  }
};

/// Rough size of the degree-n monomial space, C(2n-1, n).
inline double size_estimate(std::size_t n) {
  double v = 1;
  for (std::size_t k = 1; k <= n; ++k) v = v * static_cast<double>(n - 1 + k) / static_cast<double>(k);
  return v;
}

inline void guard_size(std::size_t n, bool allow_large) {
  constexpr std::size_t desk_scale = 6;
  constexpr double hard_bound = 2.0e6;
  if (size_estimate(n) > hard_bound) {
    throw Error(ErrorCode::TooLarge, "cli", "input with n = " + std::to_string(n) + " exceeds the memory bound");
  }
  if (n > desk_scale && !allow_large) {
    throw Error(ErrorCode::TooLarge, "cli", "n = " + std::to_string(n) + " is beyond desk scale; pass --allow-large");
  }
}

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

/// Divisor analysis and choice of f, shared by every command.
inline Report prepare_report(const DivisorSpecFile& spec, const ReportOptions& opts) {
  Report r;
  Stopwatch sw;
  r.input = parse_spec(spec);
  guard_size(r.input.spec.variables.size(), opts.allow_large);
  r.divisor = build_divisor(r.input.h);
  r.reductivity = reductivity_probe(r.divisor.all_fields);
  if (!r.reductivity.reductive) r.warnings.push_back("symmetry Lie algebra is not reductive");
  r.timings.emplace_back("divisor", sw.lap());
  MPoly f;
  if (r.input.f) {
    f = *r.input.f;
    r.f_rule = "given";
  } else {
    auto choice = find_generic_form(r.divisor);
    f = choice.f;
    r.f_rule = choice.rule;
  }
  r.pair = make_pair(r.divisor, f);
  if (r.pair.c == 0) r.warnings.push_back("c = 0");
  r.timings.emplace_back("pair", sw.lap());
  return r;
}

inline Report run_report(const DivisorSpecFile& spec, const ReportOptions& opts = {}) {
  Report r = prepare_report(spec, opts);
  Stopwatch sw;
  if (opts.spectral) {
    r.spectral = spectral_pipeline(r.pair);
    if (!r.spectral->checks.zero_symmetric) {
      r.warnings.push_back("spectrum at zero is not symmetric about (n-1)/2");
    }
    r.timings.emplace_back("spectral", sw.lap());
  }
  if (opts.functional) {
    r.operator_source = r.input.op ? "given" : "default";
    const DualOperator op = r.input.op ? *r.input.op : default_dual(r.input.h);
    r.functional = bernstein_via_functional(op, r.input.h);
    r.timings.emplace_back("functional", sw.lap());
  }
  if (r.spectral && r.functional) r.agree = r.spectral->b_h == r.functional->b;
  return r;
}

// JSON serialization: rationals as "p" or "p/q" strings.

inline nlohmann::json to_json(const Rational& q) { return q.get_str(); }

inline nlohmann::json to_json(const BPoly& b) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& [root, m] : b.factors) factors.push_back({{"root", root.get_str()}, {"multiplicity", m}});
  return {{"factored", b.factored_string()}, {"expanded", b.poly.to_string()}, {"factors", factors}};
}

inline nlohmann::json to_json(const Spectrum& s) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : s.values) a.push_back(v.get_str());
  return a;
}

inline nlohmann::json to_json(const QMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::json to_json(const ReducedClass& c) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [k, v] : c.coeffs()) {
    a.push_back({{"theta", std::get<0>(k)}, {"t", std::get<1>(k)}, {"e", std::get<2>(k) + 1}, {"coeff", v.get_str()}});
  }
  return a;
}

inline nlohmann::json to_json(const Report& r, bool include_timings = false) {
  const auto& vars = r.input.spec.variables;
  nlohmann::json j;
  j["divisor"] = {{"name", r.input.spec.name}, {"variables", vars}, {"n", r.divisor.n}, {"h", to_string(r.input.h, vars)}};
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& xi : r.divisor.relative_fields) rel.push_back(to_json(xi.matrix()));
  j["freeness"] = {{"linear_fields", r.divisor.all_fields.size()},
                   {"relative_fields", rel},
                   {"saito_unit", to_json(r.divisor.saito_unit)}};
  j["reductivity"] = {{"bracket_closed", r.reductivity.bracket_closed},
                      {"dim", r.reductivity.dim},
                      {"center_dim", r.reductivity.center_dim},
                      {"derived_dim", r.reductivity.derived_dim},
                      {"center_derived_split", r.reductivity.center_derived_split},
                      {"trace_form_nondegenerate", r.reductivity.trace_form_nondegenerate},
                      {"reductive", r.reductivity.reductive},
                      {"caveat", r.reductivity.caveat}};
  nlohmann::json hilbert = nlohmann::json::array();
  for (auto d : r.pair.genericity.hilbert) hilbert.push_back(d);
  nlohmann::json k = nlohmann::json::array();
  for (const auto& ki : r.pair.k) k.push_back(to_string(ki, vars));
  j["f"] = {{"form", to_string(r.pair.f, vars)},
            {"rule", r.f_rule},
            {"generic", r.pair.generic},
            {"hilbert_function", hilbert}};
  j["c"] = to_json(r.pair.c);
  j["certificate"] = {{"k", k}};
  nlohmann::json bern;
  if (r.spectral) bern["spectral"] = to_json(r.spectral->b_h);
  if (r.functional) {
    bern["functional"] = to_json(r.functional->b);
    bern["functional"]["leading_constant"] = to_json(r.functional->leading_constant);
    bern["functional"]["operator"] = r.operator_source;
  }
  if (r.agree) bern["agree"] = *r.agree;
  j["bernstein"] = bern;
  if (r.spectral) {
    const auto& s = *r.spectral;
    nlohmann::json alpha = nlohmann::json::array();
    for (const auto& a : s.conn.alpha) alpha.push_back(a.get_str());
    j["connection"] = {{"alpha", alpha},
                       {"c_from_F", to_json(s.conn.c_from_F)},
                       {"f_power_class", to_json(s.conn.fn_class)},
                       {"residue", to_json(s.conn.R)},
                       {"spectral_polynomial", to_json(s.b_g1)}};
    j["spectra"] = {{"zero", to_json(s.zero)}, {"infinity", to_json(s.infinity)}};
    j["cyclic_equation"] = {{"holds", s.cyclic.holds},
                            {"value_at_theta_1", to_json(s.cyclic.lhs_at_one)},
                            {"expected_t_coefficient", to_json(s.cyclic.expected)}};
    const auto& c = s.checks;
    j["checks"] = {{"roots_in_open_interval", c.roots_in_open_interval},
                   {"roots_symmetric_about_minus_one", c.roots_symmetric},
                   {"minus_one_only_integer_root", c.minus_one_only_integer_root},
                   {"infinity_spectrum_symmetric", c.infinity_symmetric},
                   {"integer_block", c.integer_block},
                   {"integer_block_k", c.block_k ? nlohmann::json(*c.block_k) : nlohmann::json(nullptr)},
                   {"block_matches_root_multiplicity", c.block_matches_root_multiplicity},
                   {"elementary_decomposition_exact", s.elementary.reconstructs},
                   {"conjecture_zero_spectrum_symmetric", c.zero_symmetric}};
  }
  j["warnings"] = r.warnings;
  if (include_timings) {
    nlohmann::json t;
    for (const auto& [name, sec] : r.timings) t[name] = sec;
    j["timings_seconds"] = t;
  }
  return j;
}

/// 3 = invalid input, 4 = out of scope, 2 = mathematical failure.
inline int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonRationalSpectrum:
    case ErrorCode::NotProportional:
    case ErrorCode::TooLarge:
      return 4;
    case ErrorCode::WindowUnstable:
      return 2;
    default:
      return 3;
  }
}

inline nlohmann::json error_json(const Error& e) {
  return {{"error", {{"code", std::string(to_string(e.code()))}, {"module", e.module()}, {"message", e.what()}}}};
}

}  // namespace lfd

#endif  // LFD_REPORT_HPP
