// lfd: Bernstein polynomials and spectra of linear free divisors.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lfd/calibration.hpp"
#include "lfd/catalog.hpp"
#include "lfd/report.hpp"

namespace {

int calibrate() {
  for (const auto& p : lfd::run_calibration()) {
    if (!p.ok) {
      std::cerr << "calibration failed: " << p.name << " (got " << p.detail << ")\n";
      return 2;
    }
  }
  return 0;
}

void print_pair(const lfd::Report& r) {
  const auto& vars = r.input.spec.variables;
  std::cout << "divisor      " << r.input.spec.name << " (n = " << r.divisor.n << ")\n"
            << "h            " << lfd::to_string(r.input.h, vars) << "\n"
            << "linear free  yes (Saito unit " << r.divisor.saito_unit << ")\n"
            << "reductive    " << (r.reductivity.reductive ? "yes" : "no") << " [" << r.reductivity.caveat << "]\n"
            << "f            " << lfd::to_string(r.pair.f, vars) << " (" << r.f_rule << ")\n"
            << "Hilbert fn   ";
  for (std::size_t i = 0; i < r.pair.genericity.hilbert.size(); ++i) {
    std::cout << (i ? "," : "") << r.pair.genericity.hilbert[i];
  }
  std::cout << "\nc            " << r.pair.c << "\n";
  for (const auto& w : r.warnings) std::cout << "warning      " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bernstein polynomials and Brieskorn lattice spectra of linear free divisors"};
  app.require_subcommand(1);
  bool allow_large = false;
  app.add_flag("--allow-large", allow_large, "accept inputs beyond desk scale (n > 6)");

  std::string target;
  auto* check = app.add_subcommand("check", "freeness, reductivity and genericity of f");
  check->add_option("divisor", target, "catalog name or JSON divisor file")->required();

  std::string method = "both";
  auto* bern = app.add_subcommand("bernstein", "Bernstein polynomial b_h(s)");
  bern->add_option("--method", method, "spectral, functional or both")
      ->check(CLI::IsMember({"spectral", "functional", "both"}));
  bern->add_option("divisor", target, "catalog name or JSON divisor file")->required();

  std::string at;
  auto* spec = app.add_subcommand("spectrum", "spectrum of the logarithmic Brieskorn lattice");
  spec->add_option("--at", at, "zero or infinity")->required()->check(CLI::IsMember({"zero", "infinity"}));
  spec->add_option("divisor", target, "catalog name or JSON divisor file")->required();

  std::string json_out;
  bool verify = false;
  bool timings = false;
  auto* rep = app.add_subcommand("report", "full cross-validated report");
  rep->add_option("--json", json_out, "write the JSON report to this file ('-' for stdout)");
  rep->add_flag("--verify", verify, "exit 2 unless both routes agree and every hard check passes");
  rep->add_flag("--timings", timings, "include timings in the report");
  rep->add_option("divisor", target, "catalog name or JSON divisor file")->required();

  std::string show;
  auto* cat = app.add_subcommand("catalog", "list built-in divisors");
  cat->add_option("--show", show, "print the divisor file of one entry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cat->parsed()) {
      if (!show.empty()) {
        std::cout << lfd::spec_to_json(lfd::catalog(show)).dump(2) << "\n";
        return 0;
      }
      for (const auto& name : lfd::catalog_names()) {
        std::cout << name << "\t" << lfd::catalog_description(name) << "\n";
      }
      return 0;
    }
    if (int rc = calibrate(); rc != 0) return rc;
    const lfd::DivisorSpecFile input = lfd::resolve_spec(target);
    lfd::ReportOptions opts;
    opts.allow_large = allow_large;
    opts.timings = timings;

    if (check->parsed()) {
      print_pair(lfd::prepare_report(input, opts));
      return 0;
    }
    if (bern->parsed()) {
      opts.spectral = method != "functional";
      opts.functional = method != "spectral";
      const lfd::Report r = lfd::run_report(input, opts);
      if (r.spectral) std::cout << "spectral    b_h(s) = " << r.spectral->b_h.factored_string() << "\n";
      if (r.functional) {
        std::cout << "functional  b_h(s) = " << r.functional->b.factored_string() << "  (leading constant "
                  << r.functional->leading_constant << ", " << r.operator_source << " operator)\n";
      }
      if (r.agree) {
        std::cout << "agree       " << (*r.agree ? "yes" : "NO") << "\n";
        if (!*r.agree) return 2;
      }
      return 0;
    }
    if (spec->parsed()) {
      opts.functional = false;
      const lfd::Report r = lfd::run_report(input, opts);
      const auto& s = at == "zero" ? r.spectral->zero : r.spectral->infinity;
      std::cout << "Sp(" << at << ") = " << s.to_string() << "\n";
      return 0;
    }
    if (rep->parsed()) {
      const lfd::Report r = lfd::run_report(input, opts);
      const nlohmann::json j = lfd::to_json(r, timings);
      if (json_out == "-") {
        std::cout << j.dump(2) << "\n";
      } else {
        if (!json_out.empty()) {
          std::ofstream out(json_out);
          if (!out) throw lfd::Error(lfd::ErrorCode::InvalidInput, "cli", "cannot write " + json_out);
          out << j.dump(2) << "\n";
        }
        print_pair(r);
        std::cout << "b_h(s)       " << r.spectral->b_h.factored_string() << " (spectral)\n"
                  << "             " << r.functional->b.factored_string() << " (functional)\n"
                  << "agree        " << (r.agree.value_or(false) ? "yes" : "NO") << "\n"
                  << "Sp(zero)     " << r.spectral->zero.to_string() << "\n"
                  << "Sp(infinity) " << r.spectral->infinity.to_string() << "\n"
                  << "cyclic eq.   " << (r.spectral->cyclic.holds ? "holds" : "FAILS") << "\n"
                  << "checks       " << (r.hard_checks_pass() ? "all pass" : "FAIL") << "\n";
      }
      if (verify && !r.hard_checks_pass()) return 2;
      return 0;
    }
  } catch (const lfd::Error& e) {
    if (rep->parsed() && !json_out.empty()) {
      const std::string text = lfd::error_json(e).dump(2);
      if (json_out == "-") {
        std::cout << text << "\n";
      } else {
        std::ofstream(json_out) << text << "\n";
      }
    }
    std::cerr << "error [" << e.module() << "/" << lfd::to_string(e.code()) << "]: " << e.what() << "\n";
    return lfd::exit_code(e.code());
  }
  return 0;
}
