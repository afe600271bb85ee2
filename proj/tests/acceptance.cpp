// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "lfd/catalog.hpp"
#include "lfd/report.hpp"

using namespace lfd;

namespace {

struct Timed {
  Report report;
  double seconds = 0;
};

Timed timed_report(const std::string& name) {
  const auto start = std::chrono::steady_clock::now();
  Timed t;
  t.report = run_report(catalog(name));
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

Spectrum integers(int from, int to) {
  Spectrum s;
  for (int k = from; k <= to; ++k) s.values.emplace_back(k);
  return s;
}

Spectrum values(std::initializer_list<long> v) {
  Spectrum s;
  for (long x : v) s.values.emplace_back(x);
  return s;
}

bool both_routes(const Report& r, const BPoly& expected) {
  return r.spectral && r.functional && r.spectral->b_h == expected && r.functional->b == expected;
}

std::map<std::string, Timed> cache;

const Timed& get(const std::string& name) {
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, timed_report(name)).first;
  return it->second;
}

MPoly random_form(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> v(-4, 4);
  std::vector<Rational> c(n);
  for (auto& x : c) x = v(rng);
  return MPoly::linear_form(c);
}

DivisorData divisor_of(const std::string& name) { return build_divisor(parse_spec(catalog(name)).h); }

// Each property returns the number of cases checked, or -1 on the first failure.
int reduction_rule_cases() {
  std::mt19937 rng(1);
  int cases = 0;
  for (const std::string name : {"A3", "bracelet", "star3"}) {
    const DivisorData d = divisor_of(name);
    const PairData pair = make_pair(d, find_generic_form(d).f, {false});
    const Reducer r(pair);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int t = 0; t < 40; ++t) {
      const int deg = t % static_cast<int>(d.n + 1);
      MPoly g(d.n);
      const auto basis = monomial_basis(d.n, deg);
      for (int k = 0; k < 3; ++k) g.add_term(basis[static_cast<std::size_t>(rng()) % basis.size()], coeff(rng));
      const std::size_t i = static_cast<std::size_t>(t) % (d.n - 1);
      const auto& xi = d.relative_fields[i];
      const ReducedClass residual = r.reduce(g * pair.jacobian[i]) - r.reduce(xi.apply(g) + xi.trace() * g, 1);
      if (!residual.is_zero()) return -1;
      ++cases;
    }
  }
  return cases;
}

int graded_dimension_cases() {
  int cases = 0;
  for (const std::string name : {"A2", "A3", "A4", "bracelet", "star3"}) {
    const DivisorData d = divisor_of(name);
    const PairData pair = make_pair(d, find_generic_form(d).f, {false});
    for (int deg = 0; deg <= static_cast<int>(d.n) + 2; ++deg) {
      if (relation_quotient_dim(pair, deg) != graded_rank_prediction(d.n, deg)) return -1;
      ++cases;
    }
  }
  return cases;
}

int decompose_cases() {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> coeff(-4, 4);
  int cases = 0;
  for (const std::string name : {"A3", "bracelet", "star3"}) {
    const DivisorData d = divisor_of(name);
    const PairData pair = make_pair(d, find_generic_form(d).f, {false});
    for (int t = 0; t < 40; ++t) {
      const int deg = t % static_cast<int>(d.n + 1);
      MPoly q(d.n);
      const auto basis = monomial_basis(d.n, deg);
      for (int k = 0; k < 4; ++k) q.add_term(basis[static_cast<std::size_t>(rng()) % basis.size()], coeff(rng));
      const Decomposition dec = decompose(pair, q);
      MPoly rebuilt(d.n);
      for (const auto& [be, v] : dec.lambda) {
        rebuilt += v * d.h.pow(static_cast<unsigned>(be.first)) * pair.f.pow(static_cast<unsigned>(be.second));
      }
      for (std::size_t i = 0; i < dec.g.size(); ++i) rebuilt += pair.jacobian[i] * dec.g[i];
      if (!(rebuilt == q)) return -1;
      ++cases;
    }
  }
  return cases;
}

int f_independence_cases() {
  std::mt19937 rng(3);
  int cases = 0;
  for (const std::string name : {"A3", "bracelet"}) {
    const DivisorData d = divisor_of(name);
    const SpectralResult ref = spectral_pipeline(make_pair(d, find_generic_form(d).f, {false}));
    while (cases < (name == "A3" ? 50 : 100)) {
      const MPoly f = random_form(rng, d.n);
      if (f.is_zero() || !is_generic_fast(d, f)) continue;
      const SpectralResult r = spectral_pipeline(make_pair(d, f, {false}));
      if (!(r.b_h == ref.b_h && r.zero == ref.zero && r.infinity == ref.infinity)) return -1;
      ++cases;
    }
  }
  const DivisorData star = divisor_of("star3");
  if (!f_independence_check(star, find_generic_form(star).f, random_form(rng, 6) + find_generic_form(star).f)) {
    return -1;
  }
  return cases + 1;
}

// c is unchanged when the variables, and so the unknowns of every linear
// system, are relabelled.
int c_uniqueness_cases() {
  std::mt19937 rng(4);
  int cases = 0;
  for (const std::string name : {"A4", "bracelet"}) {
    const DivisorData d = divisor_of(name);
    const MPoly f = find_generic_form(d).f;
    const Rational c0 = make_pair(d, f, {false}).c;
    std::vector<std::size_t> perm(d.n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 50; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const DivisorData moved = build_divisor(d.h.remap(d.n, perm));
      if (make_pair(moved, f.remap(d.n, perm), {false}).c != c0) return -1;
      ++cases;
    }
  }
  return cases;
}

// Rescaled h = kappa h0 with a random generic form on the spectral side and a
// rescaled operator on the functional side.
int cross_route_cases() {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(1, 6);
  int cases = 0;
  for (const std::string name : {"A2", "A3", "bracelet"}) {
    const ParsedSpec spec = parse_spec(catalog(name));
    const DualOperator op0 = spec.op ? *spec.op : default_dual(spec.h);
    int local = 0;
    while (local < 34) {
      const Rational kappa = make_rational(num(rng), num(rng));
      const MPoly h = kappa * spec.h;
      const DivisorData d = build_divisor(h);
      const MPoly f = random_form(rng, d.n);
      if (f.is_zero() || !is_generic_fast(d, f)) continue;
      const BPoly spectral = spectral_pipeline(make_pair(d, f, {false})).b_h;
      const BPoly functional = bernstein_via_functional({kappa * op0.symbol}, h).b;
      if (!(spectral == functional)) return -1;
      ++local;
    }
    cases += local;
  }
  return cases;
}

bool report_line(int number, bool ok, const std::string& detail) {
  std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
  return ok;
}

}  // namespace

int main() {
  bool all = true;
  auto guarded = [&](int number, const std::function<std::pair<bool, std::string>()>& fn) {
    try {
      const auto [ok, detail] = fn();
      all = report_line(number, ok, detail) && all;
    } catch (const std::exception& e) {
      all = report_line(number, false, std::string("exception: ") + e.what()) && all;
    }
  };

  guarded(1, [] {
    bool ok = true;
    std::ostringstream d;
    for (int n = 1; n <= 6; ++n) {
      const Timed& t = get("A" + std::to_string(n));
      const bool this_ok = both_routes(t.report, BPoly::from_roots({{Rational(-1), static_cast<unsigned>(n)}})) &&
                           t.seconds < 5.0;
      ok = ok && this_ok;
      d << "A" << n << (this_ok ? " ok " : " BAD ") << t.seconds << "s; ";
    }
    return std::pair{ok, d.str()};
  });

  guarded(2, [] {
    const Timed& t = get("star3");
    const BPoly expected = BPoly::from_roots({{Rational(-4, 3), 1}, {Rational(-1), 4}, {Rational(-2, 3), 1}});
    std::ostringstream d;
    d << t.report.spectral->b_h.factored_string() << " in " << t.seconds << "s";
    return std::pair{both_routes(t.report, expected) && t.seconds < 60.0, d.str()};
  });

  guarded(3, [] {
    const auto spec = catalog("bracelet");
    const std::vector<std::string> v{"a", "b", "c", "d"};
    const bool typed_ok =
        binary_cubic_discriminant() == parse_poly("27*a^2*d^2 - 18*a*b*c*d + 4*a*c^3 + 4*b^3*d - b^2*c^2", v);
    const Timed& t = get("bracelet");
    const bool saito = saito_check(t.report.divisor.h, [&] {
                         std::vector<LinearDerivation> b{t.report.divisor.euler};
                         b.insert(b.end(), t.report.divisor.relative_fields.begin(), t.report.divisor.relative_fields.end());
                         return b;
                       }()).ok;
    const BPoly expected = BPoly::from_roots({{Rational(-7, 6), 1}, {Rational(-1), 2}, {Rational(-5, 6), 1}});
    std::ostringstream d;
    d << t.report.spectral->b_h.factored_string() << " in " << t.seconds << "s; resultant matches typed form: "
      << (typed_ok ? "yes" : "no") << "; saito: " << (saito ? "yes" : "no");
    return std::pair{typed_ok && saito && both_routes(t.report, expected) && t.seconds < 30.0, d.str()};
  });

  guarded(4, [] {
    bool ok = true;
    std::ostringstream d;
    for (int n = 1; n <= 6; ++n) ok = ok && get("A" + std::to_string(n)).report.spectral->zero == integers(0, n - 1);
    const Spectrum star = get("star3").report.spectral->zero;
    ok = ok && star == values({-2, 1, 2, 3, 4, 7});
    d << "A_n -> (0..n-1); star3 -> " << star.to_string();
    return std::pair{ok, d.str()};
  });

  guarded(5, [] {
    bool ok = true;
    std::ostringstream d;
    for (int n = 1; n <= 6; ++n) {
      ok = ok && get("A" + std::to_string(n)).report.spectral->infinity == integers(0, n - 1);
    }
    const Spectrum star = get("star3").report.spectral->infinity;
    ok = ok && star == values({1, 2, 2, 3, 3, 4});
    for (const auto& name : catalog_names()) ok = ok && get(name).report.spectral->checks.infinity_symmetric;
    d << "star3 -> " << star.to_string() << "; symmetric on all catalog entries: " << (ok ? "yes" : "no");
    return std::pair{ok, d.str()};
  });

  guarded(6, [] {
    bool ok = true;
    std::ostringstream d;
    for (const auto& name : catalog_names()) {
      const auto& c = get(name).report.spectral->checks;
      const bool this_ok = c.roots_in_open_interval && c.roots_symmetric && c.minus_one_only_integer_root && c.integer_block;
      ok = ok && this_ok;
      d << name << (this_ok ? " ok(k=" + std::to_string(*c.block_k) + ") " : " BAD ");
    }
    return std::pair{ok, d.str()};
  });

  guarded(7, [] {
    bool ok = true;
    std::ostringstream d;
    for (const auto& name : catalog_names()) {
      const bool h = get(name).report.spectral->cyclic.holds;
      ok = ok && h;
      if (!h) d << name << " fails; ";
    }
    d << "cyclic identity checked on " << catalog_names().size() << " entries";
    return std::pair{ok, d.str()};
  });

  guarded(8, [] {
    const std::vector<std::pair<std::string, std::function<int()>>> suites{
        {"reduction rule", reduction_rule_cases},     {"graded dimensions", graded_dimension_cases},
        {"decompose/reconstruct", decompose_cases},   {"f-independence", f_independence_cases},
        {"c under relabelling", c_uniqueness_cases},  {"cross-route b_h", cross_route_cases}};
    bool ok = true;
    std::ostringstream d;
    for (const auto& [name, fn] : suites) {
      const int n = fn();
      ok = ok && n > 0;
      d << name << " " << (n > 0 ? std::to_string(n) : "FAILED") << "; ";
    }
    return std::pair{ok, d.str()};
  });

  return all ? 0 : 1;
}
