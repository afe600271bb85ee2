#ifndef LFD_CALIBRATION_HPP
#define LFD_CALIBRATION_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "lfd/brieskorn.hpp"
#include "lfd/catalog.hpp"
#include "lfd/defalg.hpp"
#include "lfd/freediv.hpp"

namespace lfd {

// The sign of the residue, the n^{-n} normalization and the strictness of
// both filtrations are pinned by three known answers. A change in any
// convention breaks at least one of them.

struct CalibrationPoint {
  std::string name;
  bool ok = false;
  std::string detail;
};

namespace detail {

inline SpectralResult calibration_run(const std::string& name) {
  const ParsedSpec spec = parse_spec(catalog(name));
  const DivisorData div = build_divisor(spec.h);
  return spectral_pipeline(make_pair(div, find_generic_form(div).f, PairOptions{false}));
}

inline Spectrum spectrum_of_integers(std::initializer_list<long> v) {
  Spectrum s;
  for (long x : v) s.values.emplace_back(x);
  return s;
}

}  // namespace detail

inline std::vector<CalibrationPoint> run_calibration() {
  std::vector<CalibrationPoint> out;
  {
    const auto r = detail::calibration_run("A1");
    const bool ok = r.b_h.poly == QPoly::linear_factor(-1);
    out.push_back({"A1 Bernstein polynomial is s+1", ok, r.b_h.factored_string()});
  }
  {
    const auto r = detail::calibration_run("A3");
    const Spectrum expect = detail::spectrum_of_integers({0, 1, 2});
    const bool ok = r.zero == expect && r.infinity == expect;
    out.push_back({"A3 spectra are (0,1,2) at zero and infinity", ok, r.zero.to_string() + " " + r.infinity.to_string()});
  }
  {
    const auto r = detail::calibration_run("star3");
    const bool ok = r.infinity == detail::spectrum_of_integers({1, 2, 2, 3, 3, 4});
    out.push_back({"star3 spectrum at infinity is {1,2,2,3,3,4}", ok, r.infinity.to_string()});
  }
  return out;
}

}  // namespace lfd

#endif  // LFD_CALIBRATION_HPP
