#ifndef LFD_ERROR_HPP
#define LFD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lfd {

enum class ErrorCode {
  Syntax,
  UnknownVariable,
  MismatchedVariables,
  NonSquare,
  NonRationalSpectrum,
  WrongCount,
  NotLinearFree,
  DegreeMismatch,
  NotClosed,
  NotLinear,
  NoDecomposition,
  WindowUnstable,
  NotProportional,
  UnknownCatalogEntry,
  InvalidInput,
  TooLarge,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::MismatchedVariables: return "MismatchedVariables";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonRationalSpectrum: return "NonRationalSpectrum";
    case ErrorCode::WrongCount: return "WrongCount";
    case ErrorCode::NotLinearFree: return "NotLinearFree";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::NoDecomposition: return "NoDecomposition";
    case ErrorCode::WindowUnstable: return "WindowUnstable";
    case ErrorCode::NotProportional: return "NotProportional";
    case ErrorCode::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

/// Every failure raised by the library. `module()` names the component that
/// detected it (exactalg, freediv, defalg, brieskorn, bfunctional, cli).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& message)
      : std::runtime_error(message), code_(code), module_(std::move(module)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorCode code_;
  std::string module_;
};

}  // namespace lfd

#endif  // LFD_ERROR_HPP
