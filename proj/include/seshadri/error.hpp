#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seshadri {

enum class ErrorCode {
  bad_kind,
  bad_index,
  bad_input,
  not_reduced,
  not_dominant,
  not_minrep,
  overflow,
  no_cover_root,
  ambiguous_bond,
  not_comparable,
  empty_chain,
  gcd_mismatch,
  too_many_chains,
  support,
  too_many,
  not_ls_path,
  too_many_linext,
  negative_mult,
  decomp_fail,
  not_degree_one,
  standard_input,
  fit_mismatch,
  degree_mismatch,
};

/// Broad class of a failure; the CLI maps these onto exit codes.
enum class ErrorClass {
  input,         // malformed or out-of-contract arguments
  resource,      // a configurable cap or checked-arithmetic overflow
  verification,  // an identity that should hold did not
};

constexpr std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::bad_kind: return "E_BAD_KIND";
    case ErrorCode::bad_index: return "E_BAD_INDEX";
    case ErrorCode::bad_input: return "E_BAD_INPUT";
    case ErrorCode::not_reduced: return "E_NOT_REDUCED";
    case ErrorCode::not_dominant: return "E_NOT_DOMINANT";
    case ErrorCode::not_minrep: return "E_NOT_MINREP";
    case ErrorCode::overflow: return "E_OVERFLOW";
    case ErrorCode::no_cover_root: return "E_NO_COVER_ROOT";
    case ErrorCode::ambiguous_bond: return "E_AMBIGUOUS_BOND";
    case ErrorCode::not_comparable: return "E_NOT_COMPARABLE";
    case ErrorCode::empty_chain: return "E_EMPTY_CHAIN";
    case ErrorCode::gcd_mismatch: return "E_GCD_MISMATCH";
    case ErrorCode::too_many_chains: return "E_TOO_MANY_CHAINS";
    case ErrorCode::support: return "E_SUPPORT";
    case ErrorCode::too_many: return "E_TOO_MANY";
    case ErrorCode::not_ls_path: return "E_NOT_LS_PATH";
    case ErrorCode::too_many_linext: return "E_TOO_MANY_LINEXT";
    case ErrorCode::negative_mult: return "E_NEGATIVE_MULT";
    case ErrorCode::decomp_fail: return "E_DECOMP_FAIL";
    case ErrorCode::not_degree_one: return "E_NOT_DEGREE_ONE";
    case ErrorCode::standard_input: return "E_STANDARD_INPUT";
    case ErrorCode::fit_mismatch: return "E_FIT_MISMATCH";
    case ErrorCode::degree_mismatch: return "E_DEGREE_MISMATCH";
  }
  return "E_UNKNOWN";
}

constexpr ErrorClass classify(ErrorCode code) {
  switch (code) {
    case ErrorCode::overflow:
    case ErrorCode::too_many_chains:
    case ErrorCode::too_many:
    case ErrorCode::too_many_linext:
      return ErrorClass::resource;
    case ErrorCode::no_cover_root:
    case ErrorCode::ambiguous_bond:
    case ErrorCode::gcd_mismatch:
    case ErrorCode::negative_mult:
    case ErrorCode::decomp_fail:
    case ErrorCode::fit_mismatch:
    case ErrorCode::degree_mismatch:
      return ErrorClass::verification;
    default:
      return ErrorClass::input;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorClass error_class() const noexcept { return classify(code_); }

 private:
  ErrorCode code_;
};

}  // namespace seshadri
