#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "seshadri/error.hpp"
#include "seshadri/rootsys.hpp"
#include "seshadri/weyl.hpp"

namespace seshadri {

/// Textual case description as given on the command line.
struct CaseSpec {
  std::string type;    // "A3"
  std::string lambda;  // "0,1,0"
  std::string tau;     // "1 2 1", "" or "longest"
};

struct ResolvedCase {
  RootSystem rs;
  Weight lambda;
  WeylElement tau;  // minimal coset representative
};

inline Weight parse_lambda(const std::string& text, std::size_t rank) {
  std::vector<std::int64_t> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorCode::bad_input, "empty lambda coordinate");
    const Rational r = Rational::parse(item.substr(b, e - b + 1));
    if (!r.is_integer()) throw Error(ErrorCode::bad_input, "lambda coordinates must be integers");
    coords.push_back(r.num());
  }
  if (coords.size() != rank)
    throw Error(ErrorCode::bad_input, "lambda needs " + std::to_string(rank) + " coordinates");
  return Weight(std::move(coords));
}

inline Word parse_word(const std::string& text) {
  Word w;
  std::stringstream ss(text);
  std::string item;
  while (ss >> item) {
    const Rational r = Rational::parse(item);
    if (!r.is_integer()) throw Error(ErrorCode::bad_index, "malformed reflection index '" + item + "'");
    w.push_back(static_cast<int>(r.num()));
  }
  return w;
}

/// Validates the case: lambda dominant and nonzero, tau a reduced word (or
/// "longest"); tau is then replaced by the minimal representative of its coset.
inline ResolvedCase resolve_case(const CaseSpec& spec) {
  RootSystem rs(CartanKind::parse(spec.type));
  Weight lambda = parse_lambda(spec.lambda, rs.rank());
  if (!rs.is_dominant(lambda)) throw Error(ErrorCode::not_dominant, "lambda is not dominant");
  if (lambda.is_zero()) throw Error(ErrorCode::not_dominant, "lambda must be nonzero");
  WeylElement tau;
  if (spec.tau == "longest") {
    tau = longest_minimal_rep(rs, lambda);
  } else {
    const Word word = parse_word(spec.tau);
    check_word(rs, word);
    if (!is_reduced(rs, word)) throw Error(ErrorCode::not_reduced, "tau word '" + spec.tau + "' is not reduced");
    tau = minimal_rep(rs, element_from_word(rs, word), ParabolicSupport::of(lambda));
  }
  return ResolvedCase{std::move(rs), std::move(lambda), std::move(tau)};
}

}  // namespace seshadri
