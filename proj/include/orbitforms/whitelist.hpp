#pragma once

#include "orbitforms/diffop.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbit {

using Params = std::map<std::string, Rational>;

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Polynomial expression in t (one variable) or t1..td, with rational literals, the named
// parameters, + - * / ^ and parentheses. Division is by constants only.
MultiPoly parse_poly_expr(const std::string& text, int nvars, const Params& params);

struct WhitelistEntry {
  std::string id, subject, reference, note;
  std::vector<std::pair<Monomial, std::string>> residual;  // derivative multi-index, coefficient text
};

const std::vector<WhitelistEntry>& whitelist();
const WhitelistEntry& whitelist_entry(const std::string& id);
PolyOp whitelist_residual(const std::string& id, int nvars, const Params& params);

enum class OffsetStatus { Exact, ReportedOffset, Fail };
std::string to_string(OffsetStatus s);

struct OffsetCheck {
  OffsetStatus status = OffsetStatus::Fail;
  PolyOp residual;
  PolyOp recorded;
  std::string detail;
};

// Exact when the residual vanishes, reported-offset when it equals the recorded one.
OffsetCheck compare_with_whitelist(const PolyOp& residual, const std::string& id, const Params& params);

}  // namespace orbit
