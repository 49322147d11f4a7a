#include "orbitforms/whitelist.hpp"

#include "orbitforms/whitelist_data.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>

namespace orbit {

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& s, int d, const Params& p) : s_(s), d_(d), params_(p) {}

  MultiPoly parse() {
    MultiPoly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("in '" + s_ + "' at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  MultiPoly term() {
    MultiPoly v = power();
    for (;;) {
      if (eat('*')) {
        v = v * power();
      } else if (eat('/')) {
        const MultiPoly q = power();
        if (!q.is_constant() || q.is_zero()) fail("division by a non-constant or zero");
        v *= 1 / q.constant_term();
      } else {
        return v;
      }
    }
  }
  MultiPoly power() {
    MultiPoly base = unary();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
    }
    return base;
  }
  MultiPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }
  MultiPoly primary() {
    skip();
    if (eat('(')) {
      MultiPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly(d_, Rational(Integer(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string id = s_.substr(start, pos_ - start);
      if (auto it = params_.find(id); it != params_.end()) return MultiPoly(d_, it->second);
      if (id == "t" && d_ == 1) return MultiPoly::variable(1, 0);
      if (id.size() > 1 && id[0] == 't' && std::all_of(id.begin() + 1, id.end(), ::isdigit)) {
        const int i = std::stoi(id.substr(1));
        if (i >= 1 && i <= d_) return MultiPoly::variable(d_, i - 1);
      }
      fail("unknown name '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int d_;
  const Params& params_;
};

std::vector<WhitelistEntry> load() {
  const auto j = nlohmann::json::parse(detail::whitelist_json);
  std::vector<WhitelistEntry> out;
  for (const auto& e : j.at("entries")) {
    WhitelistEntry w;
    w.id = e.at("id").get<std::string>();
    w.subject = e.value("subject", "");
    w.reference = e.value("reference", "");
    w.note = e.value("note", "");
    for (const auto& t : e.at("residual"))
      w.residual.emplace_back(t.at("derivative").get<std::vector<int>>(), t.at("coefficient").get<std::string>());
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

MultiPoly parse_poly_expr(const std::string& text, int nvars, const Params& params) {
  return ExprParser(text, nvars, params).parse();
}

const std::vector<WhitelistEntry>& whitelist() {
  static const std::vector<WhitelistEntry> entries = load();
  return entries;
}

const WhitelistEntry& whitelist_entry(const std::string& id) {
  for (const auto& e : whitelist())
    if (e.id == id) return e;
  throw std::out_of_range("no whitelist entry '" + id + "'");
}

PolyOp whitelist_residual(const std::string& id, int nvars, const Params& params) {
  PolyOp op(nvars);
  for (const auto& [alpha, text] : whitelist_entry(id).residual) {
    if (static_cast<int>(alpha.size()) != nvars) throw DimensionError("whitelist entry '" + id + "' has wrong arity");
    op.add_term(alpha, parse_poly_expr(text, nvars, params));
  }
  return op;
}

std::string to_string(OffsetStatus s) {
  switch (s) {
    case OffsetStatus::Exact: return "pass";
    case OffsetStatus::ReportedOffset: return "reported-offset";
    case OffsetStatus::Fail: return "fail";
  }
  return "?";
}

OffsetCheck compare_with_whitelist(const PolyOp& residual, const std::string& id, const Params& params) {
  OffsetCheck c;
  c.residual = residual;
  c.recorded = whitelist_residual(id, residual.nvars(), params);
  if (residual.is_zero()) {
    c.status = OffsetStatus::Exact;
    c.detail = "no offset";
  } else if (residual == c.recorded) {
    c.status = OffsetStatus::ReportedOffset;
    c.detail = "offset " + to_string(residual) + " matches whitelist '" + id + "'";
  } else {
    c.status = OffsetStatus::Fail;
    c.detail = "offset " + to_string(residual) + " differs from recorded " + to_string(c.recorded);
  }
  return c;
}

}  // namespace orbit
