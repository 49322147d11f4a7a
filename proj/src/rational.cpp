#include "orbitforms/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace orbit {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view p = text.substr(0, slash);
  std::string_view q = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(p) || !is_integer_literal(q) || q.front() == '-' || q.front() == '+')
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  std::string ps(p);
  if (ps.front() == '+') ps.erase(0, 1);
  Integer a(ps), b{std::string(q)};
  if (b == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(a, b);
}

std::string to_string(const Rational& q) { return q.str(); }

Rational random_rational(std::mt19937_64& rng, int max_num, int max_den, bool allow_zero) {
  std::uniform_int_distribution<int> n(-max_num, max_num), d(1, max_den);
  for (;;) {
    int a = n(rng);
    if (a == 0 && !allow_zero) continue;
    return Rational(a, d(rng));
  }
}

}  // namespace orbit
