#include "hap/rational.hpp"

#include <cctype>

#include "hap/errors.hpp"

namespace hap {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  // strip surrounding whitespace
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw_precondition("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
      throw_precondition("malformed rational literal: " + std::string(text));
    boost::multiprecision::mpz_int n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw_precondition("zero denominator: " + std::string(text));
    return Rational(n) / Rational(d);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    bool negative = !text.empty() && text[0] == '-';
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) text.remove_prefix(1);
    dot = text.find('.');
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    std::string wh = whole.empty() ? "0" : std::string(whole);
    if (!is_integer_token(wh) || (!frac.empty() && !is_integer_token(frac)) ||
        (whole.empty() && frac.empty()))
      throw_precondition("malformed rational literal: " + std::string(text));
    Rational r{boost::multiprecision::mpz_int{wh}};
    if (!frac.empty()) {
      boost::multiprecision::mpz_int f{std::string(frac)};
      boost::multiprecision::mpz_int scale = 1;
      for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
      r += Rational(f) / Rational(scale);
    }
    return negative ? Rational(-r) : r;
  }

  if (!is_integer_token(text))
    throw_precondition("malformed rational literal: " + std::string(text));
  return Rational(boost::multiprecision::mpz_int{std::string(text)});
}

std::string format_rational(const Rational& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace hap
