#include "knotcalc/rational.hpp"

#include <cctype>

#include "knotcalc/errors.hpp"

namespace knotcalc {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) throw ParseError("empty rational literal");

  mpq_class v;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den) || den == "0")
      throw ParseError("bad rational literal '" + text + "'");
    v = mpq_class(mpz_class(num, 10), mpz_class(den, 10));
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string intpart = s.substr(0, dot), frac = s.substr(dot + 1);
    if (intpart.empty()) intpart = "0";
    if (!all_digits(intpart) || (!frac.empty() && !all_digits(frac)))
      throw ParseError("bad decimal literal '" + text + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class whole =
        mpz_class(intpart, 10) * scale + (frac.empty() ? mpz_class(0) : mpz_class(frac, 10));
    v = mpq_class(whole, scale);
  } else {
    if (!all_digits(s)) throw ParseError("bad integer literal '" + text + "'");
    v = mpq_class(mpz_class(s, 10));
  }
  v.canonicalize();
  return neg ? mpq_class(-v) : v;
}

std::string rational_to_string(const mpq_class& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  // Exact finite decimal when the denominator is 2^a * 5^b.
  mpz_class den = v.get_den();
  unsigned long twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den == 1) {
    unsigned long digits = std::max(twos, fives);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class scaled = v.get_num() * (scale / v.get_den());
    bool neg = scaled < 0;
    std::string body = mpz_class(abs(scaled)).get_str();
    if (body.size() <= digits) body.insert(0, digits - body.size() + 1, '0');
    body.insert(body.size() - digits, ".");
    return (neg ? "-" : "") + body;
  }
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace knotcalc
