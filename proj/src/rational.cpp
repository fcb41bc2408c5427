#include "sdist/rational.hpp"

#include <cctype>
#include <string>

#include "sdist/error.hpp"

namespace sdist {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("invalid number '" + std::string(whole) + "'");
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text, bool allow_decimal) {
  if (text.empty()) throw ParseError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("invalid denominator in '" + std::string(text) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  bool is_decimal = text.find_first_of(".eE") != std::string_view::npos;
  if (!is_decimal) return Rational(parse_integer(text, text));
  if (!allow_decimal) throw ParseError("decimal literal '" + std::string(text) + "' not allowed here");

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    Integer ez = parse_integer(exp_text, text);
    if (!ez.fits_slong_p() || abs(ez) > 4096) throw ParseError("exponent out of range in '" + std::string(text) + "'");
    exponent = ez.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  std::size_t frac_len = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mantissa.substr(0, dot), fp = mantissa.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw ParseError("invalid number '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    frac_len = fp.size();
  } else {
    if (!all_digits(mantissa)) throw ParseError("invalid number '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }
  Rational q{Integer(digits, 10)};
  long shift = exponent - static_cast<long>(frac_len);
  if (shift >= 0)
    q *= Rational(pow10(static_cast<unsigned long>(shift)));
  else
    q /= Rational(pow10(static_cast<unsigned long>(-shift)));
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

}  // namespace sdist
