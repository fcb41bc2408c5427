#include "sdist/expression.hpp"

#include <cctype>
#include <string>

#include "sdist/error.hpp"

namespace sdist {
namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  Polynomial parse() {
    Polynomial result(n_);
    skip_space();
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Polynomial t = parse_term();
      if (negative) t = -t;
      result += t;
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("expected '+' or '-', found '") + peek() + "'");
      negative = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    Rational coeff(1);
    Monomial mono(n_);
    for (;;) {
      skip_space();
      if (at_end()) fail("expected a number or a variable");
      if (peek() == 'x' || peek() == 'X') {
        mono = mono * parse_variable();
      } else if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
        coeff *= parse_number();
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Polynomial::term(mono, coeff);
  }

  Monomial parse_variable() {
    ++pos_;  // 'x'
    const unsigned long k = parse_unsigned("variable index");
    if (k < 1 || k > n_)
      fail("variable x" + std::to_string(k) + " outside x1..x" + std::to_string(n_));
    unsigned long e = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      e = parse_unsigned("exponent");
      if (e < 1) fail("exponent must be >= 1");
    }
    return Monomial::variable(n_, k - 1, static_cast<std::uint32_t>(e));
  }

  unsigned long parse_unsigned(const char* what) {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    if (pos_ - start > 6) fail(std::string(what) + " too large");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    };
    digits();
    if (!at_end() && peek() == '/') {
      ++pos_;
      digits();
    } else {
      if (!at_end() && peek() == '.') {
        ++pos_;
        digits();
      }
      if (!at_end() && (peek() == 'e' || peek() == 'E')) {
        ++pos_;
        if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
        digits();
      }
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t n) {
  if (n < 1) throw DomainError("polynomial dimension must be >= 1");
  return Parser(text, n).parse();
}

}  // namespace sdist
