#include "rootmat/scalar.hpp"

#include <cctype>
#include <string>

namespace rootmat {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class n(strip_plus(num)), d(strip_plus(den));
  if (sgn(d) == 0) throw DivisionByZero();
  return Rational(n, d);
}

std::string Rational::str() const { return value_.get_str(); }

int QuadExt::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with 5 b^2
  auto lhs = a_ * a_;
  auto rhs = Rational(5) * b_ * b_;
  if (lhs == rhs) return 0;  // unreachable for rationals, kept exact
  return lhs > rhs ? sa : sb;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational n = norm();
  return QuadExt(a_ / n, -b_ / n);
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Rational a = a_ * o.a_ + Rational(5) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

// Grammar: <rational> [ ('+'|'-') <rational> '*sqrt5' ]   or   <rational>'*sqrt5'
QuadExt QuadExt::parse(std::string_view text) {
  constexpr std::string_view kRoot = "*sqrt5";
  if (text.size() > kRoot.size() && text.ends_with(kRoot)) {
    std::string_view body = text.substr(0, text.size() - kRoot.size());
    // split point: last '+' or '-' that is not the leading sign and not
    // directly following another sign
    for (std::size_t i = body.size(); i-- > 1;) {
      char c = body[i];
      if ((c == '+' || c == '-') && body[i - 1] != '+' && body[i - 1] != '-') {
        Rational a = Rational::parse(body.substr(0, i));
        // rest may carry its own sign, as in "a+-b*sqrt5"
        Rational b = Rational::parse(body.substr(i + 1));
        return QuadExt(a, c == '-' ? -b : b);
      }
    }
    return QuadExt(Rational(0), Rational::parse(body));
  }
  return QuadExt(Rational::parse(text));
}

std::string QuadExt::str() const {
  std::string out = a_.str();
  if (b_.sign() < 0) {
    out += "-" + (-b_).str();
  } else {
    out += "+" + b_.str();
  }
  out += "*sqrt5";
  return out;
}

QuadExt galois(const QuadExt& x) { return QuadExt(x.rational_part(), -x.sqrt5_part()); }

QuadExt golden_ratio() { return QuadExt(Rational(1, 2), Rational(1, 2)); }

}  // namespace rootmat
