#include "amc/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace amc {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("not an integer literal: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(mpq_class(parse_integer(text)));
  }
  mpz_class num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("sign not allowed in denominator: '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(mpq_class(num, den));
}

std::string Rational::numerator() const { return value_.get_num().get_str(); }
std::string Rational::denominator() const { return value_.get_den().get_str(); }

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw std::domain_error("not an integer: " + str());
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw std::domain_error("integer out of range: " + str());
  return n.get_si();
}

std::int64_t Rational::mod(std::int64_t m) const {
  if (!is_integer()) throw std::domain_error("residue of non-integer: " + str());
  if (m <= 0) throw std::invalid_argument("modulus must be positive");
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value_.get_num().get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  mpz_class num = abs(value_.get_num());
  const mpz_class& den = value_.get_den();
  mpz_class whole = num / den;
  mpz_class rem = num % den;
  std::string out = sgn(value_) < 0 ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      mpz_class q = rem / den;
      rem %= den;
      out += static_cast<char>('0' + q.get_si());
    }
  }
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

void Rational::submul(const Rational& a, const Rational& b) {
  mpq_t t;
  mpq_init(t);
  mpq_mul(t, a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), t);
  mpq_clear(t);
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace amc
