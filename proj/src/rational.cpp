#include "ttba/rational.hpp"

#include "ttba/errors.hpp"

#include <cctype>

namespace ttba {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  const bool negative = !body.empty() && body.front() == '-';
  if (negative) body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view p = body.substr(0, slash);
  std::string_view q = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(p) || !all_digits(q))
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  mpz_class num(std::string(p), 10);
  mpz_class den(std::string(q), 10);
  if (den == 0) throw ParseError("zero denominator in rational \"" + std::string(text) + "\"");
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

}  // namespace ttba
