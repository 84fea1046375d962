#include "lieforge/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "lieforge/errors.hpp"

namespace lieforge {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                     mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  mpq_class value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw InvalidArgument("malformed rational '" + original + "'");
    }
    mpz_class d{std::string(den)};
    if (d == 0) throw InvalidArgument("zero denominator in '" + original + "'");
    value = mpq_class(mpz_class{std::string(num)}, d);
    value.canonicalize();
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw InvalidArgument("malformed rational '" + original + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole));
    const mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac));
    value = mpq_class(w * scale + f, scale);
  } else {
    if (!all_digits(s)) throw InvalidArgument("malformed rational '" + original + "'");
    value = mpq_class(mpz_class(std::string(s)));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(std::move(value));
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw InvalidArgument("rational " + to_string() + " is not an integer");
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw InvalidArgument("integer " + to_string() + " out of range");
  return n.get_si();
}

double Rational::to_double() const { return value_.get_d(); }

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DomainError("zero raised to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.value_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.value_.get_den_mpz_t(), e);
  return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace lieforge
