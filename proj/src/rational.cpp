// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "speclab/rational.hpp"

#include <climits>
#include <ostream>

#include "speclab/errors.hpp"

namespace speclab {

namespace {

mpz_class fromInt64(std::int64_t v) {
  // mpz_class has no int64 constructor on every platform; go through strings
  // only for values outside long's range.
  if (v >= LONG_MIN && v <= LONG_MAX) return mpz_class(static_cast<long>(v));
  return mpz_class(std::to_string(v));
}

std::optional<std::int64_t> toInt64(const mpz_class& z) {
  if (!z.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace

Rational::Rational(std::int64_t value) : q_(fromInt64(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(fromInt64(num), fromInt64(den));
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
  if (q_.get_den() == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw DomainError("not a rational: " + text);
  return Rational(q);
}

std::string Rational::numerator() const { return q_.get_num().get_str(); }
std::string Rational::denominator() const { return q_.get_den().get_str(); }
std::optional<std::int64_t> Rational::numeratorInt() const { return toInt64(q_.get_num()); }
std::optional<std::int64_t> Rational::denominatorInt() const { return toInt64(q_.get_den()); }

double Rational::toDouble() const { return q_.get_d(); }

std::string Rational::str() const { return q_.get_str(); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw DomainError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.q_, b.q_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace speclab
