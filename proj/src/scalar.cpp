#include "isgal/scalar.hpp"

namespace isgal {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

// extended gcd based inverse mod p
std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error("mod_inv: not invertible");
  return mod_norm(t, p);
}

}  // namespace

Field Field::mod(std::int64_t p) {
  if (!is_prime(p)) throw Error("Field::mod: modulus " + std::to_string(p) + " is not prime");
  return {FieldKind::ModP, p};
}

std::string Field::describe() const {
  return kind == FieldKind::Rational ? "Q" : "Z/" + std::to_string(p);
}

Scalar::Scalar(const Field& f, std::int64_t value) : field_(f), q_(0), r_(0) {
  if (f.kind == FieldKind::Rational)
    q_ = value;
  else
    r_ = mod_norm(value, f.p);
}

Scalar Scalar::rational(const Rational& q) {
  Scalar s(Field::rationals(), 0);
  s.q_ = q;
  return s;
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_) throw Error("Scalar: mixed fields " + field_.describe() + " / " + o.field_.describe());
}

bool Scalar::is_zero() const {
  return field_.kind == FieldKind::Rational ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldKind::Rational ? q_ == 1 : r_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar out(field_, 0);
  if (field_.kind == FieldKind::Rational)
    out.q_ = q_ + o.q_;
  else
    out.r_ = mod_norm(r_ + o.r_, field_.p);
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar out(field_, 0);
  if (field_.kind == FieldKind::Rational)
    out.q_ = q_ - o.q_;
  else
    out.r_ = mod_norm(r_ - o.r_, field_.p);
  return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar out(field_, 0);
  if (field_.kind == FieldKind::Rational)
    out.q_ = q_ * o.q_;
  else
    out.r_ = mod_norm(r_ * o.r_, field_.p);
  return out;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  if (o.is_zero()) throw Error("Scalar: division by zero");
  Scalar out(field_, 0);
  if (field_.kind == FieldKind::Rational)
    out.q_ = q_ / o.q_;
  else
    out.r_ = mod_norm(r_ * mod_inv(o.r_, field_.p), field_.p);
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out(field_, 0);
  if (field_.kind == FieldKind::Rational)
    out.q_ = -q_;
  else
    out.r_ = mod_norm(-r_, field_.p);
  return out;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return field_.kind == FieldKind::Rational ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  return field_.kind == FieldKind::Rational ? q_.str() : std::to_string(r_);
}

}  // namespace isgal
