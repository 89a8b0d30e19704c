#ifndef ISGAL_SCALAR_HPP
#define ISGAL_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace isgal {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class FieldKind { Rational, ModP };

/// Choice of exact base field: arbitrary-precision rationals or Z/p.
struct Field {
  FieldKind kind = FieldKind::Rational;
  std::int64_t p = 0;  // modulus, prime, only for ModP

  static Field rationals() { return {FieldKind::Rational, 0}; }
  static Field mod(std::int64_t p);

  bool operator==(const Field&) const = default;
  std::string describe() const;
};

/// An exact field element. Every Scalar carries its field; mixing fields throws.
class Scalar {
 public:
  using Rational = boost::multiprecision::cpp_rational;

  Scalar() : field_(Field::rationals()), q_(0), r_(0) {}
  Scalar(const Field& f, std::int64_t value);

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  static Scalar rational(const Rational& q);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  Rational q_;       // Rational payload
  std::int64_t r_;   // ModP payload, in [0, p)
};

}  // namespace isgal

#endif
