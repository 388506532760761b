#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace siltwb {

using BigRat = boost::multiprecision::cpp_rational;

struct FieldMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

/// Ground field of a computation session: a prime field F_p (p an odd
/// prime) or the rationals.  All scalars of one session carry the same
/// field tag; arithmetic across different fields throws FieldMismatch.
class Field {
public:
  Field() : p_(101) {}

  static Field prime(std::uint64_t p);
  static Field rationals();
  static Field parse(const std::string& spec);  // "101", "Q", ...

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;  // 0 encodes the rationals
};

/// Exact scalar over the session field.
class Scalar {
public:
  Scalar() : field_(), fp_(0) {}
  Scalar(const Field& f, long long v);
  Scalar(const Field& f, const BigRat& v);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // throws on zero
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

  /// Integer value for F_p scalars (in [0, p)); throws over Q.
  long long residue() const;
  const BigRat& rational() const;

private:
  void check(const Scalar& o) const;
  Field field_;
  long long fp_;  // used iff !field_.is_rational()
  BigRat rat_;    // used iff field_.is_rational()
};

}  // namespace siltwb
