#include "siltwb/field.hpp"

namespace siltwb {

Field Field::prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("field characteristic must be an odd prime");
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) throw std::invalid_argument("field characteristic must be prime");
  return Field(p);
}

Field Field::rationals() { return Field(0); }

Field Field::parse(const std::string& spec) {
  if (spec == "Q" || spec == "q" || spec == "rational" || spec == "rationals")
    return rationals();
  return prime(std::stoull(spec));
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

namespace {

long long mod_reduce(long long v, long long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

// extended Euclid inverse of a mod p, a != 0
long long mod_inverse(long long a, long long p) {
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  return mod_reduce(t, p);
}

}  // namespace

Scalar::Scalar(const Field& f, long long v) : field_(f) {
  if (f.is_rational()) { rat_ = v; fp_ = 0; }
  else fp_ = mod_reduce(v, (long long)f.characteristic());
}

Scalar::Scalar(const Field& f, const BigRat& v) : field_(f) {
  if (f.is_rational()) { rat_ = v; fp_ = 0; }
  else {
    long long p = (long long)f.characteristic();
    using boost::multiprecision::cpp_int;
    cpp_int num = numerator(v) % p, den = denominator(v) % p;
    long long n = mod_reduce((long long)num, p);
    long long d = mod_reduce((long long)den, p);
    if (d == 0) throw std::invalid_argument("rational with denominator divisible by p");
    fp_ = (n * mod_inverse(d, p)) % p;
  }
}

bool Scalar::is_zero() const { return field_.is_rational() ? rat_ == 0 : fp_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? rat_ == 1 : fp_ == 1; }

void Scalar::check(const Scalar& o) const {
  if (field_ != o.field_) throw FieldMismatch("mixing scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  if (field_.is_rational()) return Scalar(field_, BigRat(rat_ + o.rat_));
  return Scalar(field_, fp_ + o.fp_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  if (field_.is_rational()) return Scalar(field_, BigRat(rat_ - o.rat_));
  return Scalar(field_, fp_ - o.fp_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  if (field_.is_rational()) return Scalar(field_, BigRat(rat_ * o.rat_));
  return Scalar(field_, fp_ * o.fp_);
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, BigRat(-rat_));
  return Scalar(field_, -fp_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (field_.is_rational()) return Scalar(field_, BigRat(1 / rat_));
  return Scalar(field_, mod_inverse(fp_, (long long)field_.characteristic()));
}

bool Scalar::operator==(const Scalar& o) const {
  check(o);
  return field_.is_rational() ? rat_ == o.rat_ : fp_ == o.fp_;
}

std::string Scalar::str() const {
  return field_.is_rational() ? rat_.str() : std::to_string(fp_);
}

long long Scalar::residue() const {
  if (field_.is_rational()) throw std::logic_error("residue() on rational scalar");
  return fp_;
}

const BigRat& Scalar::rational() const {
  if (!field_.is_rational()) throw std::logic_error("rational() on prime-field scalar");
  return rat_;
}

}  // namespace siltwb
