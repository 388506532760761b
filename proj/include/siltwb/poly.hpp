#pragma once

#include <vector>

#include "siltwb/field.hpp"
#include "siltwb/matrix.hpp"

namespace siltwb::poly {

/// Polynomials are coefficient vectors, lowest degree first, normalized
/// so the leading coefficient is nonzero (zero polynomial = empty vector).
using Poly = std::vector<Scalar>;

Poly normalize(Poly p);
Poly make_monic(const Poly& p);
int degree(const Poly& p);  // -1 for zero
Poly mul(const Poly& a, const Poly& b);
Poly add(const Poly& a, const Poly& b);
/// quotient/remainder by a nonzero divisor
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic
Poly derivative(const Poly& p);
Scalar evaluate(const Poly& p, const Scalar& x);
/// p(x) = q(x) * (x - r)^k with q(r) != 0; returns k and q
std::pair<int, Poly> strip_root(const Poly& p, const Scalar& r);

/// Monic minimal polynomial of a square matrix.
Poly min_poly(const Matrix& m);

/// x^e mod f in F_p[x]/(f) style arithmetic (e as big power via repeated squaring).
Poly pow_mod(const Poly& base, const boost::multiprecision::cpp_int& e, const Poly& f);

/// A nontrivial coprime factorization f = f1 * f2 (gcd = 1, both of
/// positive degree), if one can be found.  Complete over F_p; over Q it
/// uses the x-part, rational roots and squarefree splitting only.
std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& f, unsigned seed = 1);

/// Irreducibility over the coefficient field; complete over F_p, and over
/// Q for degree <= 3.  Throws for higher-degree rational polynomials.
bool is_irreducible(const Poly& f);

}  // namespace siltwb::poly
