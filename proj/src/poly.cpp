#include "siltwb/poly.hpp"

#include <algorithm>
#include <random>

namespace siltwb::poly {

Poly normalize(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int degree(const Poly& p) { return (int)p.size() - 1; }

Poly make_monic(const Poly& p) {
  Poly q = normalize(p);
  if (q.empty()) return q;
  Scalar inv = q.back().inverse();
  for (auto& c : q) c = c * inv;
  return q;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  const Field& f = a[0].field();
  Poly r(a.size() + b.size() - 1, Scalar(f, 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return normalize(r);
}

Poly add(const Poly& a, const Poly& b) {
  const Poly& longer = a.size() >= b.size() ? a : b;
  const Poly& shorter = a.size() >= b.size() ? b : a;
  Poly r = longer;
  for (size_t i = 0; i < shorter.size(); ++i) r[i] = r[i] + shorter[i];
  return normalize(r);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  Poly rem = normalize(a), divisor = normalize(b);
  if (divisor.empty()) throw std::domain_error("polynomial division by zero");
  const Field& f = divisor[0].field();
  int db = degree(divisor);
  if (degree(rem) < db) return {{}, rem};
  Poly quot(degree(rem) - db + 1, Scalar(f, 0));
  Scalar lead_inv = divisor.back().inverse();
  while (degree(rem) >= db) {
    int shift = degree(rem) - db;
    Scalar c = rem.back() * lead_inv;
    quot[shift] = c;
    for (int j = 0; j <= db; ++j) rem[shift + j] = rem[shift + j] - c * divisor[j];
    rem = normalize(rem);
  }
  return {normalize(quot), rem};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = normalize(a), y = normalize(b);
  while (!y.empty()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  const Field& f = p[0].field();
  Poly d(p.size() - 1, Scalar(f, 0));
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Scalar(f, (long long)i);
  return normalize(d);
}

Scalar evaluate(const Poly& p, const Scalar& x) {
  Scalar r(x.field(), 0);
  for (int i = (int)p.size() - 1; i >= 0; --i) r = r * x + p[i];
  return r;
}

std::pair<int, Poly> strip_root(const Poly& p, const Scalar& r) {
  const Field& f = r.field();
  Poly q = normalize(p);
  Poly lin{-r, Scalar(f, 1)};
  int k = 0;
  while (!q.empty() && evaluate(q, r).is_zero()) {
    q = divmod(q, lin).first;
    ++k;
  }
  return {k, q};
}

Poly min_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("min_poly of non-square matrix");
  const Field& f = m.field();
  int n = m.rows();
  if (n == 0) return {Scalar(f, 1)};
  std::vector<Matrix> powers{Matrix::identity(f, n)};
  for (int d = 1;; ++d) {
    powers.push_back(powers.back() * m);
    Matrix sys(f, n * n, d);
    std::vector<Scalar> rhs;
    rhs.reserve((size_t)n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < d; ++k) sys.at(i * n + j, k) = powers[k].at(i, j);
        rhs.push_back(powers[d].at(i, j));
      }
    if (auto c = sys.solve(rhs)) {
      Poly p(d + 1, Scalar(f, 0));
      for (int k = 0; k < d; ++k) p[k] = -(*c)[k];
      p[d] = Scalar(f, 1);
      return p;
    }
  }
}

Poly pow_mod(const Poly& base, const boost::multiprecision::cpp_int& e, const Poly& f) {
  const Field& fld = f[0].field();
  Poly result{Scalar(fld, 1)};
  Poly b = divmod(base, f).second;
  boost::multiprecision::cpp_int k = e;
  while (k > 0) {
    if (k % 2 == 1) result = divmod(mul(result, b), f).second;
    b = divmod(mul(b, b), f).second;
    k /= 2;
  }
  return result;
}

namespace {

std::vector<Scalar> rational_roots(const Poly& p) {
  using boost::multiprecision::cpp_int;
  const Field& f = p[0].field();
  cpp_int lcm = 1;
  for (const auto& c : p) lcm = boost::multiprecision::lcm(lcm, denominator(c.rational()));
  std::vector<cpp_int> ic;
  for (const auto& c : p) ic.push_back(numerator(c.rational() * BigRat(lcm)));
  while (!ic.empty() && ic.back() == 0) ic.pop_back();
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  std::vector<Scalar> roots;
  if (low > 0 && low < ic.size()) roots.push_back(Scalar(f, 0));
  if (low >= ic.size()) return roots;
  auto divisors = [](cpp_int v) {
    std::vector<cpp_int> ds;
    v = abs(v);
    for (cpp_int d = 1; d * d <= v; ++d)
      if (v % d == 0) { ds.push_back(d); ds.push_back(v / d); }
    return ds;
  };
  for (const cpp_int& num : divisors(ic[low]))
    for (const cpp_int& den : divisors(ic.back()))
      for (int s : {1, -1}) {
        Scalar cand(f, BigRat(s * num, den));
        if (evaluate(p, cand).is_zero()) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end(), [](const Scalar& a, const Scalar& b) {
    return a.rational() < b.rational();
  });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Scalar> all_roots(const Poly& p) {
  const Field& f = p[0].field();
  if (f.is_rational()) return rational_roots(p);
  std::vector<Scalar> roots;
  for (long long v = 0; v < (long long)f.characteristic(); ++v) {
    Scalar c(f, v);
    if (evaluate(p, c).is_zero()) roots.push_back(c);
  }
  return roots;
}

// split a squarefree polynomial with no roots in the field (F_p only)
std::optional<std::pair<Poly, Poly>> split_squarefree(const Poly& f, unsigned seed) {
  const Field& fld = f[0].field();
  if (fld.is_rational()) return std::nullopt;
  using boost::multiprecision::cpp_int;
  cpp_int p = fld.characteristic();
  Poly x{Scalar(fld, 0), Scalar(fld, 1)};
  cpp_int q = 1;
  for (int d = 1; 2 * d <= degree(f); ++d) {
    q *= p;
    Poly xqd = pow_mod(x, q, f);
    Poly diff = add(xqd, {Scalar(fld, 0), Scalar(fld, -1)});  // x^(p^d) - x
    Poly part = gcd(diff, f);
    if (degree(part) > 0 && degree(part) < degree(f))
      return std::make_pair(part, divmod(f, part).first);
    if (degree(part) == degree(f) && degree(f) > d) {
      // all factors of degree d; Cantor-Zassenhaus equal-degree splitting
      std::mt19937 rng(seed);
      std::uniform_int_distribution<long long> dist(0, (long long)fld.characteristic() - 1);
      cpp_int e = (q - 1) / 2;
      for (int tries = 0; tries < 128; ++tries) {
        Poly r(degree(f), Scalar(fld, 0));
        for (auto& c : r) c = Scalar(fld, dist(rng));
        r = normalize(r);
        if (degree(r) < 1) continue;
        Poly t = add(pow_mod(r, e, f), {Scalar(fld, -1)});
        Poly cand = gcd(t, f);
        if (degree(cand) > 0 && degree(cand) < degree(f))
          return std::make_pair(cand, divmod(f, cand).first);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;  // irreducible
}

}  // namespace

std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& f_in, unsigned seed) {
  Poly f = make_monic(f_in);
  if (degree(f) < 2) return std::nullopt;
  const Field& fld = f[0].field();

  // (x - r)^k factors first
  for (const Scalar& r : all_roots(f)) {
    auto [k, rest] = strip_root(f, r);
    if (k > 0 && degree(rest) > 0) {
      Poly part{Scalar(fld, 1)};
      Poly lin{-r, Scalar(fld, 1)};
      for (int i = 0; i < k; ++i) part = mul(part, lin);
      return std::make_pair(part, make_monic(rest));
    }
  }

  Poly g = gcd(f, derivative(f));
  Poly s = degree(g) > 0 ? divmod(f, g).first : f;  // squarefree part (or f itself)
  if (degree(s) == degree(f)) return split_squarefree(f, seed);

  // f is not squarefree: split its squarefree part, then lift each piece
  // to the corresponding primary part of f
  std::optional<std::pair<Poly, Poly>> sub;
  if (degree(s) >= 2) sub = coprime_split(s, seed);
  if (!sub) return std::nullopt;  // f is a power of a single irreducible
  Poly s1 = sub->first;
  // s1-primary part of f: gcd(f, s1^deg f)
  Poly s1pow{Scalar(fld, 1)};
  for (int i = 0; i < degree(f); ++i) s1pow = mul(s1pow, s1);
  Poly f1 = gcd(f, s1pow);
  Poly f2 = divmod(f, f1).first;
  if (degree(f1) > 0 && degree(f2) > 0) return std::make_pair(f1, f2);
  return std::nullopt;
}

bool is_irreducible(const Poly& f_in) {
  Poly f = make_monic(f_in);
  int d = degree(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  if (!all_roots(f).empty()) return false;
  const Field& fld = f[0].field();
  if (fld.is_rational()) {
    if (d <= 3) return true;  // degree 2/3 without rational roots
    throw std::logic_error("irreducibility over Q implemented for degree <= 3 only");
  }
  Poly g = gcd(f, derivative(f));
  if (degree(g) != 0) return false;  // not squarefree (covers derivative == 0)
  return !coprime_split(f).has_value();
}

}  // namespace siltwb::poly
