#include "siltwb/rep.hpp"

#include <algorithm>
#include <stdexcept>

namespace siltwb {

namespace {

void check_compatible(const Representation& a, const Representation& b) {
  if (a.quiver() != b.quiver() && !(*a.quiver() == *b.quiver()))
    throw std::invalid_argument("representations live on different quivers");
  if (a.field() != b.field()) throw FieldMismatch("representations over different fields");
}

std::vector<Scalar> vec_mats(const Field& f, const std::vector<Matrix>& ms) {
  std::vector<Scalar> v;
  for (const Matrix& m : ms)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  if (v.empty()) return v;
  (void)f;
  return v;
}

// The linear map D: (phi_v)_v -> (phi_y M_a - N_a phi_x)_a whose kernel is
// Hom(M, N) and whose cokernel is Ext^1(M, N).
Matrix commutator_matrix(const Representation& m, const Representation& n) {
  const Field& f = m.field();
  const Quiver& q = *m.quiver();
  int nv = q.vertex_count();
  std::vector<int> voff(nv + 1, 0);
  for (int v = 1; v <= nv; ++v) voff[v] = voff[v - 1] + n.dim(v) * m.dim(v);
  int rows = 0;
  for (const Arrow& a : q.arrows()) rows += n.dim(a.target) * m.dim(a.source);
  Matrix d(f, rows, voff[nv]);
  int roff = 0;
  for (const Arrow& a : q.arrows()) {
    int mx = m.dim(a.source), ny = n.dim(a.target), my = m.dim(a.target), nx = n.dim(a.source);
    const Matrix& ma = m.arrow_map(a.id);
    const Matrix& na = n.arrow_map(a.id);
    // (phi_y M_a)[i][j]: coefficient of phi_y[i][k] is M_a[k][j]
    for (int i = 0; i < ny; ++i)
      for (int j = 0; j < mx; ++j)
        for (int k = 0; k < my; ++k)
          d.at(roff + i * mx + j, voff[a.target - 1] + i * my + k) =
              d.at(roff + i * mx + j, voff[a.target - 1] + i * my + k) + ma.at(k, j);
    // -(N_a phi_x)[i][j]: coefficient of phi_x[k][j] is -N_a[i][k]
    for (int i = 0; i < ny; ++i)
      for (int j = 0; j < mx; ++j)
        for (int k = 0; k < nx; ++k)
          d.at(roff + i * mx + j, voff[a.source - 1] + k * mx + j) =
              d.at(roff + i * mx + j, voff[a.source - 1] + k * mx + j) - na.at(i, k);
    roff += ny * mx;
  }
  return d;
}

std::vector<Matrix> unpack_vertex_maps(const Representation& m, const Representation& n,
                                       const std::vector<Scalar>& v) {
  const Field& f = m.field();
  const Quiver& q = *m.quiver();
  std::vector<Matrix> maps;
  size_t off = 0;
  for (int x = 1; x <= q.vertex_count(); ++x) {
    Matrix phi(f, n.dim(x), m.dim(x));
    for (int i = 0; i < n.dim(x); ++i)
      for (int j = 0; j < m.dim(x); ++j) phi.at(i, j) = v[off + (size_t)i * m.dim(x) + j];
    off += (size_t)n.dim(x) * m.dim(x);
    maps.push_back(std::move(phi));
  }
  return maps;
}

std::vector<Matrix> unpack_arrow_maps(const Representation& m, const Representation& n,
                                      const std::vector<Scalar>& v) {
  const Field& f = m.field();
  const Quiver& q = *m.quiver();
  std::vector<Matrix> maps;
  size_t off = 0;
  for (const Arrow& a : q.arrows()) {
    int mx = m.dim(a.source), ny = n.dim(a.target);
    Matrix c(f, ny, mx);
    for (int i = 0; i < ny; ++i)
      for (int j = 0; j < mx; ++j) c.at(i, j) = v[off + (size_t)i * mx + j];
    off += (size_t)ny * mx;
    maps.push_back(std::move(c));
  }
  return maps;
}

std::vector<Scalar> vec_cocycle(const ExtClass& e) {
  return vec_mats(e.source.field(), e.cocycle);
}

// columns of b span a subspace; the induced representation on it
Representation restrict_to_columns(const Representation& m, const std::vector<Matrix>& b) {
  const Quiver& q = *m.quiver();
  std::vector<int> dims;
  std::vector<Matrix> maps;
  for (int v = 1; v <= q.vertex_count(); ++v) dims.push_back(b[v - 1].cols());
  for (const Arrow& a : q.arrows()) {
    auto sol = b[a.target - 1].solve_matrix(m.arrow_map(a.id) * b[a.source - 1]);
    if (!sol) throw std::logic_error("subspace is not arrow-stable");
    maps.push_back(*sol);
  }
  return Representation(m.quiver(), m.field(), std::move(dims), std::move(maps));
}

}  // namespace

Representation::Representation(QuiverPtr q, const Field& f, std::vector<int> dims,
                               std::vector<Matrix> arrow_maps)
    : quiver_(std::move(q)), field_(f), dims_(std::move(dims)), arrow_maps_(std::move(arrow_maps)) {
  if ((int)dims_.size() != quiver_->vertex_count())
    throw std::invalid_argument("dimension vector length mismatch");
  if (arrow_maps_.size() != quiver_->arrows().size())
    throw std::invalid_argument("arrow map count mismatch");
  for (const Arrow& a : quiver_->arrows()) {
    const Matrix& m = arrow_maps_[a.id];
    if (m.rows() != dims_[a.target - 1] || m.cols() != dims_[a.source - 1])
      throw std::invalid_argument("arrow map shape mismatch");
    if (m.rows() * m.cols() > 0 && m.field() != field_)
      throw FieldMismatch("arrow map over wrong field");
  }
}

Representation Representation::zero(QuiverPtr q, const Field& f) {
  std::vector<int> dims(q->vertex_count(), 0);
  std::vector<Matrix> maps;
  for (size_t i = 0; i < q->arrows().size(); ++i) maps.emplace_back(f, 0, 0);
  return Representation(std::move(q), f, std::move(dims), std::move(maps));
}

Representation Representation::simple(QuiverPtr q, const Field& f, int vertex) {
  std::vector<int> dims(q->vertex_count(), 0);
  dims[vertex - 1] = 1;
  std::vector<Matrix> maps;
  for (const Arrow& a : q->arrows()) maps.emplace_back(f, dims[a.target - 1], dims[a.source - 1]);
  return Representation(std::move(q), f, std::move(dims), std::move(maps));
}

Representation Representation::projective(QuiverPtr q, const Field& f, int vertex) {
  std::vector<int> dims;
  for (int v = 1; v <= q->vertex_count(); ++v) dims.push_back((int)q->paths(vertex, v).size());
  std::vector<Matrix> maps;
  for (const Arrow& a : q->arrows()) {
    const auto& src_paths = q->paths(vertex, a.source);
    const auto& tgt_paths = q->paths(vertex, a.target);
    Matrix m(f, (int)tgt_paths.size(), (int)src_paths.size());
    for (size_t j = 0; j < src_paths.size(); ++j) {
      std::vector<int> extended = src_paths[j];
      extended.push_back(a.id);
      auto it = std::find(tgt_paths.begin(), tgt_paths.end(), extended);
      if (it == tgt_paths.end()) throw std::logic_error("extended path missing from path list");
      m.at((int)(it - tgt_paths.begin()), (int)j) = Scalar(f, 1);
    }
    maps.push_back(std::move(m));
  }
  return Representation(std::move(q), f, std::move(dims), std::move(maps));
}

Representation Representation::direct_sum(const Representation& a, const Representation& b) {
  check_compatible(a, b);
  const Quiver& q = *a.quiver();
  std::vector<int> dims;
  for (int v = 1; v <= q.vertex_count(); ++v) dims.push_back(a.dim(v) + b.dim(v));
  std::vector<Matrix> maps;
  for (const Arrow& ar : q.arrows()) {
    Matrix m(a.field(), dims[ar.target - 1], dims[ar.source - 1]);
    m.set_block(0, 0, a.arrow_map(ar.id));
    m.set_block(a.dim(ar.target), a.dim(ar.source), b.arrow_map(ar.id));
    maps.push_back(std::move(m));
  }
  return Representation(a.quiver(), a.field(), std::move(dims), std::move(maps));
}

int Representation::total_dim() const {
  int t = 0;
  for (int d : dims_) t += d;
  return t;
}

ClassVector Representation::class_vector() const {
  ClassVector c;
  for (int d : dims_) c.push_back(d);
  return c;
}

Matrix Representation::path_map(const std::vector<int>& arrow_ids, int source_vertex) const {
  Matrix m = Matrix::identity(field_, dim(source_vertex));
  for (int id : arrow_ids) m = arrow_maps_[id] * m;
  return m;
}

bool Representation::operator==(const Representation& o) const {
  return *quiver_ == *o.quiver_ && field_ == o.field_ && dims_ == o.dims_ &&
         arrow_maps_ == o.arrow_maps_;
}

RepMorphism::RepMorphism(Representation source, Representation target,
                         std::vector<Matrix> vertex_maps)
    : source_(std::move(source)), target_(std::move(target)), vertex_maps_(std::move(vertex_maps)) {
  check_compatible(source_, target_);
  const Quiver& q = *source_.quiver();
  if ((int)vertex_maps_.size() != q.vertex_count())
    throw std::invalid_argument("vertex map count mismatch");
  for (int v = 1; v <= q.vertex_count(); ++v) {
    const Matrix& m = vertex_maps_[v - 1];
    if (m.rows() != target_.dim(v) || m.cols() != source_.dim(v))
      throw std::invalid_argument("vertex map shape mismatch");
  }
  for (const Arrow& a : q.arrows()) {
    Matrix lhs = vertex_maps_[a.target - 1] * source_.arrow_map(a.id);
    Matrix rhs = target_.arrow_map(a.id) * vertex_maps_[a.source - 1];
    if (!(lhs == rhs)) throw std::invalid_argument("vertex maps do not commute with arrows");
  }
}

RepMorphism RepMorphism::zero(const Representation& source, const Representation& target) {
  std::vector<Matrix> maps;
  const Quiver& q = *source.quiver();
  for (int v = 1; v <= q.vertex_count(); ++v)
    maps.emplace_back(source.field(), target.dim(v), source.dim(v));
  return RepMorphism(source, target, std::move(maps));
}

RepMorphism RepMorphism::identity(const Representation& m) {
  std::vector<Matrix> maps;
  for (int v = 1; v <= m.quiver()->vertex_count(); ++v)
    maps.push_back(Matrix::identity(m.field(), m.dim(v)));
  return RepMorphism(m, m, std::move(maps));
}

bool RepMorphism::is_zero() const {
  for (const Matrix& m : vertex_maps_)
    if (!m.is_zero()) return false;
  return true;
}

bool RepMorphism::is_vertexwise_invertible() const {
  for (const Matrix& m : vertex_maps_)
    if (!m.is_invertible()) return false;
  return true;
}

RepMorphism RepMorphism::compose(const RepMorphism& inner) const {
  std::vector<Matrix> maps;
  for (size_t v = 0; v < vertex_maps_.size(); ++v)
    maps.push_back(vertex_maps_[v] * inner.vertex_maps_[v]);
  return RepMorphism(inner.source_, target_, std::move(maps));
}

RepMorphism RepMorphism::operator+(const RepMorphism& o) const {
  std::vector<Matrix> maps;
  for (size_t v = 0; v < vertex_maps_.size(); ++v) maps.push_back(vertex_maps_[v] + o.vertex_maps_[v]);
  return RepMorphism(source_, target_, std::move(maps));
}

RepMorphism RepMorphism::operator-(const RepMorphism& o) const {
  std::vector<Matrix> maps;
  for (size_t v = 0; v < vertex_maps_.size(); ++v) maps.push_back(vertex_maps_[v] - o.vertex_maps_[v]);
  return RepMorphism(source_, target_, std::move(maps));
}

RepMorphism RepMorphism::scaled(const Scalar& c) const {
  std::vector<Matrix> maps;
  for (const Matrix& m : vertex_maps_) maps.push_back(m.scaled(c));
  return RepMorphism(source_, target_, std::move(maps));
}

ExtClass ExtClass::scaled(const Scalar& c) const {
  ExtClass e{source, target, {}};
  for (const Matrix& m : cocycle) e.cocycle.push_back(m.scaled(c));
  return e;
}

ExtClass ExtClass::operator+(const ExtClass& o) const {
  ExtClass e{source, target, {}};
  for (size_t i = 0; i < cocycle.size(); ++i) e.cocycle.push_back(cocycle[i] + o.cocycle[i]);
  return e;
}

std::vector<RepMorphism> hom_basis(const Representation& m, const Representation& n) {
  check_compatible(m, n);
  Matrix d = commutator_matrix(m, n);
  std::vector<RepMorphism> basis;
  for (const auto& v : d.kernel_basis())
    basis.emplace_back(m, n, unpack_vertex_maps(m, n, v));
  return basis;
}

std::vector<ExtClass> ext1_basis(const Representation& m, const Representation& n) {
  check_compatible(m, n);
  Matrix d = commutator_matrix(m, n);
  auto ck = d.cokernel_basis();
  std::vector<ExtClass> basis;
  if (ck.dim == 0) return basis;
  auto sigma = ck.projection.solve_matrix(Matrix::identity(m.field(), ck.dim));
  if (!sigma) throw std::logic_error("cokernel section not found");
  for (int j = 0; j < ck.dim; ++j)
    basis.push_back(ExtClass{m, n, unpack_arrow_maps(m, n, column_of(*sigma, j))});
  return basis;
}

int hom_dim(const Representation& m, const Representation& n) {
  check_compatible(m, n);
  Matrix d = commutator_matrix(m, n);
  return d.cols() - d.rank();
}

int ext1_dim(const Representation& m, const Representation& n) {
  check_compatible(m, n);
  Matrix d = commutator_matrix(m, n);
  return d.rows() - d.rank();
}

bool ext_class_is_zero(const ExtClass& e) {
  Matrix d = commutator_matrix(e.source, e.target);
  return d.solve(vec_cocycle(e)).has_value();
}

std::vector<Scalar> ext_coordinates(const std::vector<ExtClass>& basis, const ExtClass& e) {
  const Field& f = e.source.field();
  std::vector<Scalar> rhs = vec_cocycle(e);
  Matrix d = commutator_matrix(e.source, e.target);
  // solve [basis reps | coboundaries] x = cocycle; the basis part of any
  // solution is unique because the representatives are independent mod im d
  Matrix sys(f, (int)rhs.size(), 0);
  for (const auto& b : basis)
    sys = Matrix::hstack(sys, columns_to_matrix(f, (int)rhs.size(), {vec_cocycle(b)}));
  sys = Matrix::hstack(sys, d);  // columns of d span the coboundaries
  auto sol = sys.solve(rhs);
  if (!sol) throw std::logic_error("ext class outside the span of the given basis");
  return {sol->begin(), sol->begin() + (long)basis.size()};
}

SubQuotient kernel(const RepMorphism& f) {
  const Representation& m = f.source();
  const Quiver& q = *m.quiver();
  std::vector<Matrix> b;
  for (int v = 1; v <= q.vertex_count(); ++v)
    b.push_back(columns_to_matrix(m.field(), m.dim(v), f.vertex_map(v).kernel_basis()));
  Representation k = restrict_to_columns(m, b);
  return {k, RepMorphism(k, m, std::move(b))};
}

SubQuotient image(const RepMorphism& f) {
  const Representation& n = f.target();
  const Quiver& q = *n.quiver();
  std::vector<Matrix> b;
  for (int v = 1; v <= q.vertex_count(); ++v) {
    const Matrix& fv = f.vertex_map(v);
    auto ech = fv.echelon();
    // pivot columns of the echelon form index independent columns of fv
    std::vector<std::vector<Scalar>> cols;
    for (int p : ech.pivots) cols.push_back(column_of(fv, p));
    b.push_back(columns_to_matrix(n.field(), n.dim(v), cols));
  }
  Representation im = restrict_to_columns(n, b);
  return {im, RepMorphism(im, n, std::move(b))};
}

SubQuotient cokernel(const RepMorphism& f) {
  const Representation& n = f.target();
  const Quiver& q = *n.quiver();
  const Field& fl = n.field();
  std::vector<Matrix> pi;
  std::vector<Matrix> sigma;
  std::vector<int> dims;
  for (int v = 1; v <= q.vertex_count(); ++v) {
    auto ck = f.vertex_map(v).cokernel_basis();
    dims.push_back(ck.dim);
    auto s = ck.projection.solve_matrix(Matrix::identity(fl, ck.dim));
    if (!s) throw std::logic_error("cokernel section not found");
    pi.push_back(ck.projection);
    sigma.push_back(*s);
  }
  std::vector<Matrix> maps;
  for (const Arrow& a : q.arrows())
    maps.push_back(pi[a.target - 1] * n.arrow_map(a.id) * sigma[a.source - 1]);
  Representation c(n.quiver(), fl, std::move(dims), std::move(maps));
  return {c, RepMorphism(n, c, std::move(pi))};
}

Extension extension_middle_term(const ExtClass& e) {
  const Representation& m = e.source;
  const Representation& n = e.target;
  const Quiver& q = *m.quiver();
  const Field& f = m.field();
  std::vector<int> dims;
  for (int v = 1; v <= q.vertex_count(); ++v) dims.push_back(n.dim(v) + m.dim(v));
  std::vector<Matrix> maps;
  for (const Arrow& a : q.arrows()) {
    Matrix x(f, dims[a.target - 1], dims[a.source - 1]);
    x.set_block(0, 0, n.arrow_map(a.id));
    x.set_block(0, n.dim(a.source), e.cocycle[a.id]);
    x.set_block(n.dim(a.target), n.dim(a.source), m.arrow_map(a.id));
    maps.push_back(std::move(x));
  }
  Representation middle(m.quiver(), f, std::move(dims), std::move(maps));
  std::vector<Matrix> incl, proj;
  for (int v = 1; v <= q.vertex_count(); ++v) {
    Matrix i(f, n.dim(v) + m.dim(v), n.dim(v));
    i.set_block(0, 0, Matrix::identity(f, n.dim(v)));
    incl.push_back(std::move(i));
    Matrix p(f, m.dim(v), n.dim(v) + m.dim(v));
    p.set_block(0, n.dim(v), Matrix::identity(f, m.dim(v)));
    proj.push_back(std::move(p));
  }
  return {middle, RepMorphism(n, middle, std::move(incl)),
          RepMorphism(middle, m, std::move(proj))};
}

std::vector<Scalar> vec_morphism(const RepMorphism& f) {
  std::vector<Matrix> ms;
  for (int v = 1; v <= f.source().quiver()->vertex_count(); ++v) ms.push_back(f.vertex_map(v));
  return vec_mats(f.source().field(), ms);
}

RepMorphism combine(const std::vector<RepMorphism>& basis, const std::vector<Scalar>& coeffs) {
  if (basis.empty()) throw std::invalid_argument("combine needs a nonempty basis");
  RepMorphism r = basis[0].scaled(coeffs[0]);
  for (size_t i = 1; i < basis.size(); ++i) r = r + basis[i].scaled(coeffs[i]);
  return r;
}

std::optional<std::vector<Scalar>> morphism_coordinates(const std::vector<RepMorphism>& basis,
                                                        const RepMorphism& f) {
  std::vector<Scalar> target = vec_morphism(f);
  if (basis.empty()) {
    for (const Scalar& s : target)
      if (!s.is_zero()) return std::nullopt;
    return std::vector<Scalar>{};
  }
  std::vector<std::vector<Scalar>> cols;
  for (const auto& b : basis) cols.push_back(vec_morphism(b));
  Matrix sys = columns_to_matrix(f.source().field(), (int)target.size(), cols);
  return sys.solve(target);
}

std::optional<RepMorphism> factor_left(const RepMorphism& a, const RepMorphism& b) {
  std::vector<RepMorphism> basis = hom_basis(b.source(), a.source());
  std::vector<std::vector<Scalar>> cols;
  for (const auto& phi : basis) cols.push_back(vec_morphism(a.compose(phi)));
  std::vector<Scalar> rhs = vec_morphism(b);
  Matrix sys = columns_to_matrix(b.source().field(), (int)rhs.size(), cols);
  auto c = sys.solve(rhs);
  if (!c) return std::nullopt;
  if (basis.empty()) return RepMorphism::zero(b.source(), a.source());
  return combine(basis, *c);
}

std::optional<RepMorphism> factor_right(const RepMorphism& a, const RepMorphism& b) {
  std::vector<RepMorphism> basis = hom_basis(a.target(), b.target());
  std::vector<std::vector<Scalar>> cols;
  for (const auto& phi : basis) cols.push_back(vec_morphism(phi.compose(a)));
  std::vector<Scalar> rhs = vec_morphism(b);
  Matrix sys = columns_to_matrix(b.source().field(), (int)rhs.size(), cols);
  auto c = sys.solve(rhs);
  if (!c) return std::nullopt;
  if (basis.empty()) return RepMorphism::zero(a.target(), b.target());
  return combine(basis, *c);
}

FiniteDimAlgebra end_ring(const Representation& m) {
  std::vector<RepMorphism> basis = hom_basis(m, m);
  const Field& f = m.field();
  int n = (int)basis.size();
  std::vector<std::vector<Scalar>> cols;
  for (const auto& b : basis) cols.push_back(vec_morphism(b));
  Matrix sys = columns_to_matrix(f, cols.empty() ? 0 : (int)cols[0].size(), cols);
  auto coords = [&](const RepMorphism& g) {
    auto c = sys.solve(vec_morphism(g));
    if (!c) throw std::logic_error("endomorphism outside its own hom space");
    return *c;
  };
  std::vector<Matrix> lm;
  for (int i = 0; i < n; ++i) {
    Matrix li(f, n, n);
    for (int j = 0; j < n; ++j) {
      std::vector<Scalar> c = coords(basis[i].compose(basis[j]));
      for (int k = 0; k < n; ++k) li.at(k, j) = c[k];
    }
    lm.push_back(std::move(li));
  }
  return FiniteDimAlgebra(f, std::move(lm), coords(RepMorphism::identity(m)));
}

namespace {

RepMorphism evaluate_poly_at(const poly::Poly& p, const RepMorphism& phi) {
  const Representation& m = phi.source();
  const Field& f = m.field();
  std::vector<Matrix> maps;
  for (int v = 1; v <= m.quiver()->vertex_count(); ++v) {
    Matrix acc(f, m.dim(v), m.dim(v));
    for (int i = (int)p.size() - 1; i >= 0; --i)
      acc = acc * phi.vertex_map(v) + Matrix::identity(f, m.dim(v)).scaled(p[i]);
    maps.push_back(std::move(acc));
  }
  return RepMorphism(m, m, std::move(maps));
}

void decompose_into(const Representation& m, unsigned seed, std::vector<Representation>& out) {
  if (m.is_zero()) return;
  std::vector<RepMorphism> hb = hom_basis(m, m);
  if (hb.size() == 1) {
    out.push_back(m);
    return;
  }
  FiniteDimAlgebra e = end_ring(m);
  auto u = e.splitting_element(seed);
  if (!u) {
    out.push_back(m);  // End(m) certified local
    return;
  }
  RepMorphism phi = combine(hb, *u);
  poly::Poly mp = e.element_min_poly(*u);
  auto split = poly::coprime_split(mp, seed);
  if (!split) throw std::logic_error("splitting element without coprime split");
  SubQuotient k1 = kernel(evaluate_poly_at(split->first, phi));
  SubQuotient k2 = kernel(evaluate_poly_at(split->second, phi));
  if (k1.rep.total_dim() + k2.rep.total_dim() != m.total_dim() || k1.rep.total_dim() == 0 ||
      k2.rep.total_dim() == 0)
    throw std::logic_error("coprime splitting produced a non-direct decomposition");
  decompose_into(k1.rep, seed, out);
  decompose_into(k2.rep, seed, out);
}

}  // namespace

std::vector<std::pair<Representation, int>> decompose(const Representation& m, unsigned seed) {
  std::vector<Representation> pieces;
  decompose_into(m, seed, pieces);
  std::vector<std::pair<Representation, int>> grouped;
  for (const Representation& p : pieces) {
    bool found = false;
    for (auto& [rep, mult] : grouped)
      if (is_isomorphic_indec(rep, p)) {
        ++mult;
        found = true;
        break;
      }
    if (!found) grouped.emplace_back(p, 1);
  }
  // deterministic order: by dimension vector, then arrow maps as tie-break
  std::stable_sort(grouped.begin(), grouped.end(), [](const auto& a, const auto& b) {
    return a.first.dims() < b.first.dims();
  });
  return grouped;
}

bool is_isomorphic_indec(const Representation& a, const Representation& b) {
  if (a.dims() != b.dims()) return false;
  if (a.is_zero()) return true;
  // for indecomposables the non-isomorphisms form a proper subspace, so
  // some hom basis element must be invertible whenever an iso exists
  for (const RepMorphism& f : hom_basis(a, b))
    if (f.is_vertexwise_invertible()) return true;
  return false;
}

bool is_isomorphic(const Representation& a, const Representation& b) {
  if (a.dims() != b.dims()) return false;
  auto da = decompose(a), db = decompose(b);
  if (da.size() != db.size()) return false;
  std::vector<bool> used(db.size(), false);
  for (const auto& [rep, mult] : da) {
    bool matched = false;
    for (size_t j = 0; j < db.size(); ++j) {
      if (used[j] || db[j].second != mult) continue;
      if (is_isomorphic_indec(rep, db[j].first)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

Resolution standard_resolution(const Representation& m) {
  const QuiverPtr& qp = m.quiver();
  const Quiver& q = *qp;
  const Field& f = m.field();
  int nv = q.vertex_count();

  // projectives resolve trivially (hereditary: Ext^1 against all simples
  // vanishing certifies projectivity)
  bool projective = true;
  for (int v = 1; v <= nv && projective; ++v)
    if (ext1_dim(m, Representation::simple(qp, f, v)) != 0) projective = false;
  if (projective)
    return {m, Representation::zero(qp, f),
            RepMorphism::zero(Representation::zero(qp, f), m), RepMorphism::identity(m)};

  // p0 = sum over vertices z of P_z^{dim m_z}
  Representation p0 = Representation::zero(qp, f);
  for (int z = 1; z <= nv; ++z)
    for (int k = 0; k < m.dim(z); ++k)
      p0 = Representation::direct_sum(p0, Representation::projective(qp, f, z));
  // p1 = sum over arrows a: x -> y of P_y^{dim m_x}
  Representation p1 = Representation::zero(qp, f);
  for (const Arrow& a : q.arrows())
    for (int k = 0; k < m.dim(a.source); ++k)
      p1 = Representation::direct_sum(p1, Representation::projective(qp, f, a.target));

  // eps: the (z, copy k, path p) basis vector of (p0)_v maps to M_p(e_k)
  std::vector<Matrix> eps_maps;
  for (int v = 1; v <= nv; ++v) {
    Matrix ev(f, m.dim(v), p0.dim(v));
    int col = 0;
    for (int z = 1; z <= nv; ++z)
      for (int k = 0; k < m.dim(z); ++k)
        for (const auto& path : q.paths(z, v)) {
          Matrix pm = m.path_map(path, z);
          for (int i = 0; i < m.dim(v); ++i) ev.at(i, col) = pm.at(i, k);
          ++col;
        }
    eps_maps.push_back(std::move(ev));
  }

  // d: the (a: x->y, copy k, path q') basis vector of (p1)_v maps to
  // (q'a tensor e_k) - (q' tensor M_a e_k)
  auto p0_col = [&](int v, int z, int k, const std::vector<int>& path) {
    int col = 0;
    for (int zz = 1; zz < z; ++zz) col += m.dim(zz) * (int)q.paths(zz, v).size();
    col += k * (int)q.paths(z, v).size();
    const auto& ps = q.paths(z, v);
    auto it = std::find(ps.begin(), ps.end(), path);
    if (it == ps.end()) throw std::logic_error("path not found in projective basis");
    return col + (int)(it - ps.begin());
  };
  std::vector<Matrix> d_maps;
  for (int v = 1; v <= nv; ++v) {
    Matrix dv(f, p0.dim(v), p1.dim(v));
    int col = 0;
    for (const Arrow& a : q.arrows())
      for (int k = 0; k < m.dim(a.source); ++k)
        for (const auto& path : q.paths(a.target, v)) {
          std::vector<int> prepended{a.id};
          prepended.insert(prepended.end(), path.begin(), path.end());
          int r1 = p0_col(v, a.source, k, prepended);
          dv.at(r1, col) = dv.at(r1, col) + Scalar(f, 1);
          const Matrix& ma = m.arrow_map(a.id);
          for (int j = 0; j < m.dim(a.target); ++j) {
            if (ma.at(j, k).is_zero()) continue;
            int r2 = p0_col(v, a.target, j, path);
            dv.at(r2, col) = dv.at(r2, col) - ma.at(j, k);
          }
          ++col;
        }
    d_maps.push_back(std::move(dv));
  }

  RepMorphism eps(p0, m, std::move(eps_maps));
  RepMorphism d(p1, p0, std::move(d_maps));
  // exactness checks: eps surjective, d injective, eps d = 0, dims add up
  if (!eps.compose(d).is_zero()) throw std::logic_error("resolution composite nonzero");
  for (int v = 1; v <= nv; ++v) {
    if (d.vertex_map(v).rank() != p1.dim(v)) throw std::logic_error("resolution d not injective");
    if (eps.vertex_map(v).rank() != m.dim(v)) throw std::logic_error("resolution eps not surjective");
    if (p0.dim(v) != p1.dim(v) + m.dim(v)) throw std::logic_error("resolution dims inconsistent");
  }
  return {p0, p1, std::move(d), std::move(eps)};
}

RepMorphism cocycle_to_resolution_map(const ExtClass& e, const Resolution& res) {
  const Representation& m = e.source;
  const Representation& n = e.target;
  const Quiver& q = *m.quiver();
  const Field& f = m.field();
  std::vector<Matrix> maps;
  for (int v = 1; v <= q.vertex_count(); ++v) {
    Matrix uv(f, n.dim(v), res.p1.dim(v));
    int col = 0;
    for (const Arrow& a : q.arrows())
      for (int k = 0; k < m.dim(a.source); ++k)
        for (const auto& path : q.paths(a.target, v)) {
          // (a, k, path) basis vector maps to N_path(c_a(e_k))
          std::vector<Scalar> val = n.path_map(path, a.target).apply(column_of(e.cocycle[a.id], k));
          for (int i = 0; i < n.dim(v); ++i) uv.at(i, col) = val[i];
          ++col;
        }
    maps.push_back(std::move(uv));
  }
  return RepMorphism(res.p1, n, std::move(maps));
}

}  // namespace siltwb
