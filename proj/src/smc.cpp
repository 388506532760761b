#include "siltwb/smc.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace siltwb {

namespace {

DObject safe_cone(const DMorphism& f) {
  if (f.source().is_zero()) return f.target();
  if (f.target().is_zero()) return f.source().shift(1);
  return cone(f);
}

/// Could Hom(a, b[degree]) be nonzero on shift grounds alone?
bool hom_window_possible(const DObject& a, const DObject& b, int degree) {
  if (a.is_zero() || b.is_zero()) return false;
  return b.min_shift() + degree <= a.max_shift() + 1 && b.max_shift() + degree >= a.min_shift();
}

DMorphism d_identity(const DObject& a) {
  DMorphism id(a, a);
  for (int i = 0; i < a.summand_count(); ++i)
    id.set_deg0(i, i, RepMorphism::identity(a.summands()[i].rep));
  return id;
}

Matrix coords_matrix(const Field& f, const std::vector<DMorphism>& basis) {
  std::vector<std::vector<Scalar>> cols;
  for (const auto& b : basis) cols.push_back(dmorphism_coordinates(b));
  return columns_to_matrix(f, cols.empty() ? 0 : (int)cols[0].size(), cols);
}

std::vector<Scalar> in_basis(const Matrix& bmat, const DMorphism& f) {
  auto sol = bmat.solve(dmorphism_coordinates(f));
  if (!sol) throw PreconditionFailed("morphism does not lie in the span of the hom basis");
  return *sol;
}

}  // namespace

FiniteDimAlgebra d_end_ring(const DObject& a) {
  const Field& f = a.field();
  auto basis = dhom_basis(a, a, 0);
  Matrix bmat = coords_matrix(f, basis);
  int d = (int)basis.size();
  std::vector<Matrix> left;
  for (int i = 0; i < d; ++i) {
    Matrix li(f, d, d);
    for (int j = 0; j < d; ++j) {
      auto col = in_basis(bmat, basis[i].compose(basis[j]));
      for (int k = 0; k < d; ++k) li.at(k, j) = col[k];
    }
    left.push_back(std::move(li));
  }
  return FiniteDimAlgebra(f, left, in_basis(bmat, d_identity(a)));
}

PreSMCReport pre_smc_report(const std::vector<DObject>& x) {
  PreSMCReport rep;
  auto fail = [&](const std::string& why) {
    rep.ok = false;
    rep.violation = why;
    return rep;
  };
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) return fail("object " + std::to_string(i) + " is zero");
    if (!d_end_ring(x[i]).is_division())
      return fail("End of object " + std::to_string(i) + " is not a division algebra");
  }
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) {
      if (i != j && dhom_dim(x[i], x[j], 0) != 0)
        return fail("nonzero degree-0 hom from object " + std::to_string(i) + " to object " +
                    std::to_string(j));
      int lo = x[i].min_shift() - x[j].max_shift() - 1;
      for (int m = lo; m <= -1; ++m) {
        if (!hom_window_possible(x[i], x[j], m)) continue;
        if (dhom_dim(x[i], x[j], m) != 0)
          return fail("nonzero degree " + std::to_string(m) + " hom from object " +
                      std::to_string(i) + " to object " + std::to_string(j));
      }
    }
  return rep;
}

bool is_pre_smc(const std::vector<DObject>& x) { return pre_smc_report(x).ok; }

ExtQuiver ext_quiver(const std::vector<DObject>& x) {
  auto rep = pre_smc_report(x);
  if (!rep.ok) throw NotPreSMC(rep.violation);
  size_t r = x.size();
  ExtQuiver q;
  q.multiplicity.assign(r, std::vector<int>(r, 0));
  for (size_t i = 0; i < r; ++i) {
    int e = dhom_dim(x[i], x[i], 0);
    for (size_t j = 0; j < r; ++j) {
      int h = dhom_dim(x[i], x[j], 1);
      if (h % e != 0)
        throw NonIntegralMultiplicity("hom dimension " + std::to_string(h) +
                                      " is not a multiple of the endomorphism dimension " +
                                      std::to_string(e));
      q.multiplicity[i][j] = h / e;
    }
  }
  return q;
}

bool is_acyclic(const ExtQuiver& q) {
  size_t r = q.multiplicity.size();
  std::vector<int> color(r, 0);
  std::function<bool(size_t)> dfs = [&](size_t v) {
    color[v] = 1;
    for (size_t w = 0; w < r; ++w) {
      if (q.multiplicity[v][w] == 0) continue;
      if (color[w] == 1) return false;
      if (color[w] == 0 && !dfs(w)) return false;
    }
    color[v] = 2;
    return true;
  };
  for (size_t v = 0; v < r; ++v)
    if (color[v] == 0 && !dfs(v)) return false;
  return true;
}

bool z_membership(const std::vector<DObject>& r, const DObject& y) {
  if (y.is_zero()) return true;
  for (const DObject& ra : r) {
    for (int i = 0; i <= y.max_shift() - ra.min_shift() + 1; ++i)
      if (hom_window_possible(ra.shift(i), y, 0) && dhom_dim(ra.shift(i), y, 0) != 0)
        return false;
    for (int i = 0; i >= y.min_shift() - ra.max_shift() - 1; --i)
      if (hom_window_possible(y, ra.shift(i), 0) && dhom_dim(y, ra.shift(i), 0) != 0)
        return false;
  }
  return true;
}

namespace {

std::vector<DObject> shifted_family(const std::vector<DObject>& r, const DObject& anchor,
                                    bool nonneg) {
  std::vector<DObject> fam;
  if (anchor.is_zero()) return fam;
  for (const DObject& ra : r) {
    if (nonneg) {
      for (int i = 0; i <= anchor.max_shift() - ra.min_shift() + 1; ++i)
        if (i >= 0 && hom_window_possible(ra.shift(i), anchor, 0)) fam.push_back(ra.shift(i));
    } else {
      for (int i = 0; i >= anchor.min_shift() - ra.max_shift() - 1; --i)
        if (i <= 0 && hom_window_possible(anchor, ra.shift(i), 0)) fam.push_back(ra.shift(i));
    }
  }
  return fam;
}

/// True when the class of diff lies in the integer span of the classes of r.
bool class_in_span(const std::vector<DObject>& r, const ClassVector& diff) {
  Field q = Field::rationals();
  int n = (int)diff.size();
  Matrix m(q, n, (int)r.size());
  for (size_t j = 0; j < r.size(); ++j) {
    ClassVector c = r[j].class_vector();
    for (int i = 0; i < n; ++i) m.at(i, (int)j) = Scalar(q, c[i]);
  }
  std::vector<Scalar> b;
  for (int i = 0; i < n; ++i) b.push_back(Scalar(q, diff[i]));
  auto sol = m.solve(b);
  if (!sol) return false;
  for (const Scalar& s : *sol)
    if (boost::multiprecision::denominator(s.rational()) != 1) return false;
  return true;
}

}  // namespace

DObject z_representative(const std::vector<DObject>& r, const DObject& y) {
  if (y.is_zero()) return y;
  for (const DObject& ra : r)
    for (int i = y.min_shift() - ra.max_shift() - 1; i <= y.max_shift() - ra.min_shift() + 1; ++i)
      if (hom_window_possible(ra.shift(i), y, 0) && dhom_dim(ra.shift(i), y, 0) != 0)
        throw PreconditionFailed("object is not right-perpendicular to all shifts of R");

  // kill outgoing homs to non-positive shifts
  DObject z0 = y;
  auto out_targets = shifted_family(r, z0, false);
  if (!out_targets.empty()) {
    auto ap = minimal_left_approximation(out_targets, z0);
    z0 = safe_cone(ap.map).shift(-1);
  }
  // kill incoming homs from non-negative shifts
  DObject z = z0;
  auto in_sources = shifted_family(r, z, true);
  if (!in_sources.empty()) {
    auto ap = minimal_right_approximation(in_sources, z);
    z = safe_cone(ap.map);
  }
  if (!z_membership(r, z))
    throw PreconditionFailed("representative construction did not land in Z");
  ClassVector cy = y.class_vector(), cz = z.class_vector();
  ClassVector diff(cy.size());
  for (size_t i = 0; i < cy.size(); ++i) diff[i] = cz[i] - cy[i];
  if (!class_in_span(r, diff))
    throw PreconditionFailed("representative differs from the input outside thick(R) classes");
  return z;
}

DObject z_suspend(const std::vector<DObject>& r, const DObject& z) {
  if (!z_membership(r, z)) throw PreconditionFailed("object is not in Z");
  if (r.empty() || z.is_zero()) return z.shift(1);
  DObject w = z.shift(1);
  auto ap = minimal_right_approximation(r, w);
  DObject out = safe_cone(ap.map);
  if (!z_membership(r, out)) throw PreconditionFailed("suspension left Z");
  return out;
}

std::vector<DObject> smc_reduce(const std::vector<DObject>& x, const std::vector<DObject>& r) {
  std::vector<bool> used(x.size(), false);
  for (const DObject& ra : r) {
    bool found = false;
    for (size_t i = 0; i < x.size() && !found; ++i)
      if (!used[i] && iso_test(x[i], ra)) used[i] = found = true;
    if (!found) throw NotContained("reduction object is not a member of the collection");
  }
  std::vector<DObject> out;
  for (size_t i = 0; i < x.size(); ++i) {
    if (used[i]) continue;
    out.push_back(z_membership(r, x[i]) ? x[i] : z_representative(r, x[i]));
  }
  return out;
}

std::vector<DObject> canonical_smc(QuiverPtr q, const Field& f) {
  std::vector<DObject> out;
  for (int v = 1; v <= q->vertex_count(); ++v)
    out.push_back(DObject::from_rep(Representation::simple(q, f, v)));
  return out;
}

// ---------------------------------------------------------------------------
// Completion: iterated reduction along a stack of exceptional objects, with
// the quotient suspension computed level by level.
// ---------------------------------------------------------------------------

namespace {

using Ctx = std::vector<DObject>;  // reduction objects, outermost first

constexpr int kSuspCap = 10;
constexpr int kSweepCap = 6;

/// One quotient suspension at the level of the full context.
DObject susp_once(const Ctx& ctx, const DObject& y) {
  if (y.is_zero()) return y;
  if (ctx.empty()) return y.shift(1);
  Ctx parent(ctx.begin(), ctx.end() - 1);
  DObject w = susp_once(parent, y);
  auto ap = minimal_right_approximation({ctx.back()}, w);
  return safe_cone(ap.map);
}

DObject cosusp_once(const Ctx& ctx, const DObject& y) {
  if (y.is_zero()) return y;
  if (ctx.empty()) return y.shift(-1);
  Ctx parent(ctx.begin(), ctx.end() - 1);
  DObject w = cosusp_once(parent, y);
  auto ap = minimal_left_approximation({ctx.back()}, w);
  return safe_cone(ap.map).shift(-1);
}

DObject susp_rel(const Ctx& ctx, const DObject& y, int times) {
  DObject out = y;
  for (int k = 0; k < times; ++k) out = susp_once(ctx, out);
  for (int k = 0; k > times; --k) out = cosusp_once(ctx, out);
  return out;
}

/// Relative Z-membership at the innermost level of the context:
/// Hom(R<i>, y) = 0 for i >= 0 and Hom(y, R<i>) = 0 for i <= 0, with R<i>
/// computed in the parent level.
bool z_membership_rel(const Ctx& ctx, const DObject& y) {
  if (y.is_zero()) return true;
  if (ctx.empty()) return true;
  Ctx parent(ctx.begin(), ctx.end() - 1);
  const DObject& r = ctx.back();
  for (int i = 0; i <= kSuspCap; ++i) {
    DObject ri = susp_rel(parent, r, i);
    if (ri.is_zero()) break;
    if (!hom_window_possible(ri, y, 0)) {
      if (ri.min_shift() > y.max_shift() + 1) break;  // moved past for good
      continue;
    }
    if (dhom_dim(ri, y, 0) != 0) return false;
  }
  for (int i = 0; i >= -kSuspCap; --i) {
    DObject ri = susp_rel(parent, r, i);
    if (ri.is_zero()) break;
    if (!hom_window_possible(y, ri, 0)) {
      if (ri.max_shift() + 1 < y.min_shift()) break;
      continue;
    }
    if (dhom_dim(y, ri, 0) != 0) return false;
  }
  return z_membership_rel(parent, y);
}

/// Push y into the relative Z of the innermost context level by corrective
/// approximation triangles; empty optional when the sweeps do not settle.
std::optional<DObject> z_transport_level(const Ctx& ctx, const DObject& start) {
  Ctx parent(ctx.begin(), ctx.end() - 1);
  const DObject& r = ctx.back();
  DObject y = start;
  for (int sweep = 0; sweep < kSweepCap; ++sweep) {
    if (y.is_zero()) return y;
    if (z_membership_rel(ctx, y)) return y;
    // outgoing to non-positive quotient shifts
    std::vector<DObject> targets;
    for (int i = 0; i >= -kSuspCap; --i) {
      DObject ri = susp_rel(parent, r, i);
      if (ri.is_zero()) break;
      if (hom_window_possible(y, ri, 0) && dhom_dim(y, ri, 0) != 0) targets.push_back(ri);
      if (ri.max_shift() + 1 < y.min_shift()) break;
    }
    if (!targets.empty()) {
      auto ap = minimal_left_approximation(targets, y);
      y = safe_cone(ap.map).shift(-1);
      if (y.is_zero()) return y;
    }
    // incoming from non-negative quotient shifts
    std::vector<DObject> sources;
    for (int i = 0; i <= kSuspCap; ++i) {
      DObject ri = susp_rel(parent, r, i);
      if (ri.is_zero()) break;
      if (hom_window_possible(ri, y, 0) && dhom_dim(ri, y, 0) != 0) sources.push_back(ri);
      if (ri.min_shift() > y.max_shift() + 1) break;
    }
    if (!sources.empty()) {
      auto ap = minimal_right_approximation(sources, y);
      y = safe_cone(ap.map);
    }
  }
  if (!y.is_zero() && z_membership_rel(ctx, y)) return y;
  return std::nullopt;
}

std::optional<DObject> z_transport(const Ctx& ctx, const DObject& start) {
  DObject y = start;
  for (size_t k = 1; k <= ctx.size(); ++k) {
    Ctx level(ctx.begin(), ctx.begin() + k);
    auto moved = z_transport_level(level, y);
    if (!moved) return std::nullopt;
    y = *moved;
    if (y.is_zero()) return y;
  }
  return y;
}

/// Negative-degree relative homs between two Z-objects all vanish.
bool rel_negative_homs_vanish(const Ctx& ctx, const DObject& a, const DObject& b) {
  for (int m = -1; m >= -kSuspCap; --m) {
    DObject bm = susp_rel(ctx, b, m);
    if (bm.is_zero()) break;
    if (!hom_window_possible(a, bm, 0)) {
      if (bm.max_shift() + 1 < a.min_shift()) break;
      continue;
    }
    if (dhom_dim(a, bm, 0) != 0) return false;
  }
  return true;
}

/// Pre-SMC conditions for a candidate collection inside the level of ctx:
/// ambient conditions plus relative negative-hom vanishing.
bool level_pre_smc(const Ctx& ctx, const std::vector<DObject>& picked, const DObject& cand) {
  if (!d_end_ring(cand).is_division()) return false;
  if (!rel_negative_homs_vanish(ctx, cand, cand)) return false;
  if (!is_pre_smc({cand})) return false;
  for (const DObject& p : picked) {
    if (dhom_dim(p, cand, 0) != 0 || dhom_dim(cand, p, 0) != 0) return false;
    if (!is_pre_smc({p, cand})) return false;
    if (!rel_negative_homs_vanish(ctx, p, cand)) return false;
    if (!rel_negative_homs_vanish(ctx, cand, p)) return false;
  }
  return true;
}

/// Pool ordering key: plain modules first, then narrow shift windows,
/// then a deterministic class/shape tie-break.
std::tuple<int, int, std::string> pool_key(const DObject& o) {
  int span = o.max_shift() - o.min_shift();
  int offset = std::max(std::abs(o.max_shift()), std::abs(o.min_shift()));
  std::ostringstream ss;
  for (long long c : o.class_vector()) ss << c << ",";
  ss << "|" << o.min_shift() << "," << o.max_shift();
  return {span, offset, ss.str()};
}

std::vector<DObject> candidate_pool(QuiverPtr q, const Field& f, const Ctx& ctx) {
  std::vector<DObject> seeds;
  for (int v = 1; v <= q->vertex_count(); ++v) {
    seeds.push_back(DObject::from_rep(Representation::simple(q, f, v)));
    seeds.push_back(DObject::from_rep(Representation::projective(q, f, v)));
  }
  std::vector<DObject> pool;
  auto add = [&](const DObject& c) {
    if (c.is_zero() || !z_membership_rel(ctx, c)) return;
    for (const DObject& p : pool)
      if (iso_test(p, c)) return;
    pool.push_back(c);
  };
  std::vector<DObject> base;
  for (const DObject& s : seeds) {
    auto moved = z_transport(ctx, s);
    if (moved && !moved->is_zero()) {
      add(*moved);
      base.push_back(*moved);
    }
  }
  for (const DObject& c : base) {
    add(susp_rel(ctx, c, 1));
    add(susp_rel(ctx, c, -1));
  }
  std::stable_sort(pool.begin(), pool.end(),
                   [](const DObject& a, const DObject& b) { return pool_key(a) < pool_key(b); });
  return pool;
}

bool pick_rest(const Ctx& ctx, const std::vector<DObject>& pool, size_t from, int want,
               std::vector<DObject>& picked) {
  if (want == 0) return true;
  for (size_t i = from; i < pool.size(); ++i) {
    if (!level_pre_smc(ctx, picked, pool[i])) continue;
    picked.push_back(pool[i]);
    if (pick_rest(ctx, pool, i + 1, want - 1, picked)) return true;
    picked.pop_back();
  }
  return false;
}

/// Topological order of the given Z-objects by the relative degree-1 homs.
std::vector<int> rel_topo_order(const Ctx& ctx, const std::vector<DObject>& xs) {
  size_t r = xs.size();
  std::vector<DObject> susps;
  for (const DObject& x : xs) susps.push_back(susp_rel(ctx, x, 1));
  std::vector<std::vector<bool>> edge(r, std::vector<bool>(r, false));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      if (i != j) edge[i][j] = dhom_dim(xs[i], susps[j], 0) > 0;
  std::vector<bool> done(r, false);
  std::vector<int> order;
  for (size_t step = 0; step < r; ++step) {
    int best = -1;
    for (size_t i = 0; i < r; ++i) {
      if (done[i]) continue;
      bool ready = true;
      for (size_t j = 0; j < r; ++j)
        if (!done[j] && edge[j][i]) ready = false;
      if (ready && best < 0) best = (int)i;
    }
    if (best < 0)
      throw PreconditionFailed("reduced collection acquired a cyclic hom pattern");
    done[best] = true;
    order.push_back(best);
  }
  return order;
}

std::vector<DObject> complete_rec(QuiverPtr q, const Field& f, const Ctx& ctx,
                                  const std::vector<DObject>& xs) {
  int want = q->vertex_count() - (int)ctx.size();
  if (xs.empty()) {
    if (want == 0) return {};
    auto pool = candidate_pool(q, f, ctx);
    std::vector<DObject> picked;
    if (!pick_rest(ctx, pool, 0, want, picked))
      throw PreconditionFailed("no completing objects found in the candidate pool");
    return picked;
  }
  std::vector<int> order = rel_topo_order(ctx, xs);
  const DObject& x1 = xs[order[0]];
  std::vector<DObject> rest;
  for (size_t k = 1; k < order.size(); ++k) rest.push_back(xs[order[k]]);
  Ctx deeper = ctx;
  deeper.push_back(x1);
  std::vector<DObject> completed = complete_rec(q, f, deeper, rest);
  completed.insert(completed.begin(), x1);
  return completed;
}

}  // namespace

std::vector<DObject> complete_presmc(const std::vector<DObject>& x) {
  auto rep = pre_smc_report(x);
  if (!rep.ok) throw NotPreSMC(rep.violation);
  if (x.empty()) throw NotPreSMC("cannot infer the category from an empty collection");
  QuiverPtr q = x[0].quiver();
  const Field& f = x[0].field();
  if (!is_acyclic(ext_quiver(x)))
    throw NotCompletable("the Ext-quiver of the collection has a cycle");

  std::vector<DObject> out = complete_rec(q, f, {}, x);

  auto orep = pre_smc_report(out);
  if (!orep.ok) throw PreconditionFailed("completion output is not a pre-SMC: " + orep.violation);
  if ((int)out.size() != q->vertex_count())
    throw PreconditionFailed("completion output has the wrong number of objects");
  std::vector<ClassVector> classes;
  for (const DObject& o : out) classes.push_back(o.class_vector());
  long long det = class_basis_determinant(classes);
  if (det != 1 && det != -1)
    throw PreconditionFailed("completion classes do not form a basis of the Grothendieck group");
  return out;
}

}  // namespace siltwb
