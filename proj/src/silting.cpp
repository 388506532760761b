#include "siltwb/silting.hpp"

#include <algorithm>
#include <numeric>

namespace siltwb {

namespace {

DObject safe_cone(const DMorphism& f) {
  if (f.source().is_zero()) return f.target();
  if (f.target().is_zero()) return f.source().shift(1);
  return cone(f);
}

std::vector<DObject> distinct_objects(const DObject& t) {
  std::vector<DObject> out;
  for (const auto& [obj, mult] : distinct_summands(t)) out.push_back(obj);
  return out;
}

/// Summand indices ordered by ascending shift, ties broken by topological
/// order of the degree-0 hom graph (edge i -> j for a nonzero hom between
/// non-isomorphic summands), then by original index.
std::vector<int> summand_order(const DObject& t) {
  int r = t.summand_count();
  std::vector<DObject> parts;
  for (int i = 0; i < r; ++i) parts.push_back(t.summand_object(i));
  std::vector<std::vector<bool>> edge(r, std::vector<bool>(r, false));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j || iso_test(parts[i], parts[j])) continue;
      edge[i][j] = dhom_dim(parts[i], parts[j], 0) > 0;
    }
  std::vector<bool> done(r, false);
  std::vector<int> order;
  auto key = [&](int i) { return std::pair<int, int>(t.summands()[i].shift, i); };
  for (int step = 0; step < r; ++step) {
    int best = -1;
    for (int i = 0; i < r; ++i) {
      if (done[i]) continue;
      bool ready = true;
      for (int j = 0; j < r; ++j)
        if (!done[j] && edge[j][i]) ready = false;
      if (!ready) continue;
      if (best < 0 || key(i) < key(best)) best = i;
    }
    if (best < 0) throw PreconditionFailed("degree-0 hom graph of the summands has a cycle");
    done[best] = true;
    order.push_back(best);
  }
  return order;
}

/// Could Hom(a, b[degree]) be nonzero on shift grounds alone?
bool hom_window_possible(const DObject& a, const DObject& b, int degree) {
  if (a.is_zero() || b.is_zero()) return false;
  return b.min_shift() + degree <= a.max_shift() + 1 && b.max_shift() + degree >= a.min_shift();
}

DObject complete_in(QuiverPtr q, const Field& f, const std::vector<DObject>& ctx,
                    const DObject& t);

}  // namespace

DObject make_basic(const DObject& t) {
  DObject out(t.quiver(), t.field());
  for (const auto& [obj, mult] : distinct_summands(t)) out = DObject::direct_sum(out, obj);
  return out;
}

bool is_presilting(const DObject& t) {
  if (t.is_zero()) return true;
  int span = t.max_shift() - t.min_shift();
  for (int d = 1; d <= span + 1; ++d)
    if (dhom_dim(t, t, d) != 0) return false;
  return true;
}

bool is_silting(const DObject& t) {
  if (t.is_zero()) return false;
  return is_presilting(t) && make_basic(t).summand_count() == t.quiver()->vertex_count();
}

bool is_tilting_module(const Representation& m) {
  if (m.is_zero()) return false;
  if (ext1_dim(m, m) != 0) return false;
  return (int)decompose(m).size() == m.quiver()->vertex_count();
}

DObject mutate_left(const DObject& t, int summand_index) {
  if (!is_silting(t)) throw NotSilting("mutation requires a silting object");
  if (summand_index < 0 || summand_index >= t.summand_count())
    throw NotASummand("summand index out of range");
  DObject m = t.summand_object(summand_index);
  DObject rest = t.without({summand_index});
  auto ap = minimal_left_approximation(distinct_objects(rest), m);
  DObject n = safe_cone(ap.map);
  DObject out = make_basic(DObject::direct_sum(rest, n));
  if (!is_silting(out)) throw NotSilting("left mutation did not produce a silting object");
  return out;
}

DObject mutate_right(const DObject& t, int summand_index) {
  if (!is_silting(t)) throw NotSilting("mutation requires a silting object");
  if (summand_index < 0 || summand_index >= t.summand_count())
    throw NotASummand("summand index out of range");
  DObject m = t.summand_object(summand_index);
  DObject rest = t.without({summand_index});
  auto ap = minimal_right_approximation(distinct_objects(rest), m);
  DObject n = safe_cone(ap.map).shift(-1);
  DObject out = make_basic(DObject::direct_sum(rest, n));
  if (!is_silting(out)) throw NotSilting("right mutation did not produce a silting object");
  return out;
}

Representation bongartz_complete(const Representation& m) {
  if (ext1_dim(m, m) != 0) throw NotRigid("module has self-extensions");
  QuiverPtr q = m.quiver();
  const Field& f = m.field();
  Representation p = Representation::projective(q, f, 1);
  for (int v = 2; v <= q->vertex_count(); ++v)
    p = Representation::direct_sum(p, Representation::projective(q, f, v));

  auto basis = ext1_basis(m, p);
  Representation b = p;
  if (!basis.empty()) {
    // universal extension 0 -> p -> b -> m^d -> 0 over the full ext basis
    int d = (int)basis.size();
    Representation md = m;
    for (int k = 1; k < d; ++k) md = Representation::direct_sum(md, m);
    std::vector<Matrix> cocycle;
    for (size_t a = 0; a < q->arrows().size(); ++a) {
      Matrix block = basis[0].cocycle[a];
      for (int k = 1; k < d; ++k) block = Matrix::hstack(block, basis[k].cocycle[a]);
      cocycle.push_back(std::move(block));
    }
    b = extension_middle_term(ExtClass{md, p, cocycle}).middle;
  }

  // drop summands already present in m
  std::vector<std::pair<Representation, int>> mparts = decompose(m);
  Representation n = Representation::zero(q, f);
  for (const auto& [rep, mult] : decompose(b)) {
    bool dup = false;
    for (const auto& [mr, mm] : mparts)
      if (is_isomorphic_indec(rep, mr)) dup = true;
    if (!dup) n = Representation::direct_sum(n, rep);
  }
  if (!is_tilting_module(Representation::direct_sum(m, n)))
    throw NotRigid("completion failed to produce a tilting module");
  return n;
}

std::vector<DObject> sort_presilting_summands(const DObject& t) {
  if (!is_presilting(t)) throw NotPresilting("object is not presilting");
  DObject tn = t.is_zero() ? t : t.shift(-t.max_shift());
  std::vector<DObject> out;
  for (int i : summand_order(tn)) out.push_back(tn.summand_object(i));
  return out;
}

DObject lift_silting(const DObject& d, const DObject& n) {
  if (d.is_zero()) throw PreconditionFailed("reduction object is zero");
  if (!is_presilting(d)) throw PreconditionFailed("reduction object is not presilting");
  // n must lie in thick(d)^perp
  for (int i = n.is_zero() ? 1 : n.min_shift() - d.max_shift() - 1;
       !n.is_zero() && i <= n.max_shift() - d.min_shift() + 1; ++i)
    if (dhom_dim(d.shift(i), n, 0) != 0)
      throw PreconditionFailed("object to lift is not perpendicular to the reduction object");
  if (n.is_zero()) return make_basic(d);

  std::vector<DObject> targets;
  for (int i = 1; i <= n.max_shift() - d.min_shift() + 1; ++i)
    if (hom_window_possible(n, d, i)) targets.push_back(d.shift(i));
  auto ap = minimal_left_approximation(targets, n);
  DObject t_n = safe_cone(ap.map).shift(-1);
  return make_basic(DObject::direct_sum(t_n, d));
}

DObject perpendicular_silting(QuiverPtr q, const Field& f, const std::vector<DObject>& ctx) {
  DObject out(q, f);
  for (int v = 1; v <= q->vertex_count(); ++v) {
    DObject x = DObject::from_rep(Representation::projective(q, f, v));
    for (const DObject& e : ctx) {
      if (x.is_zero()) break;
      x = thick_perp_project(e, x).z;
    }
    out = DObject::direct_sum(out, x);
  }
  out = make_basic(out);
  if (!is_presilting(out) || out.summand_count() != q->vertex_count() - (int)ctx.size())
    throw PreconditionFailed(
        "projected projectives failed to form a silting object of the perpendicular subcategory");
  return out;
}

namespace {

DObject complete_in(QuiverPtr q, const Field& f, const std::vector<DObject>& ctx,
                    const DObject& t) {
  if (t.is_zero()) return perpendicular_silting(q, f, ctx);
  std::vector<int> order = summand_order(t);
  int last = order.back();
  DObject tr = t.summand_object(last);
  DObject rest = t.without({last});
  // rest lies in thick(tr)^perp: positive degrees vanish by presilting,
  // degree 0 by the choice of tr as the topologically last summand
  for (int i = 0; i < rest.summand_count(); ++i)
    if (!iso_test(tr, rest.summand_object(i)) &&
        dhom_dim(tr, rest.summand_object(i), 0) != 0)
      throw PreconditionFailed("summand ordering violated during completion");
  std::vector<DObject> deeper = ctx;
  deeper.push_back(tr);
  DObject completed = complete_in(q, f, deeper, rest);
  return lift_silting(tr, completed);
}

}  // namespace

DObject complete_presilting(const DObject& t) {
  DObject tb = make_basic(t);
  if (!is_presilting(tb)) throw NotPresilting("object is not presilting");
  DObject out = complete_in(t.quiver(), t.field(), {}, tb);
  if (!is_silting(out)) throw PreconditionFailed("completion failed to produce a silting object");
  for (int i = 0; i < tb.summand_count(); ++i) {
    bool found = false;
    for (int j = 0; j < out.summand_count(); ++j)
      if (iso_test(tb.summand_object(i), out.summand_object(j))) found = true;
    if (!found) throw PreconditionFailed("completion lost an input summand");
  }
  std::vector<ClassVector> classes;
  for (const auto& [obj, mult] : distinct_summands(out)) classes.push_back(obj.class_vector());
  long long det = class_basis_determinant(classes);
  if (det != 1 && det != -1)
    throw PreconditionFailed("completion classes do not form a basis of the Grothendieck group");
  return out;
}

namespace {

/// Tilting object of the current perpendicular level, concentrated in a
/// single shift (returned normalized to shift 0).
DObject tilting_rec(const std::vector<DObject>& ctx, const DObject& t) {
  DObject tb = make_basic(t);
  if (tb.summand_count() == 1) return tb.shift(-tb.max_shift());
  std::vector<int> order = summand_order(tb);
  int last = order.back();
  DObject tn = tb.shift(-tb.summands()[last].shift);
  DObject e0 = tn.summand_object(last);
  DObject rest = tn.without({last});

  DObject projected(tn.quiver(), tn.field());
  for (int i = 0; i < rest.summand_count(); ++i)
    projected = DObject::direct_sum(projected, thick_perp_project(e0, rest.summand_object(i)).z);
  projected = make_basic(projected);

  std::vector<DObject> deeper = ctx;
  deeper.push_back(e0);
  DObject mw = tilting_rec(deeper, projected);

  // exchange e0[1] for a module through the right mutation triangle
  DObject pivot = e0.shift(1);
  auto ap = minimal_right_approximation(distinct_objects(mw), pivot);
  DObject fresh = safe_cone(ap.map).shift(-1);
  DObject out = make_basic(DObject::direct_sum(mw, fresh));
  if (out.max_shift() != 0 || out.min_shift() != 0)
    throw PreconditionFailed("tilting extraction left a summand outside the heart");
  return out;
}

}  // namespace

Representation silting_to_tilting(const DObject& t) {
  if (!is_silting(t)) throw NotSilting("input is not a silting object");
  DObject res = tilting_rec({}, t);
  Representation out = Representation::zero(t.quiver(), t.field());
  for (const IndecSummand& s : res.summands()) out = Representation::direct_sum(out, s.rep);
  if (!is_tilting_module(out))
    throw PreconditionFailed("extracted module failed the tilting verification");
  return out;
}

}  // namespace siltwb
