#include "siltwb/oracle.hpp"

#include <algorithm>
#include <functional>

namespace siltwb {

namespace {

void require_type_a(const QuiverPtr& q) {
  if (!q->is_type_a_line()) throw NotTypeA("quiver is not a linearly ordered A_n line");
}

Representation interval(QuiverPtr q, const Field& f, int i, int j) {
  std::vector<int> dims(q->vertex_count(), 0);
  for (int v = i; v <= j; ++v) dims[v - 1] = 1;
  std::vector<Matrix> maps;
  for (const Arrow& a : q->arrows()) {
    Matrix m(f, dims[a.target - 1], dims[a.source - 1]);
    if (dims[a.source - 1] == 1 && dims[a.target - 1] == 1) m.at(0, 0) = Scalar(f, 1);
    maps.push_back(std::move(m));
  }
  return Representation(q, f, std::move(dims), std::move(maps));
}

struct Universe {
  std::vector<Representation> reps;
  std::vector<DObject> items;   // reps x shifts, shift-major rep-minor
  std::vector<int> item_shift;  // parallel to items
  std::vector<int> item_rep;
  Window w;
};

Universe make_universe(QuiverPtr q, const Field& f, const Window& w) {
  Universe u;
  u.w = w;
  u.reps = enumerate_indecomposables(q, f);
  for (int s = w.min_shift; s <= w.max_shift; ++s)
    for (size_t r = 0; r < u.reps.size(); ++r) {
      u.items.push_back(DObject::from_rep(u.reps[r], s));
      u.item_shift.push_back(s);
      u.item_rep.push_back((int)r);
    }
  return u;
}

int rep_index(const Universe& u, const Representation& r) {
  for (size_t i = 0; i < u.reps.size(); ++i)
    if (is_isomorphic_indec(u.reps[i], r)) return (int)i;
  return -1;
}

/// Clique enumeration over a symmetric compatibility relation, sizes 1..max_size.
void cliques(const std::vector<std::vector<bool>>& ok, int max_size, std::vector<int>& cur,
             size_t from, const std::function<void(const std::vector<int>&)>& emit) {
  if (!cur.empty()) emit(cur);
  if ((int)cur.size() == max_size) return;
  for (size_t i = from; i < ok.size(); ++i) {
    bool fits = true;
    for (int c : cur)
      if (!ok[c][i]) fits = false;
    if (!fits) continue;
    cur.push_back((int)i);
    cliques(ok, max_size, cur, i + 1, emit);
    cur.pop_back();
  }
}

DObject sum_items(const Universe& u, const std::vector<int>& pick) {
  DObject out(u.items[pick[0]].quiver(), u.items[pick[0]].field());
  for (int i : pick) out = DObject::direct_sum(out, u.items[i]);
  return out;
}

DObject projective_generator(QuiverPtr q, const Field& f) {
  DObject out(q, f);
  for (int v = 1; v <= q->vertex_count(); ++v)
    out = DObject::direct_sum(out, DObject::from_rep(Representation::projective(q, f, v)));
  return out;
}

}  // namespace

std::vector<Representation> enumerate_indecomposables(QuiverPtr q, const Field& f) {
  require_type_a(q);
  std::vector<Representation> out;
  for (int i = 1; i <= q->vertex_count(); ++i)
    for (int j = i; j <= q->vertex_count(); ++j) {
      Representation m = interval(q, f, i, j);
      if (!end_ring(m).is_local())
        throw NotTypeA("interval module unexpectedly decomposable");
      out.push_back(std::move(m));
    }
  return out;
}

bool thick_closure_contains(const std::vector<DObject>& generators, const DObject& target,
                            const Window& w) {
  if (generators.empty()) return target.is_zero();
  QuiverPtr q = generators[0].quiver();
  const Field& f = generators[0].field();
  require_type_a(q);
  std::vector<Representation> reps = enumerate_indecomposables(q, f);
  auto rep_of = [&](const Representation& r) {
    for (size_t i = 0; i < reps.size(); ++i)
      if (is_isomorphic_indec(reps[i], r)) return (int)i;
    throw NotTypeA("summand is not an interval module");
  };

  std::vector<bool> present(reps.size(), false);
  for (const DObject& g : generators)
    for (const IndecSummand& s : g.summands()) {
      if (s.shift < w.min_shift || s.shift > w.max_shift)
        throw PreconditionFailed("generator shift outside the window");
      present[rep_of(s.rep)] = true;
    }

  int width = w.max_shift - w.min_shift;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t a = 0; a < reps.size(); ++a) {
      if (!present[a]) continue;
      for (size_t b = 0; b < reps.size(); ++b) {
        if (!present[b]) continue;
        DObject da = DObject::from_rep(reps[a]);
        for (int d = 0; d <= std::min(width, 1); ++d) {
          DObject db = DObject::from_rep(reps[b], d);
          for (const DMorphism& m : dhom_basis(da, db, 0)) {
            if (m.is_zero()) continue;
            DObject c = cone(m);
            for (const IndecSummand& s : c.summands()) {
              // admissible iff some placement keeps source, target and this
              // summand inside the window simultaneously
              int lo = std::max({w.min_shift, w.min_shift - d, w.min_shift - s.shift});
              int hi = std::min({w.max_shift, w.max_shift - d, w.max_shift - s.shift});
              if (lo > hi) continue;
              int r = rep_of(s.rep);
              if (!present[r]) present[r] = changed = true;
            }
          }
        }
      }
    }
  }

  for (const IndecSummand& s : target.summands()) {
    if (s.shift < w.min_shift || s.shift > w.max_shift)
      throw PreconditionFailed("target shift outside the window");
    if (!present[rep_of(s.rep)]) return false;
  }
  return true;
}

std::vector<DObject> enumerate_presilting(QuiverPtr q, const Field& f, const Window& w) {
  require_type_a(q);
  Universe u = make_universe(q, f, w);
  size_t m = u.items.size();
  std::vector<bool> self(m);
  for (size_t i = 0; i < m; ++i) self[i] = is_presilting(u.items[i]);
  std::vector<std::vector<bool>> ok(m, std::vector<bool>(m, false));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      ok[i][j] = ok[j][i] =
          self[i] && self[j] && is_presilting(DObject::direct_sum(u.items[i], u.items[j]));
  std::vector<DObject> out;
  std::vector<int> cur;
  cliques(ok, q->vertex_count(), cur, 0, [&](const std::vector<int>& pick) {
    if (pick.size() == 1 && !self[pick[0]]) return;
    out.push_back(sum_items(u, pick));
  });
  return out;
}

std::vector<DObject> enumerate_silting(QuiverPtr q, const Field& f, const Window& w) {
  Window padded{w.min_shift - 1, w.max_shift + 1};
  DObject gen = projective_generator(q, f);
  std::vector<DObject> out;
  for (const DObject& t : enumerate_presilting(q, f, w)) {
    if (t.summand_count() != q->vertex_count()) continue;
    if (thick_closure_contains({t}, gen, padded)) out.push_back(t);
  }
  return out;
}

std::vector<Representation> enumerate_tilting_modules(QuiverPtr q, const Field& f) {
  require_type_a(q);
  std::vector<Representation> reps = enumerate_indecomposables(q, f);
  size_t m = reps.size();
  std::vector<std::vector<bool>> ok(m, std::vector<bool>(m, false));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      ok[i][j] = ok[j][i] = ext1_dim(reps[i], reps[j]) == 0 && ext1_dim(reps[j], reps[i]) == 0;
  std::vector<Representation> out;
  std::vector<int> cur;
  cliques(ok, q->vertex_count(), cur, 0, [&](const std::vector<int>& pick) {
    if ((int)pick.size() != q->vertex_count()) return;
    Representation sum = reps[pick[0]];
    for (size_t k = 1; k < pick.size(); ++k) sum = Representation::direct_sum(sum, reps[pick[k]]);
    if (is_tilting_module(sum)) out.push_back(sum);
  });
  return out;
}

std::vector<std::vector<DObject>> enumerate_smc(QuiverPtr q, const Field& f, const Window& w) {
  require_type_a(q);
  Universe u = make_universe(q, f, w);
  size_t m = u.items.size();
  Window padded{w.min_shift - 1, w.max_shift + 1};
  DObject gen = projective_generator(q, f);
  std::vector<bool> self(m);
  for (size_t i = 0; i < m; ++i) self[i] = is_pre_smc({u.items[i]});
  std::vector<std::vector<bool>> ok(m, std::vector<bool>(m, false));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      ok[i][j] = ok[j][i] = self[i] && self[j] && is_pre_smc({u.items[i], u.items[j]});
  std::vector<std::vector<DObject>> out;
  std::vector<int> cur;
  cliques(ok, q->vertex_count(), cur, 0, [&](const std::vector<int>& pick) {
    if ((int)pick.size() != q->vertex_count()) return;
    if (pick.size() == 1 && !self[pick[0]]) return;
    std::vector<DObject> coll;
    std::vector<ClassVector> classes;
    for (int i : pick) {
      coll.push_back(u.items[i]);
      classes.push_back(u.items[i].class_vector());
    }
    long long det = class_basis_determinant(classes);
    if (det != 1 && det != -1) return;
    if (!thick_closure_contains(coll, gen, padded)) return;
    out.push_back(std::move(coll));
  });
  return out;
}

}  // namespace siltwb
