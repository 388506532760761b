#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "siltwb/io.hpp"
#include "siltwb/oracle.hpp"

using namespace siltwb;

namespace {

struct Session {
  QuiverPtr quiver;
  Field field;
  bool json = false;
  bool verbose_triangles = false;
  unsigned seed = 1;
};

void emit(const Session& s, const Json& j, const std::string& human) {
  if (s.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << human << "\n";
}

void log_triangle(const Session& s, const std::string& a, const std::string& b,
                  const std::string& c) {
  if (!s.verbose_triangles || s.json) return;
  std::cout << "triangle: " << a << " -> " << b << " -> " << c << " -> " << a << "[1]\n";
}

int find_summand(const DObject& t, const DObject& m) {
  if (m.summand_count() != 1) throw NotASummand("mutation pivot must be indecomposable");
  for (int i = 0; i < t.summand_count(); ++i)
    if (iso_test(t.summand_object(i), m)) return i;
  throw NotASummand("object " + object_label(m) + " is not a summand of " + object_label(t));
}

long long summand_class_det(const DObject& t) {
  std::vector<ClassVector> classes;
  for (const auto& [obj, mult] : distinct_summands(t)) classes.push_back(obj.class_vector());
  if ((int)classes.size() != t.quiver()->vertex_count()) return 0;
  return class_basis_determinant(classes);
}

Json objects_json(const std::vector<DObject>& xs) {
  Json arr = Json::array();
  for (const DObject& x : xs) {
    Json j;
    j["label"] = object_label(x);
    j["object"] = dobject_to_json(x);
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string labels_line(const std::vector<DObject>& xs) {
  std::string out;
  for (const DObject& x : xs) {
    if (!out.empty()) out += ", ";
    out += object_label(x);
  }
  return out;
}

Representation as_module(const DObject& o) {
  Representation m = Representation::zero(o.quiver(), o.field());
  for (const IndecSummand& s : o.summands()) {
    if (s.shift != 0) throw PreconditionFailed("expected a module concentrated in degree 0");
    m = Representation::direct_sum(m, s.rep);
  }
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"siltwb: exact workbench for silting objects and simple-minded collections"};
  app.require_subcommand(1);

  Session ses;
  std::string quiver_file, field_spec;
  const char* env_field = std::getenv("SILTWB_FIELD");
  field_spec = env_field ? env_field : "101";
  app.add_option("--quiver", quiver_file, "quiver file (text or JSON)");
  app.add_option("--field", field_spec, "ground field: a prime p or Q");
  app.add_flag("--json", ses.json, "emit a JSON report");
  app.add_flag("--verbose-triangles", ses.verbose_triangles, "log approximation triangles");
  app.add_option("--seed", ses.seed, "seed for randomized decomposition fallbacks");

  std::string arg_a, arg_b, arg_t, arg_m, arg_e, arg_y, oracle_mode;
  std::vector<std::string> arg_xs;
  int degree = 0;
  bool left = false, right = false;
  std::vector<int> window_spec;

  auto* hom = app.add_subcommand("hom", "dimension of Hom(A, B[d])");
  hom->add_option("A", arg_a)->required();
  hom->add_option("B", arg_b)->required();
  hom->add_option("--degree", degree, "hom degree (default 0)");

  auto* ext = app.add_subcommand("ext", "dimension of Hom(A, B[1])");
  ext->add_option("A", arg_a)->required();
  ext->add_option("B", arg_b)->required();

  auto* dec = app.add_subcommand("decompose", "indecomposable summands");
  dec->add_option("A", arg_a)->required();

  auto* chp = app.add_subcommand("check-presilting", "positive-degree self-hom vanishing");
  chp->add_option("T", arg_t)->required();
  auto* chs = app.add_subcommand("check-silting", "presilting with n summands");
  chs->add_option("T", arg_t)->required();

  auto* mut = app.add_subcommand("mutate", "exchange one silting summand");
  mut->add_option("T", arg_t)->required();
  mut->add_option("--at", arg_m, "summand to exchange")->required();
  mut->add_flag("--left", left);
  mut->add_flag("--right", right);

  auto* cps = app.add_subcommand("complete-presilting", "extend to a silting object");
  cps->add_option("T", arg_t)->required();

  auto* stt = app.add_subcommand("silting-to-tilting", "extract a tilting module");
  stt->add_option("T", arg_t)->required();

  auto* bon = app.add_subcommand("bongartz", "Bongartz completion of a rigid module");
  bon->add_option("M", arg_m)->required();

  auto* exq = app.add_subcommand("ext-quiver", "Ext-quiver of a pre-SMC");
  exq->add_option("X", arg_xs)->required();
  auto* chx = app.add_subcommand("check-presmc", "pre-SMC conditions");
  chx->add_option("X", arg_xs)->required();
  auto* cpx = app.add_subcommand("complete-presmc", "extend to a full collection");
  cpx->add_option("X", arg_xs)->required();

  auto* red = app.add_subcommand("reduce", "project to thick(E)-perpendicular");
  red->add_option("--exceptional", arg_e)->required();
  red->add_option("--object", arg_y)->required();

  auto* ora = app.add_subcommand("oracle", "brute-force enumeration on type A");
  ora->add_option("mode", oracle_mode, "enumerate-silting | enumerate-tilting | enumerate-smc")
      ->required();
  ora->add_option("--window", window_spec, "shift window: min max")->expected(2);

  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ses.field = Field::parse(field_spec);
  } catch (const std::exception& e) {
    std::cerr << "parse error: bad field: " << field_spec << "\n";
    return 2;
  }

  try {
    if (quiver_file.empty()) throw ParseError("--quiver FILE is required");
    ses.quiver = quiver_from_file(quiver_file);
    auto obj = [&](const std::string& spec) { return parse_object(ses.quiver, ses.field, spec); };
    auto objs = [&](const std::vector<std::string>& specs) {
      std::vector<DObject> out;
      for (const auto& s : specs) out.push_back(obj(s));
      return out;
    };

    if (*hom || *ext) {
      int d = *ext ? 1 : degree;
      DObject a = obj(arg_a), b = obj(arg_b);
      int dim = dhom_dim(a, b, d);
      Json j;
      j["command"] = *ext ? "ext" : "hom";
      j["source"] = object_label(a);
      j["target"] = object_label(b);
      j["degree"] = d;
      j["dim"] = dim;
      emit(ses, j,
           "dim Hom(" + object_label(a) + ", " + object_label(b) + "[" + std::to_string(d) +
               "]) = " + std::to_string(dim));
    } else if (*dec) {
      DObject a = obj(arg_a);
      Json j;
      j["command"] = "decompose";
      Json parts = Json::array();
      std::string human;
      for (const auto& [piece, mult] : distinct_summands(a)) {
        Json p;
        p["label"] = object_label(piece);
        p["multiplicity"] = mult;
        p["object"] = dobject_to_json(piece);
        parts.push_back(std::move(p));
        if (!human.empty()) human += " + ";
        human += object_label(piece);
        if (mult > 1) human += "^" + std::to_string(mult);
      }
      j["summands"] = std::move(parts);
      emit(ses, j, a.is_zero() ? "0" : human);
    } else if (*chp) {
      DObject t = obj(arg_t);
      bool ok = is_presilting(t);
      Json j;
      j["command"] = "check-presilting";
      j["presilting"] = ok;
      emit(ses, j, std::string(ok ? "presilting" : "not presilting") + ": " + object_label(t));
    } else if (*chs) {
      DObject t = obj(arg_t);
      bool ok = is_silting(t);
      long long det = summand_class_det(t);
      Json j;
      j["command"] = "check-silting";
      j["silting"] = ok;
      j["summands"] = make_basic(t).summand_count();
      j["class_determinant"] = det;
      emit(ses, j,
           std::string(ok ? "silting" : "not silting") + ", " +
               std::to_string(make_basic(t).summand_count()) + " summands, det " +
               std::to_string(det));
    } else if (*mut) {
      if (left == right) throw ParseError("choose exactly one of --left / --right");
      DObject t = obj(arg_t);
      DObject m = obj(arg_m);
      int at = find_summand(t, m);
      DObject rest = t.without({at});
      std::vector<DObject> others;
      for (const auto& [o, mu] : distinct_summands(rest)) others.push_back(o);
      DObject out = left ? mutate_left(t, at) : mutate_right(t, at);
      if (ses.verbose_triangles) {
        if (left) {
          auto ap = minimal_left_approximation(others, m);
          log_triangle(ses, object_label(m), object_label(ap.mid),
                       object_label(ap.mid.is_zero() ? m.shift(1) : cone(ap.map)));
        } else {
          auto ap = minimal_right_approximation(others, m);
          log_triangle(ses, object_label(ap.mid.is_zero() ? m.shift(-1) : cone(ap.map).shift(-1)),
                       object_label(ap.mid), object_label(m));
        }
      }
      Json j;
      j["command"] = "mutate";
      j["direction"] = left ? "left" : "right";
      j["result"] = dobject_to_json(out);
      j["label"] = object_label(out);
      emit(ses, j, object_label(out));
    } else if (*cps) {
      DObject out = complete_presilting(obj(arg_t));
      Json j;
      j["command"] = "complete-presilting";
      j["result"] = dobject_to_json(out);
      j["label"] = object_label(out);
      j["class_determinant"] = summand_class_det(out);
      emit(ses, j, object_label(out));
    } else if (*stt) {
      Representation m = silting_to_tilting(obj(arg_t));
      DObject md = DObject::from_rep(m);
      Json j;
      j["command"] = "silting-to-tilting";
      j["result"] = dobject_to_json(md);
      j["label"] = object_label(md);
      emit(ses, j, object_label(md));
    } else if (*bon) {
      Representation m = as_module(obj(arg_m));
      Representation n = bongartz_complete(m);
      DObject nd = DObject::from_rep(n);
      Json j;
      j["command"] = "bongartz";
      j["result"] = dobject_to_json(nd);
      j["label"] = object_label(nd);
      emit(ses, j, object_label(nd));
    } else if (*exq) {
      std::vector<DObject> xs = objs(arg_xs);
      ExtQuiver q = ext_quiver(xs);
      Json j;
      j["command"] = "ext-quiver";
      Json verts = Json::array();
      for (const DObject& x : xs) verts.push_back(object_label(x));
      j["vertices"] = std::move(verts);
      Json arrows = Json::array();
      std::string human = "arrows:";
      for (size_t a = 0; a < xs.size(); ++a)
        for (size_t b = 0; b < xs.size(); ++b)
          if (q.multiplicity[a][b] > 0) {
            arrows.push_back(Json::array({(int)a, (int)b, q.multiplicity[a][b]}));
            human += " " + object_label(xs[a]) + "->" + object_label(xs[b]) + "(x" +
                     std::to_string(q.multiplicity[a][b]) + ")";
          }
      j["arrows"] = std::move(arrows);
      j["acyclic"] = is_acyclic(q);
      emit(ses, j, human + (is_acyclic(q) ? " [acyclic]" : " [cyclic]"));
    } else if (*chx) {
      auto rep = pre_smc_report(objs(arg_xs));
      Json j;
      j["command"] = "check-presmc";
      j["pre_smc"] = rep.ok;
      j["violation"] = rep.violation;
      emit(ses, j, rep.ok ? "pre-SMC" : "not a pre-SMC: " + rep.violation);
    } else if (*cpx) {
      std::vector<DObject> xs = objs(arg_xs);
      Json j;
      j["command"] = "complete-presmc";
      try {
        std::vector<DObject> out = complete_presmc(xs);
        j["completable"] = true;
        j["objects"] = objects_json(out);
        emit(ses, j, labels_line(out));
      } catch (const NotCompletable& e) {
        j["completable"] = false;
        j["reason"] = e.what();
        emit(ses, j, std::string("NotCompletable: ") + e.what());
      }
    } else if (*red) {
      DObject e = obj(arg_e), y = obj(arg_y);
      auto pr = thick_perp_project(e, y);
      log_triangle(ses, object_label(pr.e_x), object_label(y), object_label(pr.z));
      Json j;
      j["command"] = "reduce";
      j["projection"] = dobject_to_json(pr.z);
      j["label"] = object_label(pr.z);
      j["thick_part"] = object_label(pr.e_x);
      emit(ses, j, object_label(pr.z));
    } else if (*ora) {
      Window w;
      if (!window_spec.empty()) {
        w.min_shift = window_spec[0];
        w.max_shift = window_spec[1];
        if (w.min_shift > w.max_shift) throw ParseError("bad window");
      }
      Json j;
      j["command"] = "oracle";
      j["mode"] = oracle_mode;
      j["window_certified"] = true;
      if (oracle_mode == "enumerate-silting") {
        auto res = enumerate_silting(ses.quiver, ses.field, w);
        j["count"] = res.size();
        j["objects"] = objects_json(res);
        emit(ses, j, std::to_string(res.size()) + " silting objects: " + labels_line(res));
      } else if (oracle_mode == "enumerate-tilting") {
        auto res = enumerate_tilting_modules(ses.quiver, ses.field);
        std::vector<DObject> ds;
        for (const auto& m : res) ds.push_back(DObject::from_rep(m));
        j["count"] = res.size();
        j["objects"] = objects_json(ds);
        emit(ses, j, std::to_string(res.size()) + " tilting modules: " + labels_line(ds));
      } else if (oracle_mode == "enumerate-smc") {
        auto res = enumerate_smc(ses.quiver, ses.field, w);
        j["count"] = res.size();
        Json arr = Json::array();
        std::string human = std::to_string(res.size()) + " collections:";
        for (const auto& coll : res) {
          arr.push_back(objects_json(coll));
          human += " {" + labels_line(coll) + "}";
        }
        j["collections"] = std::move(arr);
        emit(ses, j, human);
      } else {
        throw ParseError("unknown oracle mode: " + oracle_mode);
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
