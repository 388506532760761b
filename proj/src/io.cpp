#include "siltwb/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace siltwb {

namespace {

Scalar scalar_from_json(const Field& f, const Json& j) {
  if (j.is_number_integer()) return Scalar(f, (long long)j.get<long long>());
  if (j.is_string()) {
    try {
      return Scalar(f, BigRat(j.get<std::string>()));
    } catch (const std::exception&) {
      throw ParseError("bad scalar literal: " + j.get<std::string>());
    }
  }
  throw ParseError("scalar entries must be integers or rational strings");
}

Json scalar_to_json(const Scalar& s) {
  if (!s.field().is_rational()) return Json(s.residue());
  const BigRat& r = s.rational();
  if (boost::multiprecision::denominator(r) == 1 &&
      boost::multiprecision::numerator(r) >= std::numeric_limits<long long>::min() &&
      boost::multiprecision::numerator(r) <= std::numeric_limits<long long>::max())
    return Json((long long)boost::multiprecision::numerator(r));
  return Json(r.str());
}

Matrix matrix_from_json(const Field& f, int rows, int cols, const Json& j) {
  if (!j.is_array() || (int)j.size() != rows)
    throw ParseError("matrix has the wrong number of rows");
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || (int)j[i].size() != cols)
      throw ParseError("matrix row has the wrong number of entries");
    for (int k = 0; k < cols; ++k) m.at(i, k) = scalar_from_json(f, j[i][k]);
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Interval representation on a type-A line (used by the compact notation).
Representation interval_rep(QuiverPtr q, const Field& f, int i, int j) {
  if (!q->is_type_a_line()) throw ParseError("interval names need a type-A line quiver");
  if (i < 1 || j > q->vertex_count() || i > j) throw ParseError("interval out of range");
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

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

QuiverPtr quiver_from_text(const std::string& text) {
  // JSON form
  std::string trimmed = text;
  size_t first = trimmed.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && trimmed[first] == '{') {
    Json j;
    try {
      j = Json::parse(trimmed);
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad quiver JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("arrows"))
      throw ParseError("quiver JSON needs \"vertices\" and \"arrows\"");
    std::vector<std::pair<int, int>> arrows;
    for (const Json& a : j["arrows"]) {
      if (!a.is_array() || a.size() != 2) throw ParseError("arrow entries must be pairs");
      arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    try {
      return std::make_shared<Quiver>(j["vertices"].get<int>(), arrows);
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad quiver: ") + e.what());
    }
  }

  std::istringstream in(text);
  std::string word;
  int n = -1;
  std::vector<std::pair<int, int>> arrows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (!(ls >> word)) continue;
    if (word == "vertices") {
      if (!(ls >> n)) throw ParseError("bad vertices line");
    } else if (word == "arrow") {
      int s, t;
      if (!(ls >> s >> t)) throw ParseError("bad arrow line");
      arrows.emplace_back(s, t);
    } else if (word[0] == '#') {
      continue;
    } else {
      throw ParseError("unknown quiver line: " + line);
    }
  }
  if (n < 0) throw ParseError("missing vertices line");
  try {
    return std::make_shared<Quiver>(n, arrows);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad quiver: ") + e.what());
  }
}

QuiverPtr quiver_from_file(const std::string& path) { return quiver_from_text(read_file(path)); }

Json quiver_to_json(const Quiver& q) {
  Json j;
  j["vertices"] = q.vertex_count();
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back(Json::array({a.source, a.target}));
  j["arrows"] = std::move(arrows);
  return j;
}

Representation rep_from_json(QuiverPtr q, const Field& f, const Json& j) {
  if (!j.contains("dims")) throw ParseError("representation JSON needs \"dims\"");
  std::vector<int> dims = j["dims"].get<std::vector<int>>();
  if ((int)dims.size() != q->vertex_count())
    throw ParseError("dimension vector length does not match the quiver");
  std::vector<Matrix> maps;
  const Json& arrows = j.contains("arrows") ? j["arrows"] : Json::array();
  for (const Arrow& a : q->arrows()) {
    int rows = dims[a.target - 1], cols = dims[a.source - 1];
    if ((size_t)a.id < arrows.size())
      maps.push_back(matrix_from_json(f, rows, cols, arrows[a.id]));
    else
      maps.push_back(Matrix(f, rows, cols));
  }
  try {
    return Representation(q, f, std::move(dims), std::move(maps));
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad representation: ") + e.what());
  }
}

Json rep_to_json(const Representation& r) {
  Json j;
  j["dims"] = r.dims();
  Json arrows = Json::array();
  for (const Arrow& a : r.quiver()->arrows()) arrows.push_back(matrix_to_json(r.arrow_map(a.id)));
  j["arrows"] = std::move(arrows);
  return j;
}

DObject dobject_from_json(QuiverPtr q, const Field& f, const Json& j) {
  if (j.contains("dims")) return DObject::from_rep(rep_from_json(q, f, j));
  if (!j.contains("summands")) throw ParseError("object JSON needs \"summands\" or \"dims\"");
  std::vector<IndecSummand> parts;
  for (const Json& s : j["summands"]) {
    int shift = s.contains("shift") ? s["shift"].get<int>() : 0;
    parts.push_back({rep_from_json(q, f, s["rep"]), shift});
  }
  return DObject::from_summands(q, f, parts);
}

Json dobject_to_json(const DObject& o) {
  Json j;
  Json parts = Json::array();
  for (const IndecSummand& s : o.summands()) {
    Json p;
    p["shift"] = s.shift;
    p["rep"] = rep_to_json(s.rep);
    parts.push_back(std::move(p));
  }
  j["summands"] = std::move(parts);
  return j;
}

DObject parse_object(QuiverPtr q, const Field& f, const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') {
    Json j;
    try {
      j = Json::parse(read_file(spec.substr(1)));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad object JSON: ") + e.what());
    }
    return dobject_from_json(q, f, j);
  }
  if (spec == "0") return DObject(q, f);

  static const std::regex term_re(R"(^(P|S|I)(\d+)(?:-(\d+))?(?:\[(-?\d+)\])?$)");
  DObject out(q, f);
  std::istringstream ss(spec);
  std::string term;
  while (std::getline(ss, term, '+')) {
    std::smatch m;
    if (!std::regex_match(term, m, term_re)) throw ParseError("bad object term: " + term);
    int v = std::stoi(m[2]);
    if (v < 1 || v > q->vertex_count()) throw ParseError("vertex out of range in: " + term);
    int shift = m[4].matched ? std::stoi(m[4]) : 0;
    Representation rep = Representation::zero(q, f);
    if (m[1] == "P") {
      if (m[3].matched) throw ParseError("bad object term: " + term);
      rep = Representation::projective(q, f, v);
    } else if (m[1] == "S") {
      if (m[3].matched) throw ParseError("bad object term: " + term);
      rep = Representation::simple(q, f, v);
    } else {
      if (!m[3].matched) throw ParseError("interval term needs two endpoints: " + term);
      rep = interval_rep(q, f, v, std::stoi(m[3]));
    }
    out = DObject::direct_sum(out, DObject::from_rep(rep, shift));
  }
  return out;
}

std::string object_label(const DObject& o) {
  if (o.is_zero()) return "0";
  QuiverPtr q = o.quiver();
  const Field& f = o.field();
  auto name_of = [&](const Representation& r) -> std::string {
    for (int v = 1; v <= q->vertex_count(); ++v) {
      if (is_isomorphic_indec(r, Representation::simple(q, f, v))) return "S" + std::to_string(v);
      if (is_isomorphic_indec(r, Representation::projective(q, f, v)))
        return "P" + std::to_string(v);
    }
    if (q->is_type_a_line()) {
      for (int i = 1; i <= q->vertex_count(); ++i)
        for (int j = i; j <= q->vertex_count(); ++j)
          if (is_isomorphic_indec(r, interval_rep(q, f, i, j)))
            return "I" + std::to_string(i) + "-" + std::to_string(j);
    }
    std::string s = "M(";
    for (size_t i = 0; i < r.dims().size(); ++i)
      s += (i ? "," : "") + std::to_string(r.dims()[i]);
    return s + ")";
  };
  std::string out;
  for (const IndecSummand& s : o.summands()) {
    if (!out.empty()) out += "+";
    out += name_of(s.rep);
    if (s.shift != 0) out += "[" + std::to_string(s.shift) + "]";
  }
  return out;
}

}  // namespace siltwb
