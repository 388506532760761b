#include "siltwb/quiver.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <queue>

namespace siltwb {

Quiver::Quiver(int vertex_count, std::vector<std::pair<int, int>> arrows)
    : n_(vertex_count) {
  if (n_ <= 0) throw std::invalid_argument("quiver needs at least one vertex");
  arrows_.reserve(arrows.size());
  for (int i = 0; i < (int)arrows.size(); ++i) {
    auto [s, t] = arrows[i];
    if (s < 1 || s > n_ || t < 1 || t > n_)
      throw std::invalid_argument("arrow endpoint out of range");
    arrows_.push_back(Arrow{i, s, t});
  }

  // Kahn's algorithm; a leftover vertex certifies a directed cycle.
  std::vector<int> indeg(n_, 0);
  for (const auto& a : arrows_) {
    if (a.source == a.target) throw CyclicQuiver("loop at vertex " + std::to_string(a.source));
    ++indeg[a.target - 1];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 1; v <= n_; ++v)
    if (indeg[v - 1] == 0) ready.push(v);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[a.target - 1] == 0) ready.push(a.target);
  }
  if ((int)topo_.size() != n_) throw CyclicQuiver("quiver has a directed cycle");
  topo_pos_.assign(n_, 0);
  for (int i = 0; i < n_; ++i) topo_pos_[topo_[i] - 1] = i;

  // all paths, by dynamic programming along reverse topological order
  paths_.assign(n_, std::vector<std::vector<std::vector<int>>>(n_));
  for (int x = 1; x <= n_; ++x) {
    paths_[x - 1][x - 1].push_back({});  // trivial path
    // extend in topological order of intermediate targets
    for (int vi = topo_pos_[x - 1]; vi < n_; ++vi) {
      int v = topo_[vi];
      if (paths_[x - 1][v - 1].empty()) continue;
      for (const auto& a : arrows_) {
        if (a.source != v) continue;
        for (const auto& p : paths_[x - 1][v - 1]) {
          auto q = p;
          q.push_back(a.id);
          paths_[x - 1][a.target - 1].push_back(std::move(q));
        }
      }
    }
  }
}

long long Quiver::euler_form(const ClassVector& a, const ClassVector& b) const {
  if ((int)a.size() != n_ || (int)b.size() != n_)
    throw std::invalid_argument("class vector length mismatch");
  long long s = 0;
  for (int i = 0; i < n_; ++i) s += a[i] * b[i];
  for (const auto& ar : arrows_) s -= a[ar.source - 1] * b[ar.target - 1];
  return s;
}

const std::vector<std::vector<int>>& Quiver::paths(int x, int v) const {
  return paths_[x - 1][v - 1];
}

bool Quiver::is_type_a_line() const {
  if ((int)arrows_.size() != n_ - 1) return false;
  std::vector<int> seen(n_ - 1, 0);
  for (const auto& a : arrows_) {
    int lo = std::min(a.source, a.target);
    if (std::abs(a.source - a.target) != 1) return false;
    if (seen[lo - 1]++) return false;
  }
  return true;
}

bool Quiver::operator==(const Quiver& o) const {
  if (n_ != o.n_ || arrows_.size() != o.arrows_.size()) return false;
  for (size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].source != o.arrows_[i].source || arrows_[i].target != o.arrows_[i].target)
      return false;
  return true;
}

long long class_basis_determinant(const std::vector<ClassVector>& classes) {
  using boost::multiprecision::cpp_int;
  size_t n = classes.size();
  for (const auto& c : classes)
    if (c.size() != n) throw std::invalid_argument("class matrix must be square");
  std::vector<std::vector<cpp_int>> m(n, std::vector<cpp_int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = classes[i][j];

  // fraction-free Bareiss elimination
  cpp_int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  cpp_int det = sign * m[n - 1][n - 1];
  return (long long)det;
}

}  // namespace siltwb
