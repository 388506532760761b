#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "siltwb/matrix.hpp"

namespace siltwb {

struct CyclicQuiver : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  int id;      // stable, 0-based in input order
  int source;  // 1-based vertex
  int target;  // 1-based vertex
};

/// Integer vector in the Grothendieck group, indexed by vertices.
using ClassVector = std::vector<long long>;

/// A finite acyclic quiver.  Vertices are 1..n; parallel arrows are
/// allowed; acyclicity is verified at construction.  Immutable.
class Quiver {
public:
  Quiver(int vertex_count, std::vector<std::pair<int, int>> arrows);

  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<int>& topological_order() const { return topo_; }
  /// Position of each vertex in the topological order (1-based vertex -> index).
  int topo_index(int vertex) const { return topo_pos_[vertex - 1]; }

  /// Euler form <a, b> = sum a_i b_i - sum_{x->y} a_x b_y.
  long long euler_form(const ClassVector& a, const ClassVector& b) const;

  /// All directed paths from x to v as arrow-id sequences (source first).
  /// Includes the trivial path when x == v.  Finite by acyclicity.
  const std::vector<std::vector<int>>& paths(int x, int v) const;

  /// True if the underlying graph is a linearly ordered A_n line
  /// (vertices i, i+1 adjacent, single arrows).
  bool is_type_a_line() const;

  bool operator==(const Quiver& o) const;

private:
  int n_;
  std::vector<Arrow> arrows_;
  std::vector<int> topo_;      // vertices in topological order
  std::vector<int> topo_pos_;  // inverse of topo_
  std::vector<std::vector<std::vector<std::vector<int>>>> paths_;  // [x-1][v-1]
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// Determinant of the n x n matrix whose rows are the given classes.
/// The classes form a Z-basis of G_0 iff the result is +-1.
long long class_basis_determinant(const std::vector<ClassVector>& classes);

}  // namespace siltwb
