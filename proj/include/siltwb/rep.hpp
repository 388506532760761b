#pragma once

#include <vector>

#include "siltwb/algebra.hpp"
#include "siltwb/matrix.hpp"
#include "siltwb/quiver.hpp"

namespace siltwb {

/// Finite-dimensional representation of an acyclic quiver: a dimension
/// per vertex and one matrix per arrow (target-dim x source-dim).
/// Immutable.
class Representation {
public:
  Representation(QuiverPtr q, const Field& f, std::vector<int> dims, std::vector<Matrix> arrow_maps);

  static Representation zero(QuiverPtr q, const Field& f);
  static Representation simple(QuiverPtr q, const Field& f, int vertex);
  /// Indecomposable projective P_vertex; the basis of (P_vertex)_v is the
  /// path list quiver->paths(vertex, v), in that order.
  static Representation projective(QuiverPtr q, const Field& f, int vertex);
  static Representation direct_sum(const Representation& a, const Representation& b);

  const QuiverPtr& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  int dim(int vertex) const { return dims_[vertex - 1]; }
  const std::vector<int>& dims() const { return dims_; }
  const Matrix& arrow_map(int arrow_id) const { return arrow_maps_[arrow_id]; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  ClassVector class_vector() const;

  /// The linear map of a path (composite of arrow maps, identity for the
  /// trivial path), as a dim(target) x dim(source) matrix.
  Matrix path_map(const std::vector<int>& arrow_ids, int source_vertex) const;

  bool operator==(const Representation& o) const;

private:
  QuiverPtr quiver_;
  Field field_;
  std::vector<int> dims_;
  std::vector<Matrix> arrow_maps_;
};

/// Morphism of representations: one matrix per vertex, commuting with the
/// arrow maps (verified at construction).
class RepMorphism {
public:
  RepMorphism(Representation source, Representation target, std::vector<Matrix> vertex_maps);
  static RepMorphism zero(const Representation& source, const Representation& target);
  static RepMorphism identity(const Representation& m);

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  const Matrix& vertex_map(int vertex) const { return vertex_maps_[vertex - 1]; }

  bool is_zero() const;
  bool is_vertexwise_invertible() const;
  RepMorphism compose(const RepMorphism& inner) const;  // this o inner
  RepMorphism operator+(const RepMorphism& o) const;
  RepMorphism operator-(const RepMorphism& o) const;
  RepMorphism scaled(const Scalar& c) const;

private:
  Representation source_, target_;
  std::vector<Matrix> vertex_maps_;
};

/// Class of an extension 0 -> N -> X -> M -> 0 in Ext^1(M, N), stored as
/// a cocycle: one matrix per arrow a: x -> y, mapping M_x -> N_y.
struct ExtClass {
  Representation source;  // M
  Representation target;  // N
  std::vector<Matrix> cocycle;

  ExtClass scaled(const Scalar& c) const;
  ExtClass operator+(const ExtClass& o) const;
};

std::vector<RepMorphism> hom_basis(const Representation& m, const Representation& n);
std::vector<ExtClass> ext1_basis(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);
int ext1_dim(const Representation& m, const Representation& n);
/// True iff the class is zero in Ext^1, i.e. the cocycle is a coboundary.
bool ext_class_is_zero(const ExtClass& e);
/// Coordinates of e in the given ext basis, computed modulo coboundaries.
std::vector<Scalar> ext_coordinates(const std::vector<ExtClass>& basis, const ExtClass& e);

/// Subobject or quotient together with its structural morphism
/// (inclusion for kernel/image, projection for cokernel).
struct SubQuotient {
  Representation rep;
  RepMorphism map;
};
SubQuotient kernel(const RepMorphism& f);     // map: ker -> source
SubQuotient image(const RepMorphism& f);      // map: im -> target
SubQuotient cokernel(const RepMorphism& f);   // map: target -> coker

/// Middle term of an extension with its short exact sequence maps.
struct Extension {
  Representation middle;
  RepMorphism inclusion;   // N -> X
  RepMorphism projection;  // X -> M
};
Extension extension_middle_term(const ExtClass& e);

/// Endomorphism algebra on the hom_basis(m, m) basis.
FiniteDimAlgebra end_ring(const Representation& m);

/// Krull-Schmidt decomposition: pairwise non-isomorphic indecomposables
/// with multiplicities, deterministic given the seed.
std::vector<std::pair<Representation, int>> decompose(const Representation& m, unsigned seed = 1);

bool is_isomorphic(const Representation& a, const Representation& b);
/// Faster variant when both arguments are known indecomposable.
bool is_isomorphic_indec(const Representation& a, const Representation& b);

/// Standard projective resolution 0 -> p1 -> p0 -> m -> 0.  p0 is
/// directly summed as P_z^{dim m_z} over vertices z in index order, p1 as
/// P_{target(a)}^{dim m_{source(a)}} over arrows in id order; the lift
/// helpers below rely on that layout.
struct Resolution {
  Representation p0, p1;
  RepMorphism d;    // p1 -> p0
  RepMorphism eps;  // p0 -> m
};
Resolution standard_resolution(const Representation& m);

/// The map p1(M) -> N representing an Ext class under
/// Ext^1(M,N) = coker(Hom(p0,N) -> Hom(p1,N)).
RepMorphism cocycle_to_resolution_map(const ExtClass& e, const Resolution& res_of_source);

/// Linear-combination and coordinate helpers on morphism spaces.
RepMorphism combine(const std::vector<RepMorphism>& basis, const std::vector<Scalar>& coeffs);
std::optional<std::vector<Scalar>> morphism_coordinates(const std::vector<RepMorphism>& basis,
                                                        const RepMorphism& f);
/// Concatenated row-major entries of all vertex maps.
std::vector<Scalar> vec_morphism(const RepMorphism& f);

/// Some g with a o g = b (factoring b through a), if one exists.
std::optional<RepMorphism> factor_left(const RepMorphism& a, const RepMorphism& b);
/// Some g with g o a = b.
std::optional<RepMorphism> factor_right(const RepMorphism& a, const RepMorphism& b);

}  // namespace siltwb
