#pragma once

#include <map>
#include <vector>

#include "siltwb/rep.hpp"

namespace siltwb {

struct NotExceptional : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One indecomposable stalk summand M[shift] of a derived object.
struct IndecSummand {
  Representation rep;
  int shift;
};

/// Object of the bounded derived category in stalk-decomposed form:
/// a finite multiset of indecomposable representations with shifts.
/// Normalization decomposes input representations and orders summands by
/// shift (stable within a shift).
class DObject {
public:
  DObject(QuiverPtr q, const Field& f);  // zero object
  static DObject from_rep(const Representation& r, int shift = 0);
  /// Stalks assumed arbitrary; every representation is decomposed.
  static DObject from_summands(QuiverPtr q, const Field& f,
                               const std::vector<IndecSummand>& parts);
  static DObject direct_sum(const DObject& a, const DObject& b);

  const QuiverPtr& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const std::vector<IndecSummand>& summands() const { return summands_; }
  bool is_zero() const { return summands_.empty(); }
  int summand_count() const { return (int)summands_.size(); }

  DObject shift(int l) const;
  /// Single summand as its own object.
  DObject summand_object(int i) const;
  /// All summands except those listed.
  DObject without(const std::vector<int>& indices) const;
  ClassVector class_vector() const;  // sum of (-1)^shift * class(rep)
  int min_shift() const;             // throws on zero object
  int max_shift() const;

private:
  QuiverPtr quiver_;
  Field field_;
  std::vector<IndecSummand> summands_;
};

bool iso_test(const DObject& a, const DObject& b);
/// Multiset of pairwise non-isomorphic (summand-object, multiplicity).
std::vector<std::pair<DObject, int>> distinct_summands(const DObject& a);

/// Morphism of derived objects, stored blockwise per (source summand i,
/// target summand j): a RepMorphism when the shifts agree (degree 0), an
/// ExtClass when the target shift exceeds the source shift by 1.
class DMorphism {
public:
  DMorphism(DObject source, DObject target);  // zero morphism
  void set_deg0(int i, int j, RepMorphism f);
  void set_deg1(int i, int j, ExtClass e);

  const DObject& source() const { return source_; }
  const DObject& target() const { return target_; }
  const std::map<std::pair<int, int>, RepMorphism>& deg0() const { return deg0_; }
  const std::map<std::pair<int, int>, ExtClass>& deg1() const { return deg1_; }

  bool is_zero() const;
  DMorphism compose(const DMorphism& inner) const;  // this o inner
  DMorphism operator+(const DMorphism& o) const;
  DMorphism scaled(const Scalar& c) const;

private:
  DObject source_, target_;
  std::map<std::pair<int, int>, RepMorphism> deg0_;
  std::map<std::pair<int, int>, ExtClass> deg1_;
};

/// Basis of Hom(a, b[degree]); each element is a DMorphism a -> b.shift(degree).
std::vector<DMorphism> dhom_basis(const DObject& a, const DObject& b, int degree);
int dhom_dim(const DObject& a, const DObject& b, int degree);

/// Coordinates of f in the canonical linear structure of
/// Hom(source, target): degree-0 blocks by entries, degree-1 blocks by
/// ext-basis coordinates (cocycles taken modulo coboundaries).
std::vector<Scalar> dmorphism_coordinates(const DMorphism& f);

/// Bounded complex of projective representations; terms[i] sits in
/// cohomological degree lo + i, diffs[i]: terms[i] -> terms[i+1].
struct ProjComplex {
  int lo = 0;
  std::vector<Representation> terms;
  std::vector<RepMorphism> diffs;
};

/// Decomposed total cohomology: H^k contributes summands at shift -k.
DObject cohomology_object(const ProjComplex& c);

/// Mapping cone completing f to a triangle source -> target -> cone -> source[1].
DObject cone(const DMorphism& f);

/// Minimal right/left approximations by add of the given objects.
struct Approximation {
  DObject mid;
  DMorphism map;  // mid -> target (right) / source -> mid (left)
};
Approximation minimal_right_approximation(const std::vector<DObject>& sources,
                                          const DObject& target);
Approximation minimal_left_approximation(const std::vector<DObject>& targets,
                                         const DObject& source);

/// True iff the object is exceptional: indecomposable with division End
/// and no self-extensions in positive degrees.
bool is_exceptional(const DObject& e);

/// Projection of x to thick(e)^perp along the triangle
/// e_x -> x -> z -> e_x[1] with e_x -> x a minimal right thick(e)-approximation.
struct PerpProjection {
  DObject z;
  DObject e_x;
  Approximation approx;  // e_x -> x
};
PerpProjection thick_perp_project(const DObject& e, const DObject& x);

}  // namespace siltwb
