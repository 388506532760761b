#pragma once

#include "siltwb/silting.hpp"

namespace siltwb {

struct NotPreSMC : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotCompletable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotContained : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonIntegralMultiplicity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Verification report for the pre-SMC conditions: vanishing of all
/// negative-degree homs, division endomorphism rings, and vanishing
/// degree-0 cross homs.
struct PreSMCReport {
  bool ok = true;
  std::string violation;  // empty when ok
};
PreSMCReport pre_smc_report(const std::vector<DObject>& x);
bool is_pre_smc(const std::vector<DObject>& x);

/// Ext-quiver of a pre-SMC: multiplicity[i][j] arrows from x_i to x_j,
/// each dim Hom(x_i, x_j[1]) / dim End(x_i).
struct ExtQuiver {
  std::vector<std::vector<int>> multiplicity;
};
ExtQuiver ext_quiver(const std::vector<DObject>& x);
/// Loops count as cycles.
bool is_acyclic(const ExtQuiver& q);

/// Membership in Z = R[>=0]^perp intersect ^perp R[<=0].
bool z_membership(const std::vector<DObject>& r, const DObject& y);

/// Representative in Z of the image of y in the quotient by thick(R);
/// requires Hom(R[i], y) = 0 for all i.
DObject z_representative(const std::vector<DObject>& r, const DObject& y);

/// Quotient suspension Z<1>: cone of the minimal right add(R)-approximation
/// of z[1].  Empty R gives the plain shift.
DObject z_suspend(const std::vector<DObject>& r, const DObject& z);

/// Objects of x not isomorphic to a member of r, re-expressed inside Z.
std::vector<DObject> smc_reduce(const std::vector<DObject>& x, const std::vector<DObject>& r);

/// Completion of a pre-SMC with acyclic Ext-quiver to a full collection of
/// n objects whose classes form a Z-basis; cyclic Ext-quiver raises
/// NotCompletable.
std::vector<DObject> complete_presmc(const std::vector<DObject>& x);

/// The simple representations, as stalks in degree 0.
std::vector<DObject> canonical_smc(QuiverPtr q, const Field& f);

/// Endomorphism algebra of a derived object in degree 0.
FiniteDimAlgebra d_end_ring(const DObject& a);

}  // namespace siltwb
