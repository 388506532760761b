#pragma once

#include "siltwb/smc.hpp"

namespace siltwb {

struct NotTypeA : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shift window for the brute-force searches.
struct Window {
  int min_shift = -2;
  int max_shift = 2;
};

/// All interval representations of a linearly ordered A_n quiver; the
/// complete list of indecomposables, each certified by its End ring.
std::vector<Representation> enumerate_indecomposables(QuiverPtr q, const Field& f);

/// Window-relative thick closure: starting from the generator summands,
/// repeatedly add shifts inside the window and summands of cones of all
/// basis morphisms between members; true iff all summands of target appear.
bool thick_closure_contains(const std::vector<DObject>& generators, const DObject& target,
                            const Window& w);

/// Exhaustive enumeration of basic presilting / silting objects whose
/// summand shifts lie in the window.  Silting results are additionally
/// certified by a thick-closure check on a window padded by one.
std::vector<DObject> enumerate_presilting(QuiverPtr q, const Field& f, const Window& w);
std::vector<DObject> enumerate_silting(QuiverPtr q, const Field& f, const Window& w);

/// All basic tilting modules.
std::vector<Representation> enumerate_tilting_modules(QuiverPtr q, const Field& f);

/// All SMCs with objects in the window: pre-SMCs of n objects whose
/// classes form a Z-basis, certified by thick closure on a padded window.
std::vector<std::vector<DObject>> enumerate_smc(QuiverPtr q, const Field& f, const Window& w);

}  // namespace siltwb
