#pragma once

#include "siltwb/derived.hpp"

namespace siltwb {

struct NotSilting : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotASummand : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotRigid : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotPresilting : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One representative per isomorphism class of summands.
DObject make_basic(const DObject& t);

/// Positive-degree self-hom vanishing, checked on the exhaustive window
/// degrees 1 .. (shift span + 1).
bool is_presilting(const DObject& t);
/// Presilting with exactly n = vertex count distinct summands.
bool is_silting(const DObject& t);
bool is_tilting_module(const Representation& m);

/// Exchange the summand at the given index through the mutation triangle;
/// the result is again silting.
DObject mutate_left(const DObject& t, int summand_index);
DObject mutate_right(const DObject& t, int summand_index);

/// Classical Bongartz completion: a module n with m + n tilting.
Representation bongartz_complete(const Representation& m);

/// Summand order: ascending shift, ties resolved by topological order of
/// the degree-0 hom graph; summands are returned with shifts normalized
/// so the maximum is 0.
std::vector<DObject> sort_presilting_summands(const DObject& t);

/// Inverse of silting reduction at the exceptional object d: returns a
/// silting object t_n + d of the ambient category whose reduction is n.
DObject lift_silting(const DObject& d, const DObject& n);

/// Completion of a presilting object to a silting object containing it.
DObject complete_presilting(const DObject& t);

/// A tilting module derived from a silting object by iterated reduction
/// and one right mutation per level.
Representation silting_to_tilting(const DObject& t);

/// Silting object of the iterated perpendicular subcategory
/// thick(ctx)^perp, obtained by projecting the projectives; exposed for
/// tests.  Empty ctx yields the projective generator.
DObject perpendicular_silting(QuiverPtr q, const Field& f, const std::vector<DObject>& ctx);

}  // namespace siltwb
