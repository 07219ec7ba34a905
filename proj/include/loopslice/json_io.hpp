#pragma once

#include <json.hpp>

#include "loopslice/branching.hpp"
#include "loopslice/graded.hpp"
#include "loopslice/invariants.hpp"
#include "loopslice/lattice.hpp"

namespace loopslice::io {

using json = nlohmann::json;

/// Rationals travel as decimal-free "p/q" strings (or plain integers).
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// {"val": int, "coeffs": ["p/q", ...], "prec": int}. Exact values are
/// written with the precision of their stored window, never less than
/// default_prec.
json laurent_to_json(const Laurent& x, long default_prec);
Laurent laurent_from_json(const json& j);

/// {"rows": r, "cols": c, "entries": [[laurent, ...], ...]}.
json fmatrix_to_json(const FMatrix& m, long default_prec);
FMatrix fmatrix_from_json(const json& j);

/// {"context": "gl"|"osp", "v": matrix, "vstar": matrix (gl only)}.
json pair_to_json(const LatticePair& p, long default_prec);
LatticePair pair_from_json(const json& j);

json coweight_to_json(const Coweight& w);

/// Ascending coefficient list.
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

json slice_point_to_json(const SlicePoint& p);
SlicePoint slice_point_from_json(const json& j);

/// Sorted [degree, dim] pairs.
json graded_dims_to_json(const GradedDims& g);

json fiber_to_json(const FiberDescription& fd);

json multiplicity_to_json(const GradedMultiplicity& gm);

} // namespace loopslice::io
