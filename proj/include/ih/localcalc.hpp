#pragma once

// Closed-form intersection homology of cones, products with R^k and
// distinguished neighborhoods, in terms of the intersection homology of the
// link. Used as an oracle against chain-level computations.

#include "ih/graded_module.hpp"
#include "ih/perversity.hpp"

#include <vector>

namespace ih::localcalc {

/// Compact supports on the cone cL of an (n-1)-dimensional link:
/// IH_i(L) below degree n - 1 - p(n), zero from there on.
GradedModule cone_compact(const GradedModule& link, int n, const Perversity& p);

/// Closed supports on cL (L compact): IH_{i-1}(L) from degree n - p(n) on,
/// zero below.
GradedModule cone_closed_support(const GradedModule& link, int n,
                                 const Perversity& p);

/// Closed supports on L x R.
GradedModule times_R(const GradedModule& link);

/// Closed supports on cL x R^k from those on cL.
GradedModule dist_neighborhood(const GradedModule& cone, int k);

/// Closed supports on (cL - x) x R^k, using cL - x = L x R.
GradedModule deleted_neighborhood(const GradedModule& link, int k);

struct ProfileRow {
  std::size_t degree = 0;
  ModuleGroup neighborhood;  // cL x R^{n-k}
  ModuleGroup deleted;       // (cL - x) x R^{n-k}
  bool iso_expected = false;
};

/// Degree-by-degree comparison of a distinguished neighborhood of a point in
/// a codimension-k stratum of an n-dimensional space with the deleted
/// neighborhood. Restriction is expected to be an isomorphism exactly in
/// degrees >= n - p(k).
std::vector<ProfileRow> local_attaching_profile(const GradedModule& link, int n,
                                                int k_codim,
                                                const Perversity& p);

}  // namespace ih::localcalc
