#pragma once

#include "ih/complex.hpp"

#include <string>
#include <vector>

namespace ih {

/// Named example spaces: sphere1, sphere2, sphere3 (boundaries of
/// simplices), torus (7 vertices), rp2 (6 vertices), klein, cone-torus,
/// susp-torus and s2-marked-{1,2,3} (sphere2 with vertices 0..m-1 in X^0).
FilteredComplex builtin(const std::string& name);

std::vector<std::string> builtin_names();

/// Boundary of the standard d+1 simplex on vertices 0..d+1.
FilteredComplex simplex_boundary(int d);

}  // namespace ih
