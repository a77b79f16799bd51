#pragma once

#include "ih/chains.hpp"
#include "ih/graded_module.hpp"

#include <set>
#include <string>
#include <vector>

namespace ih {

/// Betti numbers and (over Z) torsion of a chain complex. Throws
/// InvariantViolation if the boundary does not square to zero.
template <class R>
HomologyResult homology(const ChainComplex<R>& c);

/// IH of X with the ring, mode and transports of `sys`.
HomologyResult intersection_homology(const FilteredComplex& x,
                                     const Perversity& p,
                                     const CoefficientSystem& sys);

/// IH(X, A) for a face-closed simplex set A of X.
HomologyResult relative_homology(const FilteredComplex& x,
                                 const std::set<Simplex>& sub,
                                 const Perversity& p,
                                 const CoefficientSystem& sys);

/// One position of the long exact sequence
///   ... -> IH_i(A) -> IH_i(X) -> IH_i(X, A) -> IH_{i-1}(A) -> ...
/// comparing the image of the incoming map with the kernel of the outgoing
/// one, both as submodules of the cycles (boundaries included).
struct LesNode {
  std::string group;  // "A", "X" or "X,A"
  std::size_t degree = 0;
  std::size_t image_rank = 0;
  std::size_t kernel_rank = 0;
  bool image_in_kernel = false;

  bool exact() const { return image_in_kernel && image_rank == kernel_rank; }
};

struct LesReport {
  std::string ring;
  /// Over Z the comparison is of ranks (image contained in kernel, equal
  /// rank); over fields it is equality of subspaces.
  bool rank_only = false;
  std::vector<LesNode> nodes;

  bool exact() const;
  std::vector<std::string> failures() const;
};

/// Builds the pair complexes, computes the connecting map by lifting,
/// taking boundaries and pulling back into A, and checks every node.
LesReport les_check(const FilteredComplex& x, const std::set<Simplex>& sub,
                    const Perversity& p, const CoefficientSystem& sys);

}  // namespace ih
