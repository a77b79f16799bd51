#pragma once

// Simplicial intersection chains on a fixed triangulation.
//
// Ambient chains in degree i are (simplex, stalk index) coordinates over the
// i-simplices that carry coefficients: in G0 mode only simplices outside
// X^{n-1}, in Full mode all of them. IC_i is the sublattice of chains
// supported on allowable simplices whose boundary is again supported on
// allowable simplices; it is computed as a kernel because faces may cancel.

#include "ih/coefficients.hpp"
#include "ih/complex.hpp"
#include "ih/linalg.hpp"
#include "ih/perversity.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace ih {

/// Raised when an algebraic identity that must hold (D^2 = 0, exact solves
/// into IC) fails; indicates corrupted input or a bug.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Largest dimension of a face of `s` lying in the open stratum of
/// codimension k, per k = 1..n (index k-1); -1 encodes "no such face".
std::vector<int> stratum_face_dimensions(const Simplex& s,
                                         const FilteredComplex& x);

bool allowable(const Simplex& s, const FilteredComplex& x, const Perversity& p);

/// A finitely generated free chain complex; boundary[i] : C_i -> C_{i-1}
/// with boundary[0] having zero rows.
template <class R>
struct ChainComplex {
  R ring;
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix<linalg::Value<R>>> boundary;

  std::size_t top_degree() const { return ranks.empty() ? 0 : ranks.size() - 1; }
};

/// Verifies boundary[i-1] * boundary[i] == 0 for all i.
template <class R>
bool boundary_squares_to_zero(const ChainComplex<R>& c);

/// Ambient chain coordinates of one degree.
struct AmbientDegree {
  std::vector<Simplex> simplices;  // coefficient-carrying simplices
  std::vector<bool> allowable;     // per simplex
};

template <class R>
struct IntersectionChainComplex {
  struct Degree {
    AmbientDegree ambient;
    /// Indices into ambient.simplices of the allowable simplices; the
    /// allowable coordinates are (position in this list) * rank + stalk.
    std::vector<std::size_t> allowable_simplices;
    /// Generators of IC_i as columns over the allowable coordinates.
    SparseMatrix<linalg::Value<R>> basis;
    /// IC_i -> IC_{i-1} in generator coordinates.
    SparseMatrix<linalg::Value<R>> boundary;
  };

  R ring;
  int stalk_rank = 1;
  CoefficientMode mode = CoefficientMode::G0;
  std::vector<Degree> degrees;

  ChainComplex<R> chains() const;
  /// Simplex carrying an allowable coordinate of degree i.
  const Simplex& coordinate_simplex(std::size_t i, std::size_t coord) const {
    const auto& d = degrees[i];
    return d.ambient.simplices[d.allowable_simplices[coord /
                                static_cast<std::size_t>(stalk_rank)]];
  }
};

/// Ambient boundary (the G0 boundary with transports, or the ordinary one in
/// Full mode) from degree i to degree i-1 coordinates.
template <class R>
SparseMatrix<linalg::Value<R>> ambient_boundary(const R& ring,
                                                const FilteredComplex& x,
                                                const CoefficientSystem& sys,
                                                int degree);

/// All ambient degrees for the coefficient mode (allowability for `p`).
std::vector<AmbientDegree> ambient_degrees(const FilteredComplex& x,
                                           const Perversity& p,
                                           CoefficientMode mode);

template <class R>
IntersectionChainComplex<R> build_ic_complex(const R& ring,
                                             const FilteredComplex& x,
                                             const Perversity& p,
                                             const CoefficientSystem& sys);

/// Sub, absolute and quotient complexes for IC(X) relative to chains
/// supported in a subcomplex A, together with the chain maps between them.
template <class R>
struct PairComplex {
  ChainComplex<R> sub;
  ChainComplex<R> absolute;
  ChainComplex<R> quotient;
  std::vector<Matrix<linalg::Value<R>>> inclusion;   // sub -> absolute
  std::vector<Matrix<linalg::Value<R>>> projection;  // absolute -> quotient
  std::vector<Matrix<linalg::Value<R>>> lift;        // quotient -> absolute
};

/// `sub` must be a face-closed set of simplices of x.
template <class R>
PairComplex<R> build_ic_pair(const R& ring, const FilteredComplex& x,
                             const std::set<Simplex>& sub, const Perversity& p,
                             const CoefficientSystem& sys);

template <class R>
PairComplex<R> build_ic_pair(const IntersectionChainComplex<R>& ic,
                             const std::set<Simplex>& sub);

}  // namespace ih
