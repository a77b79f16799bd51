#pragma once

#include "ih/complex.hpp"
#include "ih/matrix.hpp"
#include "ih/ring.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace ih {

/// G0: the given system on X - X^{n-1} and zero on X^{n-1}, so boundary
/// faces inside X^{n-1} are discarded. Full: constant coefficients on all of
/// X with the ordinary boundary.
enum class CoefficientMode { G0, Full };

std::string to_string(CoefficientMode mode);
CoefficientMode parse_mode(const std::string& text);

class CoefficientError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// (simplex, facet) incidence between two regular simplices.
using Incidence = std::pair<Simplex, Simplex>;
using TransportMap = std::map<Incidence, Matrix<Rational>>;

class CoefficientSystem {
public:
  static CoefficientSystem constant(Ring ring, CoefficientMode mode, int rank);

  const Ring& ring() const { return ring_; }
  CoefficientMode mode() const { return mode_; }
  int rank() const { return rank_; }
  bool is_constant() const { return transports_.empty(); }
  const TransportMap& transports() const { return transports_; }

  /// Transport from the stalk of `simplex` to the stalk of `facet`; nullptr
  /// means identity.
  const Matrix<Rational>* transport(const Simplex& simplex,
                                    const Simplex& facet) const;

  friend CoefficientSystem build_local_system(const FilteredComplex&,
                                              TransportMap, Ring, int);

private:
  CoefficientSystem(Ring ring, CoefficientMode mode, int rank)
      : ring_(ring), mode_(mode), rank_(rank) {}

  Ring ring_;
  CoefficientMode mode_;
  int rank_;
  TransportMap transports_;
};

/// Local system on the regular part given by transports on regular
/// codimension-one incidences (absent incidences carry the identity).
/// Always G0 mode. Throws CoefficientError when an incidence is not regular,
/// a matrix is not invertible over the ring, or the cocycle condition fails
/// on some (simplex, face, codimension-two face) triple.
CoefficientSystem build_local_system(const FilteredComplex& x,
                                     TransportMap transports, Ring ring,
                                     int rank);

/// Checks the cocycle condition on every regular simplex and regular
/// codimension-two face; returns a description of the first failure.
std::optional<std::string> find_cocycle_violation(const FilteredComplex& x,
                                                  const CoefficientSystem& sys);

}  // namespace ih
