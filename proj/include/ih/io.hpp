#pragma once

// JSON formats:
//   complex:      {"formal_dim": n, "facets": [[v,...],...],
//                  "skeleta": {"j": [[v,...],...]}}
//   coefficients: {"ring": "Z"|"Q"|"Fp:<p>", "mode": "g0"|"full", "rank": d,
//                  "transports": [{"simplex": [...], "facet": [...],
//                                  "matrix": [[...],...]}]}
//   homology:     {"degrees": [{"i": i, "betti": b, "torsion": [...]}],
//                  "provenance": {...}}

#include "ih/chains.hpp"
#include "ih/coefficients.hpp"
#include "ih/complex.hpp"
#include "ih/graded_module.hpp"

#include <json.hpp>

#include <stdexcept>

namespace ih::io {

using nlohmann::json;

class FormatError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

FilteredComplex complex_from_json(const json& j);
/// Facets are the maximal simplices; level j lists the maximal simplices of
/// X^j for every j < formal_dim with X^j nonempty.
json complex_to_json(const FilteredComplex& x);

CoefficientSystem coefficients_from_json(const json& j, const FilteredComplex& x);
json coefficients_to_json(const CoefficientSystem& sys);

json module_to_json(const GradedModule& m);
json simplex_to_json(const Simplex& s);

/// Allowable simplices, generator matrices B_i and boundaries D_i per degree.
template <class R>
json ic_dump(const IntersectionChainComplex<R>& ic);

json load_json_file(const std::string& path);

}  // namespace ih::io
