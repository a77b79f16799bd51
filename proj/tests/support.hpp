#pragma once

#include "ih/builtins.hpp"
#include "ih/homology.hpp"
#include "oracle.hpp"

#include <initializer_list>
#include <vector>

namespace test {

template <class R>
ih::Matrix<ih::linalg::Value<R>> mat(const R& ring,
                                     std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  ih::Matrix<ih::linalg::Value<R>> m(rows.size(), cols, ring.zero());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (long v : row) m(r, c++) = ring.from_integer(ih::Integer(v));
    ++r;
  }
  return m;
}

inline oracle::Graded to_oracle(const ih::GradedModule& m) {
  oracle::Graded out;
  for (std::size_t i = 0; i < m.support_end(); ++i) {
    oracle::Group g;
    g.betti = static_cast<long long>(m[i].betti);
    for (const auto& t : m[i].torsion) g.torsion.push_back(t.convert_to<long long>());
    out.push_back(g);
  }
  return out;
}

inline std::vector<long long> bettis(const ih::GradedModule& m) {
  std::vector<long long> out;
  for (auto b : m.bettis()) out.push_back(static_cast<long long>(b));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline ih::CoefficientSystem constant(const ih::Ring& ring,
                                      ih::CoefficientMode mode = ih::CoefficientMode::G0,
                                      int rank = 1) {
  return ih::CoefficientSystem::constant(ring, mode, rank);
}

inline ih::CoefficientSystem integers(ih::CoefficientMode mode = ih::CoefficientMode::G0) {
  return constant(ih::Ring::integers(), mode);
}

inline ih::Perversity named(const char* name, int n) { return ih::Perversity::parse(name, n); }

/// Base of the closed cone: every simplex not containing the apex.
inline std::set<ih::Simplex> cone_base(const ih::FilteredComplex& cone) {
  const ih::Vertex apex = cone.vertices().back();
  std::set<ih::Simplex> base;
  for (const auto& [s, j] : cone.skeleton_map())
    if (!s.contains(apex)) base.insert(s);
  return base;
}

}  // namespace test
