#include "ih/coefficients.hpp"

#include "ih/linalg.hpp"

namespace ih {

std::string to_string(CoefficientMode mode) {
  return mode == CoefficientMode::G0 ? "g0" : "full";
}

CoefficientMode parse_mode(const std::string& text) {
  if (text == "g0" || text == "G0") return CoefficientMode::G0;
  if (text == "full" || text == "Full") return CoefficientMode::Full;
  throw std::invalid_argument("unknown coefficient mode '" + text +
                              "' (expected g0 or full)");
}

CoefficientSystem CoefficientSystem::constant(Ring ring, CoefficientMode mode,
                                              int rank) {
  if (rank < 1) throw CoefficientError("stalk rank must be >= 1");
  return CoefficientSystem(ring, mode, rank);
}

const Matrix<Rational>* CoefficientSystem::transport(
    const Simplex& simplex, const Simplex& facet) const {
  if (transports_.empty()) return nullptr;
  const auto it = transports_.find({simplex, facet});
  return it == transports_.end() ? nullptr : &it->second;
}

namespace {

template <class R>
Matrix<linalg::Value<R>> convert(const R& ring, const Matrix<Rational>& m,
                                 const Incidence& where) {
  auto out = linalg::zeros(ring, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto v = ring.from_rational(m(r, c));
      if (!v)
        throw CoefficientError("transport " + where.first.to_string() + "->" +
                               where.second.to_string() +
                               " has an entry outside " + ring.name());
      out(r, c) = *v;
    }
  return out;
}

template <class R>
bool invertible(const R& ring, const Matrix<linalg::Value<R>>& m) {
  if constexpr (std::is_same_v<R, IntegerRing>) {
    return ring.is_unit(linalg::determinant(m));
  } else if constexpr (std::is_same_v<R, RationalField>) {
    return !linalg::determinant(m).is_zero();
  } else {
    return !linalg::determinant(ring, m).is_zero();
  }
}

template <class R>
std::optional<std::string> cocycle_violation(const R& ring,
                                             const FilteredComplex& x,
                                             const CoefficientSystem& sys) {
  const auto d = static_cast<std::size_t>(sys.rank());
  const auto id = linalg::identity(ring, d);
  std::map<Incidence, Matrix<linalg::Value<R>>> converted;
  for (const auto& [inc, m] : sys.transports())
    converted.emplace(inc, convert(ring, m, inc));
  const auto lookup = [&](const Simplex& s, const Simplex& f)
      -> const Matrix<linalg::Value<R>>& {
    const auto it = converted.find({s, f});
    return it == converted.end() ? id : it->second;
  };

  for (int dim = 2; dim <= x.max_dimension(); ++dim) {
    for (const auto& s : x.simplices(dim)) {
      if (x.is_singular(s)) continue;
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) {
          const Simplex ta = s.facet(a);
          const Simplex tb = s.facet(b);
          const Simplex rho = ta.facet(b - 1);  // drop both a and b
          if (x.is_singular(rho)) continue;
          const auto via_a =
              linalg::multiply(ring, lookup(ta, rho), lookup(s, ta));
          const auto via_b =
              linalg::multiply(ring, lookup(tb, rho), lookup(s, tb));
          if (!(via_a == via_b))
            return "cocycle fails on " + s.to_string() + " via " +
                   ta.to_string() + " and " + tb.to_string() + " to " +
                   rho.to_string();
        }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> find_cocycle_violation(const FilteredComplex& x,
                                                  const CoefficientSystem& sys) {
  if (sys.is_constant()) return std::nullopt;
  return sys.ring().visit(
      [&](const auto& ring) { return cocycle_violation(ring, x, sys); });
}

CoefficientSystem build_local_system(const FilteredComplex& x,
                                     TransportMap transports, Ring ring,
                                     int rank) {
  auto sys = CoefficientSystem::constant(ring, CoefficientMode::G0, rank);
  const auto d = static_cast<std::size_t>(rank);
  for (const auto& [inc, m] : transports) {
    const auto& [s, f] = inc;
    const std::string where = s.to_string() + "->" + f.to_string();
    if (!x.contains(s) || !x.contains(f))
      throw CoefficientError("transport " + where + " names a missing simplex");
    if (f.dimension() != s.dimension() - 1 || !f.is_face_of(s))
      throw CoefficientError("transport " + where + " is not a facet incidence");
    if (x.is_singular(s) || x.is_singular(f))
      throw CoefficientError("transport " + where +
                             " touches the singular set");
    if (m.rows() != d || m.cols() != d)
      throw CoefficientError("transport " + where + " is not " +
                             std::to_string(d) + "x" + std::to_string(d));
    const bool ok = ring.visit([&](const auto& r) {
      return invertible(r, convert(r, m, inc));
    });
    if (!ok)
      throw CoefficientError("transport " + where + " is not invertible over " +
                             ring.name());
  }
  sys.transports_ = std::move(transports);
  if (auto bad = find_cocycle_violation(x, sys)) throw CoefficientError(*bad);
  return sys;
}

}  // namespace ih
