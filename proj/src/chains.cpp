#include "ih/chains.hpp"

#include <algorithm>
#include <map>

namespace ih {

std::vector<int> stratum_face_dimensions(const Simplex& s,
                                         const FilteredComplex& x) {
  const int n = x.formal_dim();
  std::vector<int> out(static_cast<std::size_t>(std::max(n, 0)), -1);
  const std::size_t count = s.size();
  for (std::uint32_t mask = 1; mask < (1u << count); ++mask) {
    std::vector<Vertex> verts;
    for (std::size_t b = 0; b < count; ++b)
      if (mask & (1u << b)) verts.push_back(s[b]);
    const int dim = static_cast<int>(verts.size()) - 1;
    const int k = n - x.skeleton(Simplex(std::move(verts)));
    if (k >= 1 && k <= n) {
      auto& slot = out[static_cast<std::size_t>(k - 1)];
      slot = std::max(slot, dim);
    }
  }
  return out;
}

bool allowable(const Simplex& s, const FilteredComplex& x, const Perversity& p) {
  const int n = x.formal_dim();
  if (p.length() < n)
    throw std::invalid_argument("perversity " + p.to_string() +
                                " does not cover codimensions 1.." +
                                std::to_string(n));
  const auto dims = stratum_face_dimensions(s, x);
  for (int k = 1; k <= n; ++k) {
    const int d = dims[static_cast<std::size_t>(k - 1)];
    if (d >= 0 && d > s.dimension() - k + p(k)) return false;
  }
  return true;
}

template <class R>
bool boundary_squares_to_zero(const ChainComplex<R>& c) {
  for (std::size_t i = 1; i < c.boundary.size(); ++i) {
    const auto& lower = c.boundary[i - 1];
    const auto& upper = c.boundary[i];
    if (lower.cols() == 0 || upper.cols() == 0) continue;
    const auto prod = linalg::multiply(c.ring, lower, upper);
    if (prod.nonzeros() != 0) return false;
  }
  return true;
}

std::vector<AmbientDegree> ambient_degrees(const FilteredComplex& x,
                                           const Perversity& p,
                                           CoefficientMode mode) {
  std::vector<AmbientDegree> out;
  for (int i = 0; i <= x.max_dimension(); ++i) {
    AmbientDegree deg;
    for (const auto& s : x.simplices(i)) {
      if (mode == CoefficientMode::G0 && x.is_singular(s)) continue;
      deg.simplices.push_back(s);
      deg.allowable.push_back(allowable(s, x, p));
    }
    out.push_back(std::move(deg));
  }
  return out;
}

namespace {

template <class R>
using V = linalg::Value<R>;

template <class R>
using Column = typename SparseMatrix<V<R>>::Column;

/// Ambient boundary of coordinate (simplex, stalk) in degree-(i-1) ambient
/// coordinates.
template <class R>
class BoundaryOperator {
public:
  BoundaryOperator(const R& ring, const CoefficientSystem& sys)
      : ring_(ring), rank_(static_cast<std::size_t>(sys.rank())) {
    for (const auto& [inc, m] : sys.transports()) {
      auto conv = linalg::zeros(ring, m.rows(), m.cols());
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
          auto v = ring.from_rational(m(r, c));
          if (!v)
            throw CoefficientError("transport entry outside " + ring.name());
          conv(r, c) = *v;
        }
      transports_.emplace(inc, std::move(conv));
    }
  }

  Column<R> apply(const Simplex& s, std::size_t stalk,
                  const std::map<Simplex, std::size_t>& lower_index) const {
    Column<R> col;
    if (s.size() <= 1) return col;
    for (std::size_t j = 0; j < s.size(); ++j) {
      const Simplex f = s.facet(j);
      const auto it = lower_index.find(f);
      if (it == lower_index.end()) continue;  // discarded face
      const bool negative = (j % 2) == 1;
      const auto t = transports_.find({s, f});
      for (std::size_t r = 0; r < rank_; ++r) {
        V<R> v = ring_.zero();
        if (t == transports_.end()) {
          if (r != stalk) continue;
          v = ring_.one();
        } else {
          v = t->second(r, stalk);
          if (ring_.is_zero(v)) continue;
        }
        if (negative) v = ring_.zero() - v;
        col.emplace_back(it->second * rank_ + r, std::move(v));
      }
    }
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return col;
  }

private:
  R ring_;
  std::size_t rank_;
  std::map<Incidence, Matrix<V<R>>> transports_;
};

std::map<Simplex, std::size_t> index_map(const std::vector<Simplex>& list) {
  std::map<Simplex, std::size_t> out;
  for (std::size_t i = 0; i < list.size(); ++i) out.emplace(list[i], i);
  return out;
}

void check_mode(const CoefficientSystem& sys) {
  if (sys.mode() == CoefficientMode::Full && !sys.is_constant())
    throw CoefficientError("full mode supports constant coefficients only");
}

}  // namespace

template <class R>
SparseMatrix<linalg::Value<R>> ambient_boundary(const R& ring,
                                                const FilteredComplex& x,
                                                const CoefficientSystem& sys,
                                                int degree) {
  check_mode(sys);
  const auto d = static_cast<std::size_t>(sys.rank());
  const auto pick = [&](int i) {
    std::vector<Simplex> out;
    for (const auto& s : x.simplices(i))
      if (sys.mode() == CoefficientMode::Full || !x.is_singular(s))
        out.push_back(s);
    return out;
  };
  const auto upper = pick(degree);
  const auto lower = pick(degree - 1);
  const auto lower_index = index_map(lower);
  BoundaryOperator<R> op(ring, sys);
  SparseMatrix<V<R>> out(lower.size() * d, 0);
  for (const auto& s : upper)
    for (std::size_t st = 0; st < d; ++st)
      out.push_column(op.apply(s, st, lower_index));
  return out;
}

template <class R>
ChainComplex<R> IntersectionChainComplex<R>::chains() const {
  ChainComplex<R> c{ring, {}, {}};
  for (const auto& d : degrees) {
    c.ranks.push_back(d.basis.cols());
    c.boundary.push_back(d.boundary);
  }
  return c;
}

template <class R>
IntersectionChainComplex<R> build_ic_complex(const R& ring,
                                             const FilteredComplex& x,
                                             const Perversity& p,
                                             const CoefficientSystem& sys) {
  check_mode(sys);
  const auto d = static_cast<std::size_t>(sys.rank());
  IntersectionChainComplex<R> ic{ring, sys.rank(), sys.mode(), {}};
  const auto amb = ambient_degrees(x, p, sys.mode());
  const BoundaryOperator<R> op(ring, sys);
  constexpr auto none = static_cast<std::size_t>(-1);

  // Per-degree data needed to express boundaries in generator coordinates.
  struct Coordinates {
    std::map<Simplex, std::size_t> ambient_index;
    std::vector<std::size_t> allowable_position;  // per ambient simplex
    std::vector<std::size_t> free_generator;      // per allowable coord
    std::vector<std::size_t> constrained_slot;    // per allowable coord
    std::size_t constrained_count = 0;
    std::size_t free_count = 0;
    std::optional<linalg::LatticeSolver<R>> solver;
  };
  std::vector<Coordinates> coords(amb.size());

  for (std::size_t i = 0; i < amb.size(); ++i) {
    typename IntersectionChainComplex<R>::Degree deg;
    deg.ambient = amb[i];
    auto& here = coords[i];
    here.ambient_index = index_map(deg.ambient.simplices);
    here.allowable_position.assign(deg.ambient.simplices.size(), none);
    for (std::size_t s = 0; s < deg.ambient.simplices.size(); ++s)
      if (deg.ambient.allowable[s]) {
        here.allowable_position[s] = deg.allowable_simplices.size();
        deg.allowable_simplices.push_back(s);
      }
    const std::size_t n_coords = deg.allowable_simplices.size() * d;

    // Boundary columns of all allowable coordinates, split into entries on
    // allowable and non-allowable faces.
    static const std::map<Simplex, std::size_t> no_faces;
    const auto& lower_index = i == 0 ? no_faces : coords[i - 1].ambient_index;
    std::vector<Column<R>> columns(n_coords);
    std::map<std::size_t, std::size_t> bad_rows;  // ambient coord -> row
    here.free_generator.assign(n_coords, none);
    here.constrained_slot.assign(n_coords, none);
    std::vector<std::size_t> constrained;
    for (std::size_t a = 0; a < n_coords; ++a) {
      const auto& s = deg.ambient.simplices[deg.allowable_simplices[a / d]];
      columns[a] = op.apply(s, a % d, lower_index);
      bool touches_bad = false;
      for (const auto& [row, v] : columns[a]) {
        if (!amb[i - 1].allowable[row / d]) {
          touches_bad = true;
          bad_rows.emplace(row, bad_rows.size());
        }
      }
      if (touches_bad) {
        here.constrained_slot[a] = constrained.size();
        constrained.push_back(a);
      } else {
        here.free_generator[a] = here.free_count++;
      }
    }
    here.constrained_count = constrained.size();

    auto constraint = linalg::zeros(ring, bad_rows.size(), constrained.size());
    for (std::size_t k = 0; k < constrained.size(); ++k)
      for (const auto& [row, v] : columns[constrained[k]]) {
        const auto it = bad_rows.find(row);
        if (it != bad_rows.end()) constraint(it->second, k) = v;
      }
    const auto kernel = linalg::kernel_basis(ring, constraint);
    here.solver.emplace(ring, kernel);

    deg.basis = SparseMatrix<V<R>>(n_coords, 0);
    for (std::size_t a = 0; a < n_coords; ++a)
      if (here.free_generator[a] != none)
        deg.basis.push_column({{a, ring.one()}});
    for (std::size_t g = 0; g < kernel.cols(); ++g) {
      Column<R> col;
      for (std::size_t k = 0; k < constrained.size(); ++k)
        if (!ring.is_zero(kernel(k, g))) col.emplace_back(constrained[k], kernel(k, g));
      deg.basis.push_column(std::move(col));
    }

    // D_i: boundary of each generator, re-expressed in IC_{i-1} generators.
    const std::size_t lower_gens =
        i == 0 ? 0 : ic.degrees[i - 1].basis.cols();
    deg.boundary = SparseMatrix<V<R>>(lower_gens, 0);
    for (std::size_t g = 0; g < deg.basis.cols(); ++g) {
      if (i == 0) {
        deg.boundary.push_column({});
        continue;
      }
      std::map<std::size_t, V<R>> image;  // ambient (i-1) coords
      for (const auto& [a, coeff] : deg.basis.column(g))
        for (const auto& [row, v] : columns[a]) {
          auto it = image.find(row);
          if (it == image.end())
            image.emplace(row, coeff * v);
          else
            it->second += coeff * v;
        }
      const auto& below = coords[i - 1];
      std::map<std::size_t, V<R>> out;
      std::vector<V<R>> constrained_part(below.constrained_count, ring.zero());
      for (const auto& [row, v] : image) {
        if (ring.is_zero(v)) continue;
        const std::size_t pos = below.allowable_position[row / d];
        if (pos == none)
          throw InvariantViolation(
              "boundary of an intersection chain leaves the allowable "
              "simplices in degree " +
              std::to_string(i - 1));
        const std::size_t a = pos * d + row % d;
        if (below.free_generator[a] != none)
          out.emplace(below.free_generator[a], v);
        else
          constrained_part[below.constrained_slot[a]] = v;
      }
      if (below.constrained_count != 0) {
        const auto sol = below.solver->solve(constrained_part);
        if (!sol)
          throw InvariantViolation("boundary not in the intersection chains of "
                                   "degree " +
                                   std::to_string(i - 1));
        for (std::size_t k = 0; k < sol->size(); ++k)
          if (!ring.is_zero((*sol)[k]))
            out.emplace(below.free_count + k, (*sol)[k]);
      }
      Column<R> col(out.begin(), out.end());
      deg.boundary.push_column(std::move(col));
    }
    ic.degrees.push_back(std::move(deg));
  }
  return ic;
}

template <class R>
PairComplex<R> build_ic_pair(const IntersectionChainComplex<R>& ic,
                             const std::set<Simplex>& sub) {
  const R& ring = ic.ring;
  PairComplex<R> out{ic.chains(), ic.chains(), ic.chains(), {}, {}, {}};
  const std::size_t degrees = ic.degrees.size();
  std::vector<linalg::BasisCompletion<R>> completions;
  std::vector<Matrix<V<R>>> sub_basis;

  for (std::size_t i = 0; i < degrees; ++i) {
    const auto& deg = ic.degrees[i];
    const std::size_t gens = deg.basis.cols();
    // Rows: allowable coordinates outside the subcomplex.
    std::map<std::size_t, std::size_t> outside;
    std::vector<std::size_t> touching, inside;
    for (std::size_t g = 0; g < gens; ++g) {
      bool leaves = false;
      for (const auto& [a, v] : deg.basis.column(g))
        if (!sub.count(ic.coordinate_simplex(i, a))) {
          leaves = true;
          outside.emplace(a, outside.size());
        }
      (leaves ? touching : inside).push_back(g);
    }
    auto m = linalg::zeros(ring, outside.size(), touching.size());
    for (std::size_t k = 0; k < touching.size(); ++k)
      for (const auto& [a, v] : deg.basis.column(touching[k])) {
        const auto it = outside.find(a);
        if (it != outside.end()) m(it->second, k) = v;
      }
    const auto kernel = linalg::kernel_basis(ring, m);
    auto s = linalg::zeros(ring, gens, inside.size() + kernel.cols());
    for (std::size_t k = 0; k < inside.size(); ++k) s(inside[k], k) = ring.one();
    for (std::size_t c = 0; c < kernel.cols(); ++c)
      for (std::size_t k = 0; k < touching.size(); ++k)
        s(touching[k], inside.size() + c) = kernel(k, c);
    completions.push_back(linalg::complete_basis(ring, s, gens));
    sub_basis.push_back(std::move(s));
  }

  out.sub.ranks.clear();
  out.sub.boundary.clear();
  out.quotient.ranks.clear();
  out.quotient.boundary.clear();
  for (std::size_t i = 0; i < degrees; ++i) {
    const auto& comp = completions[i];
    const std::size_t gens = ic.degrees[i].basis.cols();
    const std::size_t s = comp.sub_rank;
    out.inclusion.push_back(sub_basis[i]);
    out.projection.push_back(comp.to_adapted.block(s, gens, 0, gens));
    out.lift.push_back(comp.from_adapted.block(0, gens, s, gens));
    out.sub.ranks.push_back(s);
    out.quotient.ranks.push_back(gens - s);
  }
  for (std::size_t i = 0; i < degrees; ++i) {
    const auto dense = linalg::to_dense(ring, ic.degrees[i].boundary);
    const std::size_t sub_rank = out.sub.ranks[i];
    if (i == 0) {
      out.sub.boundary.push_back(SparseMatrix<V<R>>(0, sub_rank));
      out.quotient.boundary.push_back(
          SparseMatrix<V<R>>(0, out.quotient.ranks[0]));
      continue;
    }
    // Sub boundary: D * S_i = S_{i-1} * D_sub.
    const auto image = linalg::multiply(ring, dense, out.inclusion[i]);
    const linalg::LatticeSolver<R> solver(ring, out.inclusion[i - 1]);
    auto d_sub = linalg::zeros(ring, out.sub.ranks[i - 1], sub_rank);
    for (std::size_t c = 0; c < sub_rank; ++c) {
      const auto x = solver.solve(image.column(c));
      if (!x)
        throw InvariantViolation("boundary of a subcomplex chain leaves the "
                                 "subcomplex");
      d_sub.set_column(c, *x);
    }
    out.sub.boundary.push_back(linalg::to_sparse(ring, d_sub));
    const auto d_quot = linalg::multiply(
        ring, out.projection[i - 1],
        linalg::multiply(ring, dense, out.lift[i]));
    out.quotient.boundary.push_back(linalg::to_sparse(ring, d_quot));
  }
  return out;
}

template <class R>
PairComplex<R> build_ic_pair(const R& ring, const FilteredComplex& x,
                             const std::set<Simplex>& sub, const Perversity& p,
                             const CoefficientSystem& sys) {
  for (const auto& s : sub) {
    if (!x.contains(s))
      throw ComplexError("subcomplex simplex " + s.to_string() +
                         " not in the complex");
    for (std::size_t j = 0; j < s.size() && s.size() > 1; ++j)
      if (!sub.count(s.facet(j)))
        throw ComplexError("subcomplex is not closed under faces at " +
                           s.to_string());
  }
  return build_ic_pair(build_ic_complex(ring, x, p, sys), sub);
}

#define IH_INSTANTIATE_CHAINS(R)                                              \
  template bool boundary_squares_to_zero(const ChainComplex<R>&);             \
  template struct IntersectionChainComplex<R>;                                \
  template SparseMatrix<linalg::Value<R>> ambient_boundary(                   \
      const R&, const FilteredComplex&, const CoefficientSystem&, int);       \
  template IntersectionChainComplex<R> build_ic_complex(                      \
      const R&, const FilteredComplex&, const Perversity&,                    \
      const CoefficientSystem&);                                              \
  template PairComplex<R> build_ic_pair(const IntersectionChainComplex<R>&,   \
                                        const std::set<Simplex>&);            \
  template PairComplex<R> build_ic_pair(const R&, const FilteredComplex&,     \
                                        const std::set<Simplex>&,             \
                                        const Perversity&,                    \
                                        const CoefficientSystem&);

IH_INSTANTIATE_CHAINS(IntegerRing)
IH_INSTANTIATE_CHAINS(RationalField)
IH_INSTANTIATE_CHAINS(PrimeField)

#undef IH_INSTANTIATE_CHAINS

}  // namespace ih
