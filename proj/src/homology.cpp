#include "ih/homology.hpp"

namespace ih {

template <class R>
HomologyResult homology(const ChainComplex<R>& c) {
  if (!boundary_squares_to_zero(c))
    throw InvariantViolation("boundary does not square to zero");
  const std::size_t degrees = c.ranks.size();
  // rank and nonunit invariant factors of each boundary map
  std::vector<std::size_t> rank(degrees + 1, 0);
  std::vector<std::vector<Integer>> torsion(degrees + 1);
  for (std::size_t i = 1; i < degrees; ++i) {
    if constexpr (R::is_field) {
      rank[i] = linalg::rank(c.ring, c.boundary[i]);
    } else {
      for (auto& f : linalg::invariant_factors(c.boundary[i])) {
        ++rank[i];
        if (f > 1) torsion[i].push_back(std::move(f));
      }
    }
  }
  HomologyResult out;
  for (std::size_t i = 0; i < degrees; ++i) {
    ModuleGroup g;
    g.betti = c.ranks[i] - rank[i] - rank[i + 1];
    g.torsion = torsion[i + 1];
    out.set(i, std::move(g));
  }
  return out;
}

template HomologyResult homology(const ChainComplex<IntegerRing>&);
template HomologyResult homology(const ChainComplex<RationalField>&);
template HomologyResult homology(const ChainComplex<PrimeField>&);

HomologyResult intersection_homology(const FilteredComplex& x,
                                     const Perversity& p,
                                     const CoefficientSystem& sys) {
  return sys.ring().visit([&](const auto& ring) {
    return homology(build_ic_complex(ring, x, p, sys).chains());
  });
}

HomologyResult relative_homology(const FilteredComplex& x,
                                 const std::set<Simplex>& sub,
                                 const Perversity& p,
                                 const CoefficientSystem& sys) {
  return sys.ring().visit([&](const auto& ring) {
    return homology(build_ic_pair(ring, x, sub, p, sys).quotient);
  });
}

bool LesReport::exact() const {
  for (const auto& n : nodes)
    if (!n.exact()) return false;
  return true;
}

std::vector<std::string> LesReport::failures() const {
  std::vector<std::string> out;
  for (const auto& n : nodes)
    if (!n.exact())
      out.push_back("IH_" + std::to_string(n.degree) + "(" + n.group +
                    "): image rank " + std::to_string(n.image_rank) +
                    ", kernel rank " + std::to_string(n.kernel_rank) +
                    (n.image_in_kernel ? "" : ", image not in kernel"));
  return out;
}

namespace {

template <class R>
using Dense = Matrix<linalg::Value<R>>;

template <class R>
struct DenseComplex {
  std::vector<std::size_t> ranks;
  std::vector<Dense<R>> boundary;  // boundary[i]: C_i -> C_{i-1}

  DenseComplex(const R& ring, const ChainComplex<R>& c) : ranks(c.ranks) {
    for (const auto& d : c.boundary) boundary.push_back(linalg::to_dense(ring, d));
  }
  std::size_t rank(std::size_t i) const { return i < ranks.size() ? ranks[i] : 0; }
  Dense<R> cycles(const R& ring, std::size_t i) const {
    if (i == 0) return linalg::identity(ring, rank(0));
    return linalg::kernel_basis(ring, boundary[i]);
  }
  // Image of C_{i+1} in C_i.
  Dense<R> incoming(const R& ring, std::size_t i) const {
    if (i + 1 < boundary.size()) return boundary[i + 1];
    return linalg::zeros(ring, rank(i), 0);
  }
};

// { a : f a lies in the column span of g }.
template <class R>
Dense<R> pullback(const R& ring, const Dense<R>& f, const Dense<R>& g) {
  auto neg = g;
  for (std::size_t r = 0; r < neg.rows(); ++r)
    for (std::size_t c = 0; c < neg.cols(); ++c) neg(r, c) = ring.zero() - neg(r, c);
  Dense<R> stacked = f.cols() == 0 && g.cols() == 0
                         ? linalg::zeros(ring, f.rows(), 0)
                         : linalg::hconcat(ring, f, neg);
  const auto ker = linalg::kernel_basis(ring, stacked);
  return ker.block(0, f.cols(), 0, ker.cols());
}

template <class R>
LesNode compare(const R& ring, std::string group, std::size_t degree,
                const Dense<R>& image, const Dense<R>& kernel) {
  LesNode node;
  node.group = std::move(group);
  node.degree = degree;
  node.image_rank = linalg::rank(ring, image);
  node.kernel_rank = linalg::rank(ring, kernel);
  const auto both = linalg::hconcat(ring, image, kernel);
  node.image_in_kernel = linalg::rank(ring, both) == node.kernel_rank;
  return node;
}

template <class R>
LesReport run_les(const R& ring, const PairComplex<R>& pair) {
  const DenseComplex<R> a(ring, pair.sub);
  const DenseComplex<R> x(ring, pair.absolute);
  const DenseComplex<R> q(ring, pair.quotient);
  const std::size_t degrees = x.ranks.size();

  std::vector<Dense<R>> za, zx, zq;
  for (std::size_t i = 0; i < degrees; ++i) {
    za.push_back(a.cycles(ring, i));
    zx.push_back(x.cycles(ring, i));
    zq.push_back(q.cycles(ring, i));
  }
  // Connecting map on relative cycles: delta[i] : Z_i(X,A) -> C_{i-1}(A).
  std::vector<Dense<R>> delta(degrees);
  for (std::size_t i = 0; i < degrees; ++i) {
    if (i == 0) {
      delta[i] = linalg::zeros(ring, 0, zq[0].cols());
      continue;
    }
    const auto pushed = linalg::multiply(
        ring, x.boundary[i], linalg::multiply(ring, pair.lift[i], zq[i]));
    const linalg::LatticeSolver<R> solver(ring, pair.inclusion[i - 1]);
    delta[i] = linalg::zeros(ring, a.rank(i - 1), zq[i].cols());
    for (std::size_t c = 0; c < zq[i].cols(); ++c) {
      const auto y = solver.solve(pushed.column(c));
      if (!y)
        throw InvariantViolation("lifted relative cycle has boundary outside A");
      delta[i].set_column(c, *y);
    }
  }

  LesReport report;
  report.ring = ring.name();
  report.rank_only = !R::is_field;
  for (std::size_t i = 0; i < degrees; ++i) {
    {
      const auto incoming = i + 1 < degrees
                                ? delta[i + 1]
                                : linalg::zeros(ring, a.rank(i), 0);
      const auto image = linalg::hconcat(ring, incoming, a.incoming(ring, i));
      const auto inc_z = linalg::multiply(ring, pair.inclusion[i], za[i]);
      const auto kernel = linalg::multiply(
          ring, za[i], pullback(ring, inc_z, x.incoming(ring, i)));
      report.nodes.push_back(compare(ring, "A", i, image, kernel));
    }
    {
      const auto image = linalg::hconcat(
          ring, linalg::multiply(ring, pair.inclusion[i], za[i]),
          x.incoming(ring, i));
      const auto proj_z = linalg::multiply(ring, pair.projection[i], zx[i]);
      const auto kernel = linalg::multiply(
          ring, zx[i], pullback(ring, proj_z, q.incoming(ring, i)));
      report.nodes.push_back(compare(ring, "X", i, image, kernel));
    }
    {
      const auto image = linalg::hconcat(
          ring, linalg::multiply(ring, pair.projection[i], zx[i]),
          q.incoming(ring, i));
      const auto kernel =
          i == 0 ? zq[0]
                 : linalg::multiply(ring, zq[i],
                                    pullback(ring, delta[i], a.boundary[i]));
      report.nodes.push_back(compare(ring, "X,A", i, image, kernel));
    }
  }
  return report;
}

}  // namespace

LesReport les_check(const FilteredComplex& x, const std::set<Simplex>& sub,
                    const Perversity& p, const CoefficientSystem& sys) {
  return sys.ring().visit([&](const auto& ring) {
    return run_les(ring, build_ic_pair(ring, x, sub, p, sys));
  });
}

}  // namespace ih
