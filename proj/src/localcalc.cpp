#include "ih/localcalc.hpp"

#include <algorithm>
#include <stdexcept>

namespace ih::localcalc {

namespace {

void require_nonnegative(int k, const char* what) {
  if (k < 0) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

}  // namespace

GradedModule cone_compact(const GradedModule& link, int n, const Perversity& p) {
  const int cutoff = n - 1 - p(n);
  GradedModule out;
  for (int i = 0; i < cutoff && i < static_cast<int>(link.support_end()); ++i)
    out.set(static_cast<std::size_t>(i), link[static_cast<std::size_t>(i)]);
  return out;
}

GradedModule cone_closed_support(const GradedModule& link, int n,
                                 const Perversity& p) {
  const int cutoff = std::max(n - p(n), 1);
  GradedModule out;
  const int end = static_cast<int>(link.support_end()) + 1;
  for (int i = cutoff; i < end; ++i)
    out.set(static_cast<std::size_t>(i), link[static_cast<std::size_t>(i - 1)]);
  return out;
}

GradedModule times_R(const GradedModule& link) { return link.shifted(1); }

GradedModule dist_neighborhood(const GradedModule& cone, int k) {
  require_nonnegative(k, "k");
  return cone.shifted(static_cast<std::size_t>(k));
}

GradedModule deleted_neighborhood(const GradedModule& link, int k) {
  require_nonnegative(k, "k");
  return link.shifted(static_cast<std::size_t>(k) + 1);
}

std::vector<ProfileRow> local_attaching_profile(const GradedModule& link, int n,
                                                int k_codim,
                                                const Perversity& p) {
  if (k_codim < 1 || k_codim > n)
    throw std::invalid_argument("codimension must lie in [1, n]");
  const int euclidean = n - k_codim;
  const auto nbhd =
      dist_neighborhood(cone_closed_support(link, k_codim, p), euclidean);
  const auto deleted = deleted_neighborhood(link, euclidean);
  const std::size_t end =
      std::max({nbhd.support_end(), deleted.support_end(),
                static_cast<std::size_t>(n) + 1});
  const int threshold = n - p(k_codim);
  std::vector<ProfileRow> rows;
  for (std::size_t i = 0; i < end; ++i)
    rows.push_back({i, nbhd[i], deleted[i], static_cast<int>(i) >= threshold});
  return rows;
}

}  // namespace ih::localcalc
