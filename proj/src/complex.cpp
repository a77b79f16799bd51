#include "ih/complex.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ih {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw ComplexError("simplex has a repeated vertex: " + to_string());
  if (!vertices_.empty() && vertices_.front() < 0)
    throw ComplexError("negative vertex id in " + to_string());
}

Simplex Simplex::facet(std::size_t i) const {
  Simplex f;
  f.vertices_.reserve(vertices_.size() - 1);
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    if (k != i) f.vertices_.push_back(vertices_[k]);
  return f;
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(),
                       vertices_.begin(), vertices_.end());
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Simplex Simplex::join(Vertex v) const {
  auto verts = vertices_;
  verts.push_back(v);
  return Simplex(std::move(verts));
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ',';
    os << vertices_[i];
  }
  os << ']';
  return os.str();
}

namespace {

void add_closure(const Simplex& s, std::set<Simplex>& out) {
  if (!out.insert(s).second) return;
  if (s.size() <= 1) return;
  for (std::size_t i = 0; i < s.size(); ++i) add_closure(s.facet(i), out);
}

}  // namespace

FilteredComplex FilteredComplex::from_skeleton_map(std::map<Simplex, int> skel,
                                                   int formal_dim) {
  if (formal_dim < 0) throw ComplexError("formal dimension must be >= 0");
  for (const auto& [s, j] : skel) {
    if (s.empty()) throw ComplexError("empty simplex in complex");
    if (j < 0 || j > formal_dim)
      throw ComplexError("skeleton index " + std::to_string(j) + " of " +
                         s.to_string() + " outside [0, " +
                         std::to_string(formal_dim) + "]");
    if (s.size() > 1) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        const auto f = s.facet(i);
        const auto it = skel.find(f);
        if (it == skel.end())
          throw ComplexError("face " + f.to_string() + " of " + s.to_string() +
                             " missing");
        if (it->second > j)
          throw ComplexError("skeleton not monotone on " + f.to_string() +
                             " < " + s.to_string());
      }
    }
  }
  FilteredComplex x;
  x.formal_dim_ = formal_dim;
  x.skel_ = std::move(skel);
  x.index();
  return x;
}

void FilteredComplex::index() {
  by_dim_.clear();
  position_.clear();
  for (const auto& [s, j] : skel_) {
    const auto d = static_cast<std::size_t>(s.dimension());
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    position_.emplace(s, by_dim_[d].size());
    by_dim_[d].push_back(s);
  }
}

int FilteredComplex::max_dimension() const {
  return static_cast<int>(by_dim_.size()) - 1;
}

int FilteredComplex::skeleton(const Simplex& s) const {
  const auto it = skel_.find(s);
  if (it == skel_.end())
    throw ComplexError("simplex " + s.to_string() + " not in complex");
  return it->second;
}

const std::vector<Simplex>& FilteredComplex::simplices(int dim) const {
  static const std::vector<Simplex> none;
  if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[static_cast<std::size_t>(dim)];
}

std::optional<std::size_t> FilteredComplex::index_of(const Simplex& s) const {
  const auto it = position_.find(s);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

std::vector<Vertex> FilteredComplex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& s : simplices(0)) out.push_back(s[0]);
  return out;
}

long long FilteredComplex::euler_characteristic(
    std::optional<int> skeleton) const {
  long long chi = 0;
  for (const auto& [s, j] : skel_) {
    if (skeleton && j > *skeleton) continue;
    chi += (s.dimension() % 2 == 0) ? 1 : -1;
  }
  return chi;
}

FilteredComplex build_complex(
    const std::vector<std::vector<Vertex>>& facets,
    const std::map<int, std::vector<std::vector<Vertex>>>& skeleton_generators,
    int formal_dim) {
  if (facets.empty()) throw ComplexError("complex needs at least one facet");
  std::set<Simplex> all;
  int max_dim = 0;
  for (const auto& f : facets) {
    if (f.empty()) throw ComplexError("empty facet");
    Simplex s(f);
    max_dim = std::max(max_dim, s.dimension());
    add_closure(s, all);
  }
  int max_generator_level = 0;
  for (const auto& [j, gens] : skeleton_generators)
    if (!gens.empty()) max_generator_level = std::max(max_generator_level, j);
  if (formal_dim < 0) formal_dim = std::max(max_dim, max_generator_level);
  if (formal_dim < max_generator_level)
    throw ComplexError("formal dimension " + std::to_string(formal_dim) +
                       " below skeleton level " +
                       std::to_string(max_generator_level));

  std::map<Simplex, int> skel;
  for (const auto& s : all) skel.emplace(s, formal_dim);
  // Generator closures are face-closed, so taking the least level containing
  // a simplex is automatically monotone.
  for (const auto& [j, gens] : skeleton_generators) {
    if (j < 0) throw ComplexError("negative skeleton level");
    for (const auto& g : gens) {
      Simplex gs(g);
      if (!all.count(gs))
        throw ComplexError("skeleton generator " + gs.to_string() +
                           " is not a face of the complex");
      std::set<Simplex> closure;
      add_closure(gs, closure);
      for (const auto& s : closure) {
        auto& level = skel.at(s);
        level = std::min(level, j);
      }
    }
  }
  return FilteredComplex::from_skeleton_map(std::move(skel), formal_dim);
}

ValidationReport validate_pseudomanifold(const FilteredComplex& x) {
  ValidationReport report;
  const int n = x.formal_dim();

  report.skeleta_coincide = true;
  for (const auto& [s, j] : x.skeleton_map())
    if (j == n - 1) {
      report.skeleta_coincide = false;
      report.problems.push_back("codimension-one stratum contains " +
                                s.to_string());
      break;
    }

  std::set<Simplex> under_top;
  std::map<Simplex, int> top_cofaces;
  for (const auto& top : x.simplices(n)) {
    add_closure(top, under_top);
    for (std::size_t i = 0; i < top.size(); ++i) ++top_cofaces[top.facet(i)];
  }
  report.homogeneous = true;
  for (const auto& [s, j] : x.skeleton_map())
    if (!under_top.count(s)) {
      report.homogeneous = false;
      report.problems.push_back(s.to_string() + " is not a face of an " +
                                std::to_string(n) + "-simplex");
      break;
    }

  report.regular_codim_one = true;
  report.closed = true;
  for (const auto& s : x.simplices(n - 1)) {
    if (x.skeleton(s) <= n - 2) continue;
    const auto it = top_cofaces.find(s);
    const int count = it == top_cofaces.end() ? 0 : it->second;
    if (count != 2) report.closed = false;
    if (count < 1 || count > 2) {
      report.regular_codim_one = false;
      report.problems.push_back(s.to_string() + " lies in " +
                                std::to_string(count) + " top simplices");
    }
  }

  // Every singular simplex must be a proper face of a regular one.
  std::set<Simplex> under_regular;
  for (const auto& [s, j] : x.skeleton_map())
    if (j > n - 2)
      for (std::size_t i = 0; i < s.size() && s.size() > 1; ++i)
        add_closure(s.facet(i), under_regular);
  report.singular_set_nowhere_dense = true;
  for (const auto& [s, j] : x.skeleton_map())
    if (j <= n - 2 && !under_regular.count(s)) {
      report.singular_set_nowhere_dense = false;
      report.problems.push_back("singular " + s.to_string() +
                                " is not in the closure of the regular part");
      break;
    }
  return report;
}

namespace {

Vertex fresh_vertex(const FilteredComplex& x) {
  const auto verts = x.vertices();
  return verts.empty() ? 0 : verts.back() + 1;
}

}  // namespace

FilteredComplex cone(const FilteredComplex& x) {
  const Vertex apex = fresh_vertex(x);
  std::map<Simplex, int> skel;
  skel.emplace(Simplex{apex}, 0);
  for (const auto& [s, j] : x.skeleton_map()) {
    skel.emplace(s, j + 1);
    skel.emplace(s.join(apex), j + 1);
  }
  return FilteredComplex::from_skeleton_map(std::move(skel), x.formal_dim() + 1);
}

FilteredComplex suspension(const FilteredComplex& x) {
  if (x.empty()) throw ComplexError("suspension of an empty complex");
  const Vertex north = fresh_vertex(x);
  const Vertex south = north + 1;
  std::map<Simplex, int> skel;
  skel.emplace(Simplex{north}, 0);
  skel.emplace(Simplex{south}, 0);
  for (const auto& [s, j] : x.skeleton_map()) {
    skel.emplace(s, j + 1);
    skel.emplace(s.join(north), j + 1);
    skel.emplace(s.join(south), j + 1);
  }
  return FilteredComplex::from_skeleton_map(std::move(skel), x.formal_dim() + 1);
}

FilteredComplex product_with_graph(const FilteredComplex& x, LineGraph t) {
  if (t.cycle && t.vertex_count < 3)
    throw ComplexError("cycle graph needs at least 3 vertices");
  if (!t.cycle && t.vertex_count < 2)
    throw ComplexError("path graph needs at least 2 vertices");
  const auto verts = x.vertices();
  std::map<Vertex, Vertex> rank;
  for (std::size_t i = 0; i < verts.size(); ++i)
    rank.emplace(verts[i], static_cast<Vertex>(i));
  const Vertex m = t.vertex_count;
  const auto id = [&](Vertex v, Vertex tv) { return rank.at(v) * m + tv; };

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  if (t.cycle) edges.emplace_back(m - 1, 0);

  std::set<Simplex> all;
  for (const auto& [s, j] : x.skeleton_map()) {
    for (const auto& [a, b] : edges) {
      for (std::size_t step = 0; step < s.size(); ++step) {
        std::vector<Vertex> cell;
        for (std::size_t k = 0; k <= step; ++k) cell.push_back(id(s[k], a));
        for (std::size_t k = step; k < s.size(); ++k) cell.push_back(id(s[k], b));
        add_closure(Simplex(std::move(cell)), all);
      }
    }
  }
  std::map<Simplex, int> skel;
  for (const auto& cell : all) {
    std::vector<Vertex> base;
    for (Vertex v : cell.vertices()) base.push_back(verts[static_cast<std::size_t>(v / m)]);
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    skel.emplace(cell, x.skeleton(Simplex(std::move(base))) + 1);
  }
  return FilteredComplex::from_skeleton_map(std::move(skel), x.formal_dim() + 1);
}

FilteredComplex barycentric_subdivide(const FilteredComplex& x) {
  std::map<Simplex, Vertex> barycenter;
  Vertex next = 0;
  for (int d = 0; d <= x.max_dimension(); ++d)
    for (const auto& s : x.simplices(d)) barycenter.emplace(s, next++);

  // Flags of faces ending at each simplex, as barycenter id lists.
  std::map<Simplex, std::vector<std::vector<Vertex>>> flags;
  for (int d = 0; d <= x.max_dimension(); ++d) {
    for (const auto& s : x.simplices(d)) {
      std::vector<std::vector<Vertex>> ending{{barycenter.at(s)}};
      std::set<Simplex> proper;
      if (s.size() > 1)
        for (std::size_t i = 0; i < s.size(); ++i) add_closure(s.facet(i), proper);
      for (const auto& f : proper)
        for (auto chain : flags.at(f)) {
          chain.push_back(barycenter.at(s));
          ending.push_back(std::move(chain));
        }
      flags.emplace(s, std::move(ending));
    }
  }
  std::map<Simplex, int> skel;
  for (const auto& [s, chains] : flags) {
    const int j = x.skeleton(s);
    for (const auto& chain : chains) skel.emplace(Simplex(chain), j);
  }
  return FilteredComplex::from_skeleton_map(std::move(skel), x.formal_dim());
}

FilteredComplex mark_points(const FilteredComplex& x,
                            const std::set<Vertex>& vertices) {
  auto skel = x.skeleton_map();
  for (Vertex v : vertices) {
    const auto it = skel.find(Simplex{v});
    if (it == skel.end())
      throw ComplexError("vertex " + std::to_string(v) + " not in complex");
    it->second = 0;
  }
  return FilteredComplex::from_skeleton_map(std::move(skel), x.formal_dim());
}

FilteredComplex subcomplex(const FilteredComplex& x,
                           const std::set<Simplex>& simplices) {
  std::map<Simplex, int> skel;
  for (const auto& s : simplices) skel.emplace(s, x.skeleton(s));
  return FilteredComplex::from_skeleton_map(std::move(skel), x.formal_dim());
}

std::set<Simplex> open_star(const FilteredComplex& x, Vertex v) {
  std::set<Simplex> out;
  for (const auto& [s, j] : x.skeleton_map())
    if (s.contains(v)) out.insert(s);
  return out;
}

std::set<Simplex> closed_star(const FilteredComplex& x, Vertex v) {
  std::set<Simplex> out;
  for (const auto& s : open_star(x, v)) add_closure(s, out);
  return out;
}

std::set<Simplex> complement_of_open_star(const FilteredComplex& x, Vertex v) {
  std::set<Simplex> out;
  for (const auto& [s, j] : x.skeleton_map())
    if (!s.contains(v)) out.insert(s);
  return out;
}

}  // namespace ih
