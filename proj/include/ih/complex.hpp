#pragma once

// Finite simplicial complexes filtered by subcomplexes
//   X^0 c X^1 c ... c X^n,
// stored as a face-closed simplex set plus, for every simplex, the smallest
// skeleton index j with the simplex contained in X^j.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ih {

using Vertex = std::int64_t;

class ComplexError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An oriented simplex: strictly increasing vertex list.
class Simplex {
public:
  Simplex() = default;
  /// Sorts the vertices; throws ComplexError on duplicates or negatives.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices)
      : Simplex(std::vector<Vertex>(vertices)) {}

  const std::vector<Vertex>& vertices() const { return vertices_; }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  bool empty() const { return vertices_.empty(); }

  /// The facet obtained by dropping the vertex in position `i`.
  Simplex facet(std::size_t i) const;
  bool is_face_of(const Simplex& other) const;
  bool contains(Vertex v) const;
  /// Join with a vertex not in this simplex.
  Simplex join(Vertex v) const;

  std::string to_string() const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

private:
  std::vector<Vertex> vertices_;
};

class FilteredComplex {
public:
  FilteredComplex() = default;

  /// Checks face closure, skeleton range [0, formal_dim] and monotonicity;
  /// throws ComplexError on the first violation.
  static FilteredComplex from_skeleton_map(std::map<Simplex, int> skel,
                                           int formal_dim);

  int formal_dim() const { return formal_dim_; }
  int max_dimension() const;
  bool empty() const { return skel_.empty(); }
  std::size_t size() const { return skel_.size(); }

  bool contains(const Simplex& s) const { return skel_.count(s) != 0; }
  /// Smallest j with the simplex in X^j; throws if absent.
  int skeleton(const Simplex& s) const;
  /// Simplices of one dimension in lexicographic order.
  const std::vector<Simplex>& simplices(int dim) const;
  /// Position of a simplex within simplices(dim), if present.
  std::optional<std::size_t> index_of(const Simplex& s) const;
  const std::map<Simplex, int>& skeleton_map() const { return skel_; }
  std::vector<Vertex> vertices() const;

  /// Simplices with skel <= formal_dim - 1 (the set X^{n-1}).
  bool is_singular(const Simplex& s) const {
    return skeleton(s) <= formal_dim_ - 1;
  }

  /// Alternating simplex count of X^j; j = formal_dim gives chi(X).
  long long euler_characteristic(std::optional<int> skeleton = {}) const;

  friend bool operator==(const FilteredComplex& a, const FilteredComplex& b) {
    return a.formal_dim_ == b.formal_dim_ && a.skel_ == b.skel_;
  }

private:
  void index();

  int formal_dim_ = 0;
  std::map<Simplex, int> skel_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::map<Simplex, std::size_t> position_;
};

/// Closure of `facets`; simplex skeleton = least j whose generators contain
/// it, else formal_dim. A negative formal_dim means "max simplex dimension".
FilteredComplex build_complex(
    const std::vector<std::vector<Vertex>>& facets,
    const std::map<int, std::vector<std::vector<Vertex>>>& skeleton_generators =
        {},
    int formal_dim = -1);

struct ValidationReport {
  bool skeleta_coincide = false;  // X^{n-1} == X^{n-2}
  bool homogeneous = false;       // every simplex a face of an n-simplex
  /// Every regular (n-1)-simplex lies in one or two n-simplices.
  bool regular_codim_one = false;
  /// ... in exactly two (no boundary).
  bool closed = false;
  bool singular_set_nowhere_dense = false;
  std::vector<std::string> problems;
  std::string link_conditions = "not checked";

  bool pseudomanifold() const {
    return skeleta_coincide && homogeneous && regular_codim_one &&
           singular_set_nowhere_dense;
  }
};

ValidationReport validate_pseudomanifold(const FilteredComplex& x);

/// Closed cone with a fresh apex at skeleton 0; every other skeleton index
/// shifts up by one.
FilteredComplex cone(const FilteredComplex& x);

/// Two cones glued along X; both apexes at skeleton 0.
FilteredComplex suspension(const FilteredComplex& x);

/// Oriented 1-dimensional path 0 -> 1 -> ... -> m-1, or the cycle closing it.
struct LineGraph {
  int vertex_count = 2;
  bool cycle = false;

  static LineGraph path(int vertices) { return {vertices, false}; }
  static LineGraph circle(int vertices) { return {vertices, true}; }
};

/// Staircase triangulation of X x T; skeleton of a product simplex is one
/// more than the skeleton of its projection to X.
FilteredComplex product_with_graph(const FilteredComplex& x, LineGraph t);

/// First barycentric subdivision. New vertex ids enumerate the simplices of
/// X in (dimension, lexicographic) order; a flag of faces inherits the
/// skeleton of its largest member.
FilteredComplex barycentric_subdivide(const FilteredComplex& x);

FilteredComplex mark_points(const FilteredComplex& x,
                            const std::set<Vertex>& vertices);

/// Subcomplex on the given simplices, which must be face-closed. Skeleton
/// indices and formal dimension are inherited.
FilteredComplex subcomplex(const FilteredComplex& x,
                           const std::set<Simplex>& simplices);

/// All faces of simplices containing v.
std::set<Simplex> closed_star(const FilteredComplex& x, Vertex v);
/// All simplices containing v.
std::set<Simplex> open_star(const FilteredComplex& x, Vertex v);
/// X minus the open star of v.
std::set<Simplex> complement_of_open_star(const FilteredComplex& x, Vertex v);

}  // namespace ih
