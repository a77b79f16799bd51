#include "ih/builtins.hpp"

namespace ih {

FilteredComplex simplex_boundary(int d) {
  std::vector<std::vector<Vertex>> facets;
  for (Vertex skip = 0; skip <= d + 1; ++skip) {
    std::vector<Vertex> f;
    for (Vertex v = 0; v <= d + 1; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return build_complex(facets);
}

namespace {

// Moebius's 7-vertex torus.
FilteredComplex torus() {
  std::vector<std::vector<Vertex>> facets;
  for (Vertex i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return build_complex(facets);
}

// 6-vertex projective plane (half of the icosahedron).
FilteredComplex rp2() {
  return build_complex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                        {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
}

// 3 x 4 grid whose horizontal wrap reverses the vertical direction.
FilteredComplex klein() {
  constexpr Vertex rows = 3, cols = 4;
  const auto id = [&](Vertex i, Vertex j) {
    const bool flip = (i / rows) % 2 == 1;
    i %= rows;
    if (flip) j = -j;
    j = ((j % cols) + cols) % cols;
    return i * cols + j;
  };
  std::vector<std::vector<Vertex>> facets;
  for (Vertex i = 0; i < rows; ++i)
    for (Vertex j = 0; j < cols; ++j) {
      facets.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      facets.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  return build_complex(facets);
}

}  // namespace

FilteredComplex builtin(const std::string& name) {
  if (name == "sphere1") return simplex_boundary(1);
  if (name == "sphere2") return simplex_boundary(2);
  if (name == "sphere3") return simplex_boundary(3);
  if (name == "torus") return torus();
  if (name == "rp2") return rp2();
  if (name == "klein") return klein();
  if (name == "cone-torus") return cone(torus());
  if (name == "susp-torus") return suspension(torus());
  for (int m = 1; m <= 3; ++m)
    if (name == "s2-marked-" + std::to_string(m)) {
      std::set<Vertex> marks;
      for (Vertex v = 0; v < m; ++v) marks.insert(v);
      return mark_points(simplex_boundary(2), marks);
    }
  throw ComplexError("unknown builtin '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"sphere1", "sphere2",    "sphere3",    "torus",
          "rp2",     "klein",      "cone-torus", "susp-torus",
          "s2-marked-1", "s2-marked-2", "s2-marked-3"};
}

}  // namespace ih
