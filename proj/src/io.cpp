#include "ih/io.hpp"

#include <fstream>
#include <limits>
#include <set>

namespace ih::io {

namespace {

std::vector<Vertex> vertex_list(const json& j) {
  if (!j.is_array()) throw FormatError("simplex must be an array of vertices");
  std::vector<Vertex> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw FormatError("vertex ids must be non-negative integers");
    out.push_back(v.get<Vertex>());
  }
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    try {
      const auto slash = text.find('/');
      if (slash == std::string::npos) return Rational(Integer(text));
      const Integer den(text.substr(slash + 1));
      if (den == 0) throw FormatError("zero denominator in '" + text + "'");
      return Rational(Integer(text.substr(0, slash)), den);
    } catch (const std::runtime_error&) {
      throw FormatError("bad rational '" + text + "'");
    }
  }
  throw FormatError("matrix entries must be integers or \"p/q\" strings");
}

json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

json scalar_to_json(const Integer& v) { return integer_to_json(v); }
json scalar_to_json(const Rational& v) {
  if (denominator(v) == 1) return integer_to_json(numerator(v));
  return v.str();
}
json scalar_to_json(const Residue& v) { return v.value(); }

template <class T>
json sparse_to_json(const SparseMatrix<T>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(0);
    rows.push_back(std::move(row));
  }
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) rows[r][c] = scalar_to_json(v);
  return rows;
}

}  // namespace

json simplex_to_json(const Simplex& s) { return s.vertices(); }

FilteredComplex complex_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("complex must be a JSON object");
  if (!j.contains("facets")) throw FormatError("complex needs \"facets\"");
  std::vector<std::vector<Vertex>> facets;
  for (const auto& f : j.at("facets")) facets.push_back(vertex_list(f));
  std::map<int, std::vector<std::vector<Vertex>>> gens;
  if (j.contains("skeleta")) {
    for (const auto& [key, list] : j.at("skeleta").items()) {
      int level = 0;
      try {
        std::size_t used = 0;
        level = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw FormatError("skeleton key '" + key + "' is not an integer");
      }
      for (const auto& s : list) gens[level].push_back(vertex_list(s));
    }
  }
  int formal_dim = -1;
  if (j.contains("formal_dim")) {
    if (!j.at("formal_dim").is_number_integer())
      throw FormatError("formal_dim must be an integer");
    formal_dim = j.at("formal_dim").get<int>();
    if (formal_dim < 0) throw FormatError("formal_dim must be >= 0");
  }
  return build_complex(facets, gens, formal_dim);
}

json complex_to_json(const FilteredComplex& x) {
  const auto maximal = [&](std::optional<int> level) {
    std::vector<Simplex> in;
    for (const auto& [s, j] : x.skeleton_map())
      if (!level || j <= *level) in.push_back(s);
    std::set<Simplex> covered;
    for (const auto& s : in)
      for (std::size_t i = 0; i < s.size() && s.size() > 1; ++i)
        covered.insert(s.facet(i));
    json out = json::array();
    for (const auto& s : in)
      if (!covered.count(s)) out.push_back(simplex_to_json(s));
    return out;
  };
  json j;
  j["formal_dim"] = x.formal_dim();
  j["facets"] = maximal(std::nullopt);
  json skeleta = json::object();
  for (int level = 0; level < x.formal_dim(); ++level) {
    auto gens = maximal(level);
    if (!gens.empty()) skeleta[std::to_string(level)] = std::move(gens);
  }
  j["skeleta"] = std::move(skeleta);
  return j;
}

CoefficientSystem coefficients_from_json(const json& j, const FilteredComplex& x) {
  if (!j.is_object()) throw FormatError("coefficients must be a JSON object");
  const Ring ring = Ring::parse(j.value("ring", std::string("Z")));
  const CoefficientMode mode = parse_mode(j.value("mode", std::string("g0")));
  const int rank = j.value("rank", 1);
  if (!j.contains("transports") || j.at("transports").empty())
    return CoefficientSystem::constant(ring, mode, rank);
  if (mode == CoefficientMode::Full)
    throw CoefficientError("transports require mode g0");
  TransportMap transports;
  for (const auto& t : j.at("transports")) {
    const Simplex s(vertex_list(t.at("simplex")));
    const Simplex f(vertex_list(t.at("facet")));
    const auto& rows = t.at("matrix");
    if (!rows.is_array() || rows.empty())
      throw FormatError("transport matrix must be a non-empty array");
    Matrix<Rational> m(rows.size(), rows[0].size(), Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols()) throw FormatError("ragged transport matrix");
      for (std::size_t c = 0; c < m.cols(); ++c)
        m(r, c) = rational_from_json(rows[r][c]);
    }
    if (!transports.emplace(Incidence{s, f}, std::move(m)).second)
      throw FormatError("duplicate transport " + s.to_string() + "->" +
                        f.to_string());
  }
  return build_local_system(x, std::move(transports), ring, rank);
}

json coefficients_to_json(const CoefficientSystem& sys) {
  json j;
  j["ring"] = sys.ring().name();
  j["mode"] = to_string(sys.mode());
  j["rank"] = sys.rank();
  json ts = json::array();
  for (const auto& [inc, m] : sys.transports()) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
      rows.push_back(std::move(row));
    }
    ts.push_back({{"simplex", simplex_to_json(inc.first)},
                  {"facet", simplex_to_json(inc.second)},
                  {"matrix", std::move(rows)}});
  }
  j["transports"] = std::move(ts);
  return j;
}

json module_to_json(const GradedModule& m) {
  json degrees = json::array();
  const std::size_t end = std::max<std::size_t>(m.support_end(), 1);
  for (std::size_t i = 0; i < end; ++i) {
    json torsion = json::array();
    for (const auto& t : m[i].torsion) torsion.push_back(integer_to_json(t));
    degrees.push_back({{"i", i}, {"betti", m[i].betti}, {"torsion", torsion}});
  }
  return degrees;
}

template <class R>
json ic_dump(const IntersectionChainComplex<R>& ic) {
  json degrees = json::array();
  for (std::size_t i = 0; i < ic.degrees.size(); ++i) {
    const auto& d = ic.degrees[i];
    json simplices = json::array();
    for (std::size_t s : d.allowable_simplices)
      simplices.push_back(simplex_to_json(d.ambient.simplices[s]));
    degrees.push_back({{"i", i},
                       {"allowable", std::move(simplices)},
                       {"stalk_rank", ic.stalk_rank},
                       {"basis", sparse_to_json(d.basis)},
                       {"boundary", sparse_to_json(d.boundary)}});
  }
  return {{"ring", ic.ring.name()},
          {"mode", to_string(ic.mode)},
          {"degrees", std::move(degrees)}};
}

template json ic_dump(const IntersectionChainComplex<IntegerRing>&);
template json ic_dump(const IntersectionChainComplex<RationalField>&);
template json ic_dump(const IntersectionChainComplex<PrimeField>&);

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace ih::io
