#pragma once

#include "ih/ring.hpp"

#include <string>
#include <vector>

namespace ih {

/// A finitely generated module over Z or a field: free rank plus torsion
/// invariant factors (each > 1, in divisibility order).
struct ModuleGroup {
  std::size_t betti = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  std::string to_string(const std::string& ring = "Z") const;

  friend bool operator==(const ModuleGroup&, const ModuleGroup&) = default;
};

/// Degree-indexed modules, finitely supported. Degrees past the stored range
/// are zero; equality ignores trailing zeros.
class GradedModule {
public:
  GradedModule() = default;
  explicit GradedModule(std::vector<ModuleGroup> groups);
  /// Free modules of the given ranks.
  static GradedModule free(std::vector<std::size_t> bettis);

  const ModuleGroup& operator[](std::size_t degree) const;
  void set(std::size_t degree, ModuleGroup group);
  /// One past the highest nonzero degree.
  std::size_t support_end() const;
  bool is_zero() const { return support_end() == 0; }

  /// Degree i of the result is degree i - k of this module.
  GradedModule shifted(std::size_t k) const;

  std::vector<std::size_t> bettis() const;
  std::string to_string(const std::string& ring = "Z") const;

  friend bool operator==(const GradedModule& a, const GradedModule& b);

private:
  std::vector<ModuleGroup> groups_;
};

using HomologyResult = GradedModule;

}  // namespace ih
