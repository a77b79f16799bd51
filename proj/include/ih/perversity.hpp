#pragma once

#include <string>
#include <vector>

namespace ih {

enum class PerversityKind { Traditional, Super, Loose };

enum class PerversityFamily { Zero, LowerMiddle, UpperMiddle, Top, GmSuper };

std::string to_string(PerversityKind kind);

/// Integer sequence p(1), ..., p(n). The value at codimension 0 is never
/// consulted.
class Perversity {
public:
  Perversity() = default;
  explicit Perversity(std::vector<int> values) : values_(std::move(values)) {}

  static Perversity named(PerversityFamily family, int n);
  /// "0,0,1,2" or one of zero|lower-middle|upper-middle|top|gm-super; a name
  /// is expanded to length n.
  static Perversity parse(const std::string& text, int n);

  /// Codimension k in [1, length()].
  int operator()(int k) const;
  int length() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }
  PerversityKind kind() const;

  /// Truncation to codimensions 1..n.
  Perversity restricted(int n) const;

  std::string to_string() const;

  friend bool operator==(const Perversity&, const Perversity&) = default;

private:
  std::vector<int> values_;
};

PerversityKind classify(const std::vector<int>& values);

/// q(k) = k - 2 - p(k) for k >= 2 and q(1) = 0.
Perversity complement(const Perversity& p, int n);

PerversityFamily parse_family(const std::string& name);

}  // namespace ih
