#include "ih/graded_module.hpp"

#include <algorithm>

namespace ih {

std::string ModuleGroup::to_string(const std::string& ring) const {
  if (is_zero()) return "0";
  std::string out;
  if (betti > 0) {
    out = ring;
    if (betti > 1) out += "^" + std::to_string(betti);
  }
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.str();
  }
  return out;
}

GradedModule::GradedModule(std::vector<ModuleGroup> groups)
    : groups_(std::move(groups)) {}

GradedModule GradedModule::free(std::vector<std::size_t> bettis) {
  GradedModule m;
  for (std::size_t b : bettis) m.groups_.push_back({b, {}});
  return m;
}

const ModuleGroup& GradedModule::operator[](std::size_t degree) const {
  static const ModuleGroup zero;
  return degree < groups_.size() ? groups_[degree] : zero;
}

void GradedModule::set(std::size_t degree, ModuleGroup group) {
  if (groups_.size() <= degree) groups_.resize(degree + 1);
  groups_[degree] = std::move(group);
}

std::size_t GradedModule::support_end() const {
  std::size_t end = groups_.size();
  while (end > 0 && groups_[end - 1].is_zero()) --end;
  return end;
}

GradedModule GradedModule::shifted(std::size_t k) const {
  GradedModule out;
  for (std::size_t i = 0; i < groups_.size(); ++i) out.set(i + k, groups_[i]);
  return out;
}

std::vector<std::size_t> GradedModule::bettis() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < support_end(); ++i) out.push_back(groups_[i].betti);
  return out;
}

std::string GradedModule::to_string(const std::string& ring) const {
  std::string out = "(";
  const std::size_t end = std::max<std::size_t>(support_end(), 1);
  for (std::size_t i = 0; i < end; ++i) {
    if (i) out += ", ";
    out += (*this)[i].to_string(ring);
  }
  return out + ")";
}

bool operator==(const GradedModule& a, const GradedModule& b) {
  const std::size_t end = std::max(a.support_end(), b.support_end());
  for (std::size_t i = 0; i < end; ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

}  // namespace ih
