#include "ih/perversity.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace ih {

std::string to_string(PerversityKind kind) {
  switch (kind) {
    case PerversityKind::Traditional:
      return "traditional";
    case PerversityKind::Super:
      return "super";
    case PerversityKind::Loose:
      break;
  }
  return "loose";
}

namespace {

int floor_div2(int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

}  // namespace

Perversity Perversity::named(PerversityFamily family, int n) {
  if (n < 1) throw std::invalid_argument("perversity length must be >= 1");
  std::vector<int> v;
  for (int k = 1; k <= n; ++k) {
    int value = 0;
    switch (family) {
      case PerversityFamily::Zero:
        value = 0;
        break;
      case PerversityFamily::LowerMiddle:
        value = floor_div2(k - 2);
        break;
      case PerversityFamily::UpperMiddle:
        value = -floor_div2(-(k - 2));
        break;
      case PerversityFamily::Top:
        value = k - 2;
        break;
      case PerversityFamily::GmSuper:
        value = k - 1;
        break;
    }
    if (family != PerversityFamily::GmSuper && value < 0) value = 0;
    v.push_back(value);
  }
  return Perversity(std::move(v));
}

PerversityFamily parse_family(const std::string& name) {
  if (name == "zero") return PerversityFamily::Zero;
  if (name == "lower-middle") return PerversityFamily::LowerMiddle;
  if (name == "upper-middle") return PerversityFamily::UpperMiddle;
  if (name == "top") return PerversityFamily::Top;
  if (name == "gm-super") return PerversityFamily::GmSuper;
  throw std::invalid_argument("unknown perversity '" + name + "'");
}

Perversity Perversity::parse(const std::string& text, int n) {
  if (text.empty()) throw std::invalid_argument("empty perversity");
  const bool numeric =
      text.find_first_not_of("0123456789,- ") == std::string::npos;
  if (!numeric) return named(parse_family(text), n);
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    if (first == std::string::npos)
      throw std::invalid_argument("empty entry in perversity '" + text + "'");
    item = item.substr(first, last - first + 1);
    int value = 0;
    const auto* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(item.data(), end, value);
    if (ec != std::errc{} || ptr != end)
      throw std::invalid_argument("bad perversity entry '" + item + "'");
    values.push_back(value);
  }
  return Perversity(std::move(values));
}

int Perversity::operator()(int k) const {
  if (k < 1 || k > length())
    throw std::out_of_range("perversity has no value at codimension " +
                            std::to_string(k));
  return values_[static_cast<std::size_t>(k - 1)];
}

PerversityKind Perversity::kind() const { return classify(values_); }

Perversity Perversity::restricted(int n) const {
  if (n > length())
    throw std::out_of_range("perversity shorter than " + std::to_string(n));
  return Perversity(std::vector<int>(values_.begin(), values_.begin() + n));
}

std::string Perversity::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

PerversityKind classify(const std::vector<int>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i + 1] < v[i] || v[i + 1] > v[i] + 1) return PerversityKind::Loose;
  // p(2) is the deciding value; a missing p(2) behaves like 0.
  const int p1 = v.empty() ? 0 : v[0];
  const int p2 = v.size() < 2 ? 0 : v[1];
  if (p2 > 0) return PerversityKind::Super;
  if (p1 == 0 && p2 == 0) return PerversityKind::Traditional;
  return PerversityKind::Loose;
}

Perversity complement(const Perversity& p, int n) {
  std::vector<int> q;
  for (int k = 1; k <= n; ++k) q.push_back(k == 1 ? 0 : k - 2 - p(k));
  return Perversity(std::move(q));
}

}  // namespace ih
