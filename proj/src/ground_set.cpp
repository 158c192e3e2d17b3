#include "ordist/ground_set.hpp"

#include <cctype>
#include <stdexcept>

namespace ordist {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("ground set must be non-empty");
  for (Element i = 0; i < labels_.size(); ++i) {
    const auto& l = labels_[i];
    if (l.empty()) throw std::invalid_argument("empty element label");
    for (char c : l) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '|' || c == ':' ||
          c == '#')
        throw std::invalid_argument("label contains a reserved character: '" + l + "'");
    }
    if (!index_.emplace(l, i).second) throw std::invalid_argument("duplicate label: '" + l + "'");
  }
}

GroundSet GroundSet::numbered(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return GroundSet(std::move(labels));
}

GroundSet GroundSet::lettered(std::size_t n) {
  if (n > 26) return numbered(n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(std::move(labels));
}

std::optional<Element> GroundSet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element GroundSet::index_of(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw std::invalid_argument("unknown label: '" + std::string(label) + "'");
}

GroundSet GroundSet::subset(std::span<const Element> elements) const {
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (Element e : elements) labels.push_back(label(e));
  return GroundSet(std::move(labels));
}

}  // namespace ordist
