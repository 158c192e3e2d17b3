#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ordist {

using Element = std::size_t;

/// The labeled base set X. Element indices 0..n-1 follow label order.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);

  /// Labels "<prefix>1".."<prefix>n".
  static GroundSet numbered(std::size_t n, std::string_view prefix = "x");
  /// Labels "a", "b", ...; falls back to numbered() past 26 elements.
  static GroundSet lettered(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Element e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find(std::string_view label) const;
  /// Like find() but throws std::invalid_argument on unknown labels.
  Element index_of(std::string_view label) const;

  /// Ground set on the given elements, in the order given.
  GroundSet subset(std::span<const Element> elements) const;

  bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> index_;
};

}  // namespace ordist
