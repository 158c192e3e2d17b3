#pragma once

#include "ordist/ground_set.hpp"

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ordist {

using ElementSet = boost::dynamic_bitset<std::uint64_t>;

ElementSet make_set(std::size_t n, std::initializer_list<Element> elements);
ElementSet make_set(std::size_t n, const std::vector<Element>& elements);
std::vector<Element> elements_of(const ElementSet& set);

/// A bipartition A|B of {0..n-1} into two non-empty parts.
///
/// Stored canonically by the part that does not contain element 0, so A|B and B|A are the
/// same value. Ordering is by size of that part, then lexicographically by its elements.
class Split {
 public:
  /// `side` may be either part. Throws std::invalid_argument for n < 2 or an empty/full side.
  explicit Split(ElementSet side);
  Split(std::size_t n, std::initializer_list<Element> side);
  Split(std::size_t n, const std::vector<Element>& side);

  std::size_t ground_size() const { return side_.size(); }
  /// The part not containing element 0.
  const ElementSet& side() const { return side_; }
  /// The part containing element 0.
  ElementSet other_side() const { return ~side_; }
  /// The part containing `x`.
  ElementSet side_of(Element x) const { return side_.test(x) ? side_ : ~side_; }

  bool separates(Element x, Element y) const { return side_.test(x) != side_.test(y); }
  /// Size of the smaller part.
  std::size_t min_part_size() const;
  bool is_trivial() const { return min_part_size() == 1; }

  bool operator==(const Split& other) const { return side_ == other.side_; }
  std::strong_ordering operator<=>(const Split& other) const;

  /// "{b,c}|{a,d}" style rendering; the part without element 0 comes first.
  std::string to_string(const GroundSet& ground) const;

 private:
  ElementSet side_;
};

}  // namespace ordist
