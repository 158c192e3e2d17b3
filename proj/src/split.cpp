#include "ordist/split.hpp"

#include <stdexcept>

namespace ordist {

ElementSet make_set(std::size_t n, std::initializer_list<Element> elements) {
  return make_set(n, std::vector<Element>(elements));
}

ElementSet make_set(std::size_t n, const std::vector<Element>& elements) {
  ElementSet s(n);
  for (Element e : elements) {
    if (e >= n) throw std::out_of_range("element index out of range");
    s.set(e);
  }
  return s;
}

std::vector<Element> elements_of(const ElementSet& set) {
  std::vector<Element> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) out.push_back(i);
  return out;
}

Split::Split(ElementSet side) : side_(std::move(side)) {
  if (side_.size() < 2) throw std::invalid_argument("splits need at least two elements");
  if (side_.none() || side_.all()) throw std::invalid_argument("split part must be non-empty");
  if (side_.test(0)) side_.flip();
}

Split::Split(std::size_t n, std::initializer_list<Element> side) : Split(make_set(n, side)) {}
Split::Split(std::size_t n, const std::vector<Element>& side) : Split(make_set(n, side)) {}

std::size_t Split::min_part_size() const {
  const std::size_t k = side_.count();
  return std::min(k, side_.size() - k);
}

std::strong_ordering Split::operator<=>(const Split& other) const {
  if (auto c = side_.size() <=> other.side_.size(); c != 0) return c;
  if (auto c = side_.count() <=> other.side_.count(); c != 0) return c;
  auto a = side_.find_first();
  auto b = other.side_.find_first();
  while (a != ElementSet::npos && b != ElementSet::npos) {
    if (a != b) return a <=> b;
    a = side_.find_next(a);
    b = other.side_.find_next(b);
  }
  return std::strong_ordering::equal;
}

std::string Split::to_string(const GroundSet& ground) const {
  auto render = [&](const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    for (Element e : elements_of(s)) {
      if (!first) out += ',';
      out += ground.label(e);
      first = false;
    }
    return out + "}";
  };
  return render(side_) + "|" + render(other_side());
}

}  // namespace ordist
