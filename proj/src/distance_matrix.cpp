#include "ordist/distance_matrix.hpp"

#include <stdexcept>

namespace ordist {

DistanceMatrix::DistanceMatrix(GroundSet ground, std::vector<Rational> entries)
    : ground_(std::move(ground)), entries_(std::move(entries)) {
  const std::size_t n = ground_.size();
  if (entries_.size() != n * n)
    throw std::invalid_argument("distance matrix needs n*n entries");
  for (auto& v : entries_) v.canonicalize();
  for (Element i = 0; i < n; ++i) {
    if ((*this)(i, i) != 0)
      throw std::invalid_argument("non-zero diagonal at '" + ground_.label(i) + "'");
    for (Element j = i + 1; j < n; ++j) {
      if ((*this)(i, j) != (*this)(j, i))
        throw std::invalid_argument("asymmetric entry at ('" + ground_.label(i) + "','" +
                                    ground_.label(j) + "')");
      if ((*this)(i, j) < 0)
        throw std::invalid_argument("negative entry at ('" + ground_.label(i) + "','" +
                                    ground_.label(j) + "')");
    }
  }
}

DistanceMatrix DistanceMatrix::zero(GroundSet ground) {
  const std::size_t n = ground.size();
  return DistanceMatrix(std::move(ground), std::vector<Rational>(n * n));
}

DistanceMatrix DistanceMatrix::from_pairs(GroundSet ground,
                                          const std::function<Rational(Element, Element)>& f) {
  const std::size_t n = ground.size();
  std::vector<Rational> entries(n * n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      entries[i * n + j] = f(i, j);
      entries[j * n + i] = entries[i * n + j];
    }
  }
  return DistanceMatrix(std::move(ground), std::move(entries));
}

const Rational& DistanceMatrix::at(Element i, Element j) const {
  if (i >= size() || j >= size()) throw std::out_of_range("distance matrix index out of range");
  return (*this)(i, j);
}

DistanceMatrix DistanceMatrix::restrict_to(std::span<const Element> elements) const {
  const std::size_t m = elements.size();
  std::vector<Rational> entries(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) entries[i * m + j] = at(elements[i], elements[j]);
  return DistanceMatrix(ground_.subset(elements), std::move(entries));
}

bool DistanceMatrix::is_zero() const {
  for (const auto& v : entries_)
    if (v != 0) return false;
  return true;
}

bool DistanceMatrix::satisfies_triangle_inequality() const {
  const std::size_t n = size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if ((*this)(x, z) > (*this)(x, y) + (*this)(y, z)) return false;
  return true;
}

DistanceMatrix operator+(const DistanceMatrix& a, const DistanceMatrix& b) {
  if (!(a.ground() == b.ground())) throw std::invalid_argument("ground set mismatch");
  std::vector<Rational> entries(a.entries().size());
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] = a.entries()[k] + b.entries()[k];
  return DistanceMatrix(a.ground(), std::move(entries));
}

DistanceMatrix operator*(const Rational& c, const DistanceMatrix& d) {
  std::vector<Rational> entries(d.entries().size());
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] = c * d.entries()[k];
  return DistanceMatrix(d.ground(), std::move(entries));
}

}  // namespace ordist
