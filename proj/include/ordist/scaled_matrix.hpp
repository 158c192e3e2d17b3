#pragma once

#include "ordist/distance_matrix.hpp"

#include <cstdint>
#include <vector>

namespace ordist {

/// Integer image of a distance matrix: every entry multiplied by the common denominator.
/// Comparisons of entries, and of sums of two entries, are exact. Entries are held as
/// 64-bit integers when they fit, otherwise as GMP integers.
class ScaledMatrix {
 public:
  explicit ScaledMatrix(const DistanceMatrix& d);

  std::size_t size() const { return n_; }

  /// Sign of D(a,b) - D(c,d).
  int compare(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const;
  bool less(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return compare(a, b, c, d) < 0;
  }
  /// Sign of D(a,b) + D(c,d) - D(e,f) - D(g,h).
  int sum_compare(std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t e,
                  std::size_t f, std::size_t g, std::size_t h) const;
  bool is_positive(std::size_t a, std::size_t b) const;

 private:
  std::size_t n_;
  bool small_ = true;
  std::vector<std::int64_t> small_entries_;
  std::vector<mpz_class> big_entries_;
};

}  // namespace ordist
