#include "ordist/scaled_matrix.hpp"

namespace ordist {

namespace {

int sign(__int128 v) { return (v > 0) - (v < 0); }

}  // namespace

ScaledMatrix::ScaledMatrix(const DistanceMatrix& d) : n_(d.size()) {
  mpz_class common = 1;
  for (const auto& v : d.entries()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(),
                                            v.get_den_mpz_t());
  big_entries_.reserve(n_ * n_);
  // Entries stay below 2^61 so sums of four fit comfortably in 128 bits (and two in 64).
  const mpz_class bound = mpz_class(1) << 61;
  for (const auto& v : d.entries()) {
    mpz_class scaled = v.get_num() * (common / v.get_den());
    if (abs(scaled) >= bound) small_ = false;
    big_entries_.push_back(std::move(scaled));
  }
  if (small_) {
    small_entries_.reserve(n_ * n_);
    for (const auto& v : big_entries_) small_entries_.push_back(v.get_si());
    big_entries_.clear();
  }
}

int ScaledMatrix::compare(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
  if (small_) {
    const auto x = small_entries_[a * n_ + b];
    const auto y = small_entries_[c * n_ + d];
    return (x > y) - (x < y);
  }
  return cmp(big_entries_[a * n_ + b], big_entries_[c * n_ + d]);
}

int ScaledMatrix::sum_compare(std::size_t a, std::size_t b, std::size_t c, std::size_t d,
                              std::size_t e, std::size_t f, std::size_t g, std::size_t h) const {
  if (small_) {
    __int128 v = static_cast<__int128>(small_entries_[a * n_ + b]) + small_entries_[c * n_ + d] -
                 small_entries_[e * n_ + f] - small_entries_[g * n_ + h];
    return sign(v);
  }
  mpz_class v = big_entries_[a * n_ + b] + big_entries_[c * n_ + d] - big_entries_[e * n_ + f] -
                big_entries_[g * n_ + h];
  return sgn(v);
}

bool ScaledMatrix::is_positive(std::size_t a, std::size_t b) const {
  if (small_) return small_entries_[a * n_ + b] > 0;
  return sgn(big_entries_[a * n_ + b]) > 0;
}

}  // namespace ordist
