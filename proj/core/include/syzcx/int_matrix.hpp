#pragma once

#include <cstddef>
#include <vector>

#include "syzcx/polynomial.hpp"

namespace syzcx {

/// Square big-integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> a_;
};

/// Fraction-free Gaussian elimination (Bareiss).
BigInt bareiss_determinant(IntMatrix m);

}  // namespace syzcx
