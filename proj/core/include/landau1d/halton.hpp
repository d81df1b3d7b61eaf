#pragma once

#include <cstdint>

namespace landau1d {

/// Radical-inverse (van der Corput) value of `index` in the given base.
inline double radical_inverse(std::uint64_t index, std::uint32_t base) {
  double inv_base = 1.0 / base;
  double scale = inv_base;
  double value = 0.0;
  while (index > 0) {
    value += static_cast<double>(index % base) * scale;
    index /= base;
    scale *= inv_base;
  }
  return value;
}

/// Deterministic low-discrepancy point stream. `seed` offsets the start index,
/// so two scans with the same seed enumerate identical samples.
class HaltonSequence {
 public:
  explicit HaltonSequence(std::uint64_t seed = 0) : index_(seed + 1) {}

  /// Next point of the base-2 sequence mapped to [lo, hi].
  double next1d(double lo, double hi) {
    double u = radical_inverse(index_++, 2);
    return lo + (hi - lo) * u;
  }

  /// Next point of the (base-2, base-3) sequence mapped to the square.
  void next2d(double lo, double hi, double* x, double* y) {
    *x = lo + (hi - lo) * radical_inverse(index_, 2);
    *y = lo + (hi - lo) * radical_inverse(index_, 3);
    ++index_;
  }

  std::uint64_t index() const { return index_; }

 private:
  std::uint64_t index_;
};

}  // namespace landau1d
