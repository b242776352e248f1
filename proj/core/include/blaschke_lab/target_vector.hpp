#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace blaschke_lab {

/// Interpolation targets, aligned index for index with a zero sequence.
class TargetVector {
 public:
  using value_type = std::complex<double>;

  TargetVector() = default;
  explicit TargetVector(std::vector<value_type> values) : values_(std::move(values)) {}
  TargetVector(std::initializer_list<value_type> values) : values_(values) {}
  static TargetVector zeros(std::size_t n) { return TargetVector(std::vector<value_type>(n)); }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  value_type operator[](std::size_t i) const noexcept { return values_[i]; }
  value_type& operator[](std::size_t i) noexcept { return values_[i]; }
  std::span<const value_type> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  double sup_norm() const noexcept {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
  }

  TargetVector& operator+=(const TargetVector& other) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
  }
  TargetVector& operator*=(value_type c) {
    for (auto& v : values_) v *= c;
    return *this;
  }
  friend TargetVector operator+(TargetVector a, const TargetVector& b) { return a += b; }
  friend TargetVector operator*(value_type c, TargetVector a) { return a *= c; }
  friend bool operator==(const TargetVector&, const TargetVector&) = default;

 private:
  std::vector<value_type> values_;
};

}  // namespace blaschke_lab
