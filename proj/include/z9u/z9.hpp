#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace z9u {

/// Residue arithmetic modulo 9. The value is always kept in {0..8}.
///
/// Z9 = Z/9Z is a chain ring with maximal ideal (3); its units are the
/// residues prime to 3 and every nonzero element is unit * 3^v with
/// v in {0,1}.
class Z9 {
 public:
  constexpr Z9() = default;
  constexpr Z9(int v) : v_(static_cast<uint8_t>(((v % 9) + 9) % 9)) {}

  constexpr uint8_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool is_unit() const { return v_ % 3 != 0; }

  /// 3-adic valuation with 2 standing in for v(0) = infinity.
  constexpr int valuation() const { return v_ == 0 ? 2 : (v_ % 3 == 0 ? 1 : 0); }

  constexpr Z9 inverse() const {
    constexpr uint8_t inv[9] = {0, 1, 5, 0, 7, 2, 0, 4, 8};
    if (!is_unit()) throw std::domain_error("Z9::inverse: not a unit");
    return from_raw(inv[v_]);
  }

  friend constexpr Z9 operator+(Z9 a, Z9 b) { return from_raw(static_cast<uint8_t>((a.v_ + b.v_) % 9)); }
  friend constexpr Z9 operator-(Z9 a, Z9 b) { return from_raw(static_cast<uint8_t>((a.v_ + 9 - b.v_) % 9)); }
  friend constexpr Z9 operator*(Z9 a, Z9 b) { return from_raw(static_cast<uint8_t>((a.v_ * b.v_) % 9)); }
  constexpr Z9 operator-() const { return from_raw(static_cast<uint8_t>((9 - v_) % 9)); }

  Z9& operator+=(Z9 o) { return *this = *this + o; }
  Z9& operator-=(Z9 o) { return *this = *this - o; }
  Z9& operator*=(Z9 o) { return *this = *this * o; }

  friend constexpr bool operator==(Z9 a, Z9 b) { return a.v_ == b.v_; }
  friend constexpr bool operator<(Z9 a, Z9 b) { return a.v_ < b.v_; }

 private:
  static constexpr Z9 from_raw(uint8_t v) {
    Z9 z;
    z.v_ = v;
    return z;
  }
  uint8_t v_ = 0;
};

using Z9Vec = std::vector<Z9>;

inline void add_in_place(Z9Vec& dst, std::span<const Z9> src) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
}

inline void sub_in_place(Z9Vec& dst, std::span<const Z9> src) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] -= src[i];
}

inline void add_scaled_in_place(Z9Vec& dst, Z9 s, std::span<const Z9> src) {
  if (s.is_zero()) return;
  for (size_t i = 0; i < dst.size(); ++i) dst[i] += s * src[i];
}

inline Z9 dot(std::span<const Z9> a, std::span<const Z9> b) {
  Z9 acc;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline int hamming_weight(std::span<const Z9> v) {
  int w = 0;
  for (Z9 x : v)
    if (!x.is_zero()) ++w;
  return w;
}

inline bool is_zero_vector(std::span<const Z9> v) {
  for (Z9 x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Comma-separated digit form, e.g. "1,2,5".
std::string to_digits(std::span<const Z9> v);
Z9Vec parse_digits(const std::string& text);

}  // namespace z9u
