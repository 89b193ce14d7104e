#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "z9u/z9.hpp"

namespace z9u {

/// Element of R = Z9 + uZ9 with u^2 = u, stored in CRT coordinates (a, b)
/// meaning u*a + (1-u)*b. Addition and multiplication are componentwise,
/// which is the whole point of this representation.
class RElement {
 public:
  constexpr RElement() = default;
  constexpr RElement(Z9 a, Z9 b) : a_(a), b_(b) {}

  /// Builds u*a + (1-u)*b from the standard form s + u*t.
  static constexpr RElement from_standard(Z9 s, Z9 t) { return RElement(s + t, s); }

  constexpr Z9 a() const { return a_; }
  constexpr Z9 b() const { return b_; }

  /// Standard form r = s + u*t with s = b and t = a - b.
  constexpr Z9 standard_s() const { return b_; }
  constexpr Z9 standard_t() const { return a_ - b_; }

  constexpr bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  constexpr bool is_unit() const { return a_.is_unit() && b_.is_unit(); }

  friend constexpr RElement operator+(RElement x, RElement y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend constexpr RElement operator-(RElement x, RElement y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend constexpr RElement operator*(RElement x, RElement y) { return {x.a_ * y.a_, x.b_ * y.b_}; }
  constexpr RElement operator-() const { return {-a_, -b_}; }
  RElement& operator+=(RElement o) { return *this = *this + o; }
  RElement& operator-=(RElement o) { return *this = *this - o; }
  RElement& operator*=(RElement o) { return *this = *this * o; }

  friend constexpr bool operator==(RElement x, RElement y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend constexpr bool operator<(RElement x, RElement y) {
    return x.a_ == y.a_ ? x.b_ < y.b_ : x.a_ < y.a_;
  }

  /// Text form "a,b" in CRT coordinates.
  std::string to_string() const;
  static RElement parse(const std::string& text);

 private:
  Z9 a_, b_;
};

inline constexpr RElement r_zero() { return {0, 0}; }
inline constexpr RElement r_one() { return {1, 1}; }
inline constexpr RElement r_u() { return {1, 0}; }
inline constexpr RElement r_one_minus_u() { return {0, 1}; }
inline constexpr RElement r_scalar(Z9 t) { return {t, t}; }

/// The nine ideals of R, tagged by a canonical generator.
enum class IdealTag : uint8_t {
  one,              // (1) = R
  u_plus_2,         // (u+2), maximal
  u_plus_3,         // (u+3), maximal
  u_minus_1,        // (u-1)
  three,            // (3)
  u,                // (u)
  three_u_minus_3,  // (3u-3)
  three_u,          // (3u)
  zero,             // (0)
};

const char* to_string(IdealTag tag);
RElement ideal_generator(IdealTag tag);

/// Classifies the principal ideal (x) by enumerating its <= 81 multiples and
/// matching the element set against the nine precomputed ideals.
IdealTag ideal_of(RElement x);

/// All elements of the ideal (x), sorted, without repetition.
std::vector<RElement> ideal_elements(RElement x);

using RVec = std::vector<RElement>;

inline RVec r_vec_sub(const RVec& x, const RVec& y) {
  RVec d(x.size());
  for (size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  return d;
}

inline RElement r_dot(const RVec& x, const RVec& y) {
  RElement acc;
  for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

}  // namespace z9u
