#pragma once

#include <array>
#include <span>

#include "z9u/relement.hpp"
#include "z9u/z9.hpp"

namespace z9u {

/// A 2x2 matrix A over Z9 defining the Gray map r = ua+(1-u)b -> (a,b)A.
///
/// Validated on construction: A must be invertible and satisfy
/// A*A^t = lambda*I with lambda a unit of Z9. Invalid matrices are rejected
/// with std::invalid_argument.
class GrayMatrix {
 public:
  GrayMatrix(Z9 a00, Z9 a01, Z9 a10, Z9 a11);

  Z9 at(int r, int c) const { return m_[r][c]; }
  Z9 lambda() const { return lambda_; }

  friend bool operator==(const GrayMatrix& x, const GrayMatrix& y) {
    return x.m_ == y.m_;
  }

 private:
  std::array<std::array<Z9, 2>, 2> m_;
  Z9 lambda_;
};

/// The matrix [[1,1],[-1,1]], for which A*A^t = 2I.
const GrayMatrix& default_gray_matrix();

inline std::array<Z9, 2> gray_element(RElement x, const GrayMatrix& A) {
  return {x.a() * A.at(0, 0) + x.b() * A.at(1, 0), x.a() * A.at(0, 1) + x.b() * A.at(1, 1)};
}

/// Lee weight of an element: Hamming weight of its Gray image, in {0,1,2}.
inline int lee_weight(RElement x, const GrayMatrix& A) {
  auto g = gray_element(x, A);
  return (g[0].is_zero() ? 0 : 1) + (g[1].is_zero() ? 0 : 1);
}

/// Gray image of a vector, interleaved: positions 2i and 2i+1 hold the two
/// coordinates of c_i * A. The interleaved layout is the fixed contract used
/// by every downstream comparison.
Z9Vec gray_vector(std::span<const RElement> v, const GrayMatrix& A);

inline int lee_weight(std::span<const RElement> v, const GrayMatrix& A) {
  int w = 0;
  for (RElement x : v) w += lee_weight(x, A);
  return w;
}

}  // namespace z9u
