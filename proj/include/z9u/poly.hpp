#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "z9u/relement.hpp"
#include "z9u/z9.hpp"

namespace z9u {

/// Polynomial over Z9, coefficients stored constant-first and trimmed.
///
/// An optional modulus n puts the polynomial in Z9[X]/(X^n - 1): products
/// fold exponents mod n and the stored degree stays below n. The modulus is
/// arithmetic context only; equality compares coefficient values.
class PolyZ9 {
 public:
  PolyZ9() = default;
  explicit PolyZ9(std::vector<Z9> coeffs, std::optional<uint32_t> mod_n = std::nullopt);

  static PolyZ9 zero(std::optional<uint32_t> mod_n = std::nullopt) { return PolyZ9({}, mod_n); }
  static PolyZ9 one(std::optional<uint32_t> mod_n = std::nullopt) { return PolyZ9({Z9(1)}, mod_n); }
  static PolyZ9 x(std::optional<uint32_t> mod_n = std::nullopt) { return PolyZ9({Z9(0), Z9(1)}, mod_n); }
  static PolyZ9 xn_minus_1(uint32_t n);
  /// Monomial c * X^e.
  static PolyZ9 monomial(Z9 c, uint32_t e, std::optional<uint32_t> mod_n = std::nullopt);

  /// Parses the "[c0,c1,...]" coefficient-list text form.
  static PolyZ9 from_string(const std::string& text, std::optional<uint32_t> mod_n = std::nullopt);
  std::string to_string() const;

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Z9 coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Z9(0); }
  Z9 leading() const { return coeffs_.empty() ? Z9(0) : coeffs_.back(); }
  Z9 constant() const { return coeff(0); }
  bool is_monic() const { return leading() == Z9(1); }
  const std::vector<Z9>& coefficients() const { return coeffs_; }
  std::vector<Z9> coefficients_padded(uint32_t n) const;

  std::optional<uint32_t> modulus() const { return mod_n_; }
  PolyZ9 with_modulus(uint32_t n) const;
  PolyZ9 without_modulus() const { return PolyZ9(coeffs_); }

  Z9 eval(Z9 x) const;
  PolyZ9 scaled(Z9 s) const;
  /// Scales by the inverse of the leading coefficient; requires it to be a unit.
  PolyZ9 monic() const;
  PolyZ9 reduced_mod_xn_minus_1(uint32_t n) const;

  friend PolyZ9 operator+(const PolyZ9& f, const PolyZ9& g);
  friend PolyZ9 operator-(const PolyZ9& f, const PolyZ9& g);
  friend PolyZ9 operator*(const PolyZ9& f, const PolyZ9& g);
  PolyZ9 operator-() const { return scaled(Z9(-1)); }

  /// Value equality on (reduced) coefficients; modulus is context, not value.
  friend bool operator==(const PolyZ9& f, const PolyZ9& g) { return f.coeffs_ == g.coeffs_; }
  friend bool operator<(const PolyZ9& f, const PolyZ9& g);

  /// Euclidean division; requires the leading coefficient of b to be a unit.
  static std::pair<PolyZ9, PolyZ9> divmod(const PolyZ9& a, const PolyZ9& b);
  /// True when b divides a exactly (both context-free).
  static bool divides(const PolyZ9& b, const PolyZ9& a);

  /// Monic normalization of X^deg(f) * f(1/X). Requires a unit constant term,
  /// which makes the normalization well defined and resolves the sign choice.
  PolyZ9 reciprocal() const;

  /// Coefficient at exponent i moves to exponent a*i mod n. Requires a set
  /// modulus and gcd(a, n) = 1, otherwise the map is not a permutation.
  PolyZ9 multiplier(uint32_t a) const;

 private:
  void trim();
  std::vector<Z9> coeffs_;
  std::optional<uint32_t> mod_n_;
};

/// Polynomial over R as a CRT pair of Z9 polynomials (u-part, (1-u)-part);
/// all arithmetic is componentwise.
struct PolyR {
  PolyZ9 a;  // coefficient polynomial of u
  PolyZ9 b;  // coefficient polynomial of 1-u

  friend PolyR operator+(const PolyR& f, const PolyR& g) { return {f.a + g.a, f.b + g.b}; }
  friend PolyR operator-(const PolyR& f, const PolyR& g) { return {f.a - g.a, f.b - g.b}; }
  friend PolyR operator*(const PolyR& f, const PolyR& g) { return {f.a * g.a, f.b * g.b}; }
  friend bool operator==(const PolyR& f, const PolyR& g) { return f.a == g.a && f.b == g.b; }

  PolyR multiplier(uint32_t m) const { return {a.multiplier(m), b.multiplier(m)}; }
  RElement coeff(size_t i) const { return {a.coeff(i), b.coeff(i)}; }
  std::vector<RElement> coefficients_padded(uint32_t n) const;
};

inline constexpr uint64_t kDefaultFactorSeed = 0x5eedc0de11ull;

/// Factors X^n - 1 over Z9 into monic basic irreducible factors: the
/// factorization is computed over Z3 (distinct-degree, then equal-degree
/// splitting driven by a self-contained deterministic random stream) and
/// lifted to Z9 by one Newton step. Output is sorted by degree, then by
/// coefficient sequence, and verified by multiplication.
///
/// Requires gcd(n, 3) = 1; other n are rejected with std::invalid_argument.
std::vector<PolyZ9> factor_xn_minus_1(uint32_t n, uint64_t seed = kDefaultFactorSeed);

/// For pairwise coprime (mod 3) monic factors with product X^n - 1, returns
/// the idempotents e_i of Z9[X]/(X^n - 1) with e_i = 1 mod f_i and
/// e_i = 0 mod f_j for j != i. Their sum is 1 and e_i * e_j = 0 for i != j.
std::vector<PolyZ9> crt_idempotents(const std::vector<PolyZ9>& factors, uint32_t n);

/// Quadratic residues and non-residues for a prime p = +-1 (mod 12).
struct QRContext {
  uint32_t p = 0;
  std::vector<uint32_t> residues;      // Q_p, sorted
  std::vector<uint32_t> non_residues;  // N_p, sorted

  static QRContext create(uint32_t p);
  bool is_residue(uint32_t x) const;
};

bool is_prime(uint32_t n);

struct QNJPolys {
  PolyZ9 q;  // sum of X^i over Q_p
  PolyZ9 n;  // sum of X^i over N_p
  PolyZ9 j;  // 1 + Q + N, the all-ones polynomial
};

/// Builds Q(X), N(X), J(X) in Z9[X]/(X^p - 1).
QNJPolys qr_polynomials(const QRContext& ctx);

}  // namespace z9u
