#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "z9u/gray.hpp"
#include "z9u/relement.hpp"
#include "z9u/z9.hpp"

namespace z9u {

std::string to_digits(std::span<const Z9> v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += static_cast<char>('0' + v[i].value());
  }
  return s;
}

Z9Vec parse_digits(const std::string& text) {
  Z9Vec out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (v < 0 || v > 8) throw std::invalid_argument("parse_digits: digit out of range: " + tok);
    out.push_back(Z9(v));
  }
  return out;
}

std::string RElement::to_string() const {
  return std::to_string(a_.value()) + "," + std::to_string(b_.value());
}

RElement RElement::parse(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("RElement::parse: expected \"a,b\"");
  int a = std::stoi(text.substr(0, comma));
  int b = std::stoi(text.substr(comma + 1));
  if (a < 0 || a > 8 || b < 0 || b > 8)
    throw std::invalid_argument("RElement::parse: coordinate out of range in \"" + text + "\"");
  return RElement(Z9(a), Z9(b));
}

const char* to_string(IdealTag tag) {
  switch (tag) {
    case IdealTag::one: return "(1)";
    case IdealTag::u_plus_2: return "(u+2)";
    case IdealTag::u_plus_3: return "(u+3)";
    case IdealTag::u_minus_1: return "(u-1)";
    case IdealTag::three: return "(3)";
    case IdealTag::u: return "(u)";
    case IdealTag::three_u_minus_3: return "(3u-3)";
    case IdealTag::three_u: return "(3u)";
    case IdealTag::zero: return "(0)";
  }
  return "?";
}

RElement ideal_generator(IdealTag tag) {
  // CRT coordinates of each generator: u ~ (1,0), 1-u ~ (0,1).
  switch (tag) {
    case IdealTag::one: return {1, 1};
    case IdealTag::u_plus_2: return {3, 2};
    case IdealTag::u_plus_3: return {4, 3};
    case IdealTag::u_minus_1: return {0, 8};
    case IdealTag::three: return {3, 3};
    case IdealTag::u: return {1, 0};
    case IdealTag::three_u_minus_3: return {0, 6};
    case IdealTag::three_u: return {3, 0};
    case IdealTag::zero: return {0, 0};
  }
  return {0, 0};
}

std::vector<RElement> ideal_elements(RElement x) {
  std::vector<RElement> set;
  set.reserve(81);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) set.push_back(RElement(Z9(a), Z9(b)) * x);
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

namespace {

const std::array<std::pair<IdealTag, std::vector<RElement>>, 9>& ideal_table() {
  static const auto table = [] {
    std::array<std::pair<IdealTag, std::vector<RElement>>, 9> t;
    constexpr IdealTag tags[9] = {IdealTag::one,   IdealTag::u_plus_2,        IdealTag::u_plus_3,
                                  IdealTag::u_minus_1, IdealTag::three,       IdealTag::u,
                                  IdealTag::three_u_minus_3, IdealTag::three_u, IdealTag::zero};
    for (int i = 0; i < 9; ++i) t[i] = {tags[i], ideal_elements(ideal_generator(tags[i]))};
    return t;
  }();
  return table;
}

}  // namespace

IdealTag ideal_of(RElement x) {
  const auto elems = ideal_elements(x);
  for (const auto& [tag, set] : ideal_table())
    if (set == elems) return tag;
  throw std::logic_error("ideal_of: element set matches none of the nine ideals");
}

GrayMatrix::GrayMatrix(Z9 a00, Z9 a01, Z9 a10, Z9 a11) {
  m_ = {{{a00, a01}, {a10, a11}}};
  Z9 det = a00 * a11 - a01 * a10;
  if (!det.is_unit()) throw std::invalid_argument("GrayMatrix: determinant is not a unit of Z9");
  Z9 n0 = a00 * a00 + a01 * a01;
  Z9 n1 = a10 * a10 + a11 * a11;
  Z9 cross = a00 * a10 + a01 * a11;
  if (!(n0 == n1) || !cross.is_zero())
    throw std::invalid_argument("GrayMatrix: A*A^t is not a scalar multiple of I");
  if (!n0.is_unit()) throw std::invalid_argument("GrayMatrix: lambda is not a unit of Z9");
  lambda_ = n0;
}

const GrayMatrix& default_gray_matrix() {
  static const GrayMatrix A(1, 1, -1, 1);
  return A;
}

Z9Vec gray_vector(std::span<const RElement> v, const GrayMatrix& A) {
  Z9Vec out(2 * v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    auto g = gray_element(v[i], A);
    out[2 * i] = g[0];
    out[2 * i + 1] = g[1];
  }
  return out;
}

}  // namespace z9u
