#pragma once

#include "wedge/rational.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>

namespace wedge {

/// Arithmetic in GF(p). Elements are plain uint64 values in [0, p).
struct PrimeField {
  using Element = std::uint64_t;

  explicit PrimeField(std::uint32_t prime) : p(prime) {
    if (p < 2) throw std::invalid_argument("PrimeField: modulus must be >= 2");
  }

  std::uint32_t p;

  Element zero() const { return 0; }
  Element one() const { return 1 % p; }
  Element from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<Element>(r);
  }
  bool is_zero(Element a) const { return a == 0; }
  Element add(Element a, Element b) const { return (a + b) % p; }
  Element sub(Element a, Element b) const { return (a + p - b) % p; }
  Element neg(Element a) const { return a == 0 ? 0 : p - a; }
  Element mul(Element a, Element b) const { return (a * b) % p; }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    // Fermat; p is prime.
    Element result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
};

/// Arithmetic in Q via the exact Rational scalar.
struct RationalField {
  using Element = Rational;

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element from_int(long long v) const { return Rational(v); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const { return Rational(1) / a; }
};

template <class Field>
using FieldMatrix =
    Eigen::Matrix<typename Field::Element, Eigen::Dynamic, Eigen::Dynamic>;

/// Rank by in-place Gaussian elimination; exact for any field policy.
template <class Field>
long rank_in_place(const Field& F, FieldMatrix<Field>& M) {
  const Eigen::Index rows = M.rows(), cols = M.cols();
  long rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (!F.is_zero(M(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) M.row(pivot).swap(M.row(row));

    const auto inv_p = F.inv(M(row, col));
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      if (F.is_zero(M(r, col))) continue;
      const auto factor = F.mul(M(r, col), inv_p);
      M(r, col) = F.zero();
      for (Eigen::Index c = col + 1; c < cols; ++c) {
        if (F.is_zero(M(row, c))) continue;
        M(r, c) = F.sub(M(r, c), F.mul(factor, M(row, c)));
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

template <class Field>
long rank_of(const Field& F, FieldMatrix<Field> M) {
  return rank_in_place(F, M);
}

}  // namespace wedge
