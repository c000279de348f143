#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace trilink {

using BigInt = mpz_class;
using Rational = mpq_class;

template <std::size_t N>
using VecQ = std::array<Rational, N>;
using Vec2 = VecQ<2>;
using Vec3 = VecQ<3>;
using Vec4 = VecQ<4>;

/// Always "p/q" (q = 1 included) so serialized coordinates are uniform.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "p/q" or "p"; the result is canonicalized. Throws FormatError.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

/// Decimal digit count of |z| (1 for zero).
std::size_t decimal_digits(const BigInt& z);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const BigInt& z) { return sgn(z); }

template <std::size_t N>
VecQ<N> operator-(const VecQ<N>& a, const VecQ<N>& b) {
  VecQ<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
  return r;
}

template <std::size_t N>
VecQ<N> operator+(const VecQ<N>& a, const VecQ<N>& b) {
  VecQ<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

template <std::size_t N>
VecQ<N> operator*(const Rational& s, const VecQ<N>& a) {
  VecQ<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = s * a[i];
  return r;
}

template <std::size_t N>
Rational dot(const VecQ<N>& a, const VecQ<N>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// z-component of the planar cross product.
inline Rational cross(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace trilink
