#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trilink/complex.hpp"
#include "trilink/diagram.hpp"
#include "trilink/linkset.hpp"
#include "trilink/rational.hpp"
#include "trilink/realize.hpp"
#include "trilink/shelling.hpp"

namespace trilink {

/// base^exponent kept symbolic; expanded only on request.
struct Power {
  BigInt base;
  unsigned long exponent = 0;

  BigInt expand() const;
  std::size_t digits() const { return decimal_digits(expand()); }
  friend bool operator==(const Power&, const Power&) = default;
};

/// What licenses a bound. `straight_line` is a verified 3D embedding without
/// a 4D witness: it supports the projection argument but not p(T) = n.
enum class Certificate { polytopal, shelling, straight_line, none };

std::string to_string(Certificate c);
Certificate parse_certificate(const std::string& s);

struct PInterval {
  BigInt lo, hi;
  friend bool operator==(const PInterval&, const PInterval&) = default;
};

/// polytopal: [n, n]; shelling: [n, 7n]; otherwise [n, 2^(200 n²) − 1].
PInterval p_interval(long n, Certificate c);

/// (k + 512 p² + 869 p + 376)²
BigInt cr_bound_from_p(const BigInt& k, const BigInt& p_hi);

/// 512 p² + 869 p + 376, the expansion-count bound.
BigInt expansion_bound(const BigInt& p);

/// 25088 n² + 6085 n + 376, the inner polynomial for k = 2n, p = 7n.
BigInt shellable_inner(long n);

/// (25088 n² + 6085 n + 376)² < 10⁹ n⁴, exactly.
bool shellable_display_holds(long n);

/// (512·2^(400n²) + 869·2^(200n²) + 2n + 376)² < 2^(810n²), exactly.
bool general_display_holds(long n);

struct CrBounds {
  BigInt thm_1_1_1;  // 4n²
  BigInt thm_1_1_2;  // 10⁹ n⁴
  Power thm_1_1_3;   // 2^(810 n²)
  BigInt thm_3_2;    // (k + 512 p² + 869 p + 376)² at the given p_hi
  bool shellable_display = false;
  std::optional<bool> general_display;  // evaluated when n <= max_expand_n

  friend bool operator==(const CrBounds&, const CrBounds&) = default;
};

/// Throws Error when k > 2n or n < 5 or k < 3. Without `p_hi` the general
/// bound 2^(200 n²) − 1 is used for thm_3_2.
CrBounds cr_bounds_all(long n, long k, std::optional<BigInt> p_hi = std::nullopt, long max_expand_n = 8);

struct DInterval {
  Rational lo_exclusive;  // p_lo / (3n) − 5/3 − n
  BigInt hi;              // 512 p_hi² + 869 p_hi + 376
  friend bool operator==(const DInterval&, const DInterval&) = default;
};

DInterval d_interval(long n, const PInterval& p);

/// Optional evidence for report(); each present item is re-verified.
struct Evidence {
  std::optional<Coords4> coords4;
  std::optional<Realization3> realization;
  std::optional<ShellingOrder> shelling;
  std::optional<Diagram> diagram;
};

struct BoundReport {
  long n = 0;
  long k = 0;
  Certificate certificate = Certificate::none;
  std::vector<Certificate> verified;  // every certificate that checked out
  bool s3_assumed = true;             // combinatorial 3-manifold certified, S^3 assumed
  PInterval p;
  DInterval d;
  CrBounds cr;
  std::optional<long> achieved;
  std::vector<std::string> applicable;  // keys among thm_1_1_1, thm_1_1_2, thm_1_1_3, thm_3_2

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Assembles the bounds licensed by the evidence. Throws Error when the
/// triangulation or link is invalid, when evidence fails verification, or
/// when an achieved crossing count is not below an applicable bound.
BoundReport report(const Triangulation& t, const EdgeLink& l, const Evidence& evidence);

}  // namespace trilink
