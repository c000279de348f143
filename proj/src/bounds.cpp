#include "trilink/bounds.hpp"

#include <algorithm>

#include "trilink/error.hpp"

namespace trilink {

namespace {

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

unsigned long sq(long n) { return static_cast<unsigned long>(n) * static_cast<unsigned long>(n); }

}  // namespace

BigInt Power::expand() const {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::polytopal: return "polytopal";
    case Certificate::shelling: return "shelling";
    case Certificate::straight_line: return "straight_line";
    case Certificate::none: return "none";
  }
  return "?";
}

Certificate parse_certificate(const std::string& s) {
  for (Certificate c : {Certificate::polytopal, Certificate::shelling, Certificate::straight_line, Certificate::none})
    if (to_string(c) == s) return c;
  throw FormatError("unknown certificate '" + s + "'");
}

PInterval p_interval(long n, Certificate c) {
  if (n < 5) throw Error("a simplicial 3-sphere has at least 5 tetrahedra, got n = " + std::to_string(n));
  switch (c) {
    case Certificate::polytopal: return {n, n};
    case Certificate::shelling: return {n, BigInt(7) * n};
    default: return {n, pow2(200 * sq(n)) - 1};
  }
}

BigInt expansion_bound(const BigInt& p) { return 512 * p * p + 869 * p + 376; }

BigInt cr_bound_from_p(const BigInt& k, const BigInt& p_hi) {
  if (k < 3) throw Error("a link needs at least 3 edges");
  BigInt inner = k + expansion_bound(p_hi);
  return inner * inner;
}

BigInt shellable_inner(long n) {
  BigInt m = n;
  return 25088 * m * m + 6085 * m + 376;
}

bool shellable_display_holds(long n) {
  BigInt inner = shellable_inner(n);
  BigInt m = n;
  BigInt rhs = BigInt(1000000000) * m * m * m * m;
  return inner * inner < rhs;
}

bool general_display_holds(long n) {
  const unsigned long n2 = sq(n);
  BigInt inner = 512 * pow2(400 * n2) + 869 * pow2(200 * n2) + 2 * BigInt(n) + 376;
  return inner * inner < pow2(810 * n2);
}

CrBounds cr_bounds_all(long n, long k, std::optional<BigInt> p_hi, long max_expand_n) {
  if (n < 5) throw Error("n must be at least 5, got " + std::to_string(n));
  if (k < 3) throw Error("k must be at least 3, got " + std::to_string(k));
  if (k > 2 * n)
    throw Error("k = " + std::to_string(k) + " exceeds 2n = " + std::to_string(2 * n) +
                ": a triangulation with n tetrahedra has at most 2n edges");
  CrBounds b;
  BigInt m = n;
  b.thm_1_1_1 = 4 * m * m;
  b.thm_1_1_2 = BigInt(1000000000) * m * m * m * m;
  b.thm_1_1_3 = Power{2, 810 * sq(n)};
  b.thm_3_2 = cr_bound_from_p(k, p_hi ? *p_hi : p_interval(n, Certificate::none).hi);
  b.shellable_display = shellable_display_holds(n);
  if (n <= max_expand_n) b.general_display = general_display_holds(n);
  return b;
}

DInterval d_interval(long n, const PInterval& p) {
  if (n < 5) throw Error("n must be at least 5, got " + std::to_string(n));
  Rational lo = Rational(p.lo, 3 * BigInt(n)) - Rational(5, 3) - n;
  lo.canonicalize();
  return {lo, expansion_bound(p.hi)};
}

BoundReport report(const Triangulation& t, const EdgeLink& l, const Evidence& ev) {
  auto v = validate(t);
  if (!v.valid())
    throw Error("triangulation is not a closed 3-manifold: " +
                (v.failures.empty() ? std::string("invalid") : v.failures.front().message));
  EdgeLink checked = check_link(t, l.components);
  if (checked != l) throw Error("link is not in canonical form");

  BoundReport r;
  r.n = static_cast<long>(t.size());
  r.k = static_cast<long>(l.edge_count());

  if (ev.coords4) {
    if (auto why = check_polytopal_witness(t, *ev.coords4); !why.empty())
      throw Error("4D coordinates fail the polytopal witness check: " + why);
    r.verified.push_back(Certificate::polytopal);
  }
  if (ev.shelling) {
    auto s = verify_shelling(t, *ev.shelling);
    if (!s.ok) throw Error("shelling order fails verification: " + s.message);
    r.verified.push_back(Certificate::shelling);
  }
  if (ev.realization) {
    if (ev.realization->host != t) throw Error("realization belongs to a different triangulation");
    auto e = verify_embedding(*ev.realization);
    if (!e.ok) throw Error("realization is not an embedding: " + e.message);
    r.verified.push_back(Certificate::straight_line);
  }
  auto has = [&](Certificate c) { return std::find(r.verified.begin(), r.verified.end(), c) != r.verified.end(); };
  r.certificate = has(Certificate::polytopal)       ? Certificate::polytopal
                  : has(Certificate::shelling)      ? Certificate::shelling
                  : has(Certificate::straight_line) ? Certificate::straight_line
                                                    : Certificate::none;

  r.s3_assumed = !has(Certificate::polytopal);
  r.p = p_interval(r.n, r.certificate);
  r.d = d_interval(r.n, r.p);
  r.cr = cr_bounds_all(r.n, r.k, r.p.hi);

  const bool geometric = has(Certificate::polytopal) || has(Certificate::straight_line);
  const bool shellable = has(Certificate::polytopal) || has(Certificate::shelling);
  if (geometric) r.applicable.push_back("thm_1_1_1");
  if (shellable) r.applicable.push_back("thm_1_1_2");
  r.applicable.push_back("thm_1_1_3");
  if (shellable) r.applicable.push_back("thm_3_2");

  if (ev.diagram) {
    if (ev.diagram->components != l.components) throw Error("diagram was drawn for a different link");
    const long c = static_cast<long>(crossing_count(*ev.diagram));
    r.achieved = c;
    BigInt ach = c;
    for (const auto& key : r.applicable) {
      bool below = key == "thm_1_1_1"   ? ach < r.cr.thm_1_1_1
                   : key == "thm_1_1_2" ? ach < r.cr.thm_1_1_2
                   : key == "thm_3_2"   ? ach < r.cr.thm_3_2
                                        : ach == 0 || mpz_sizeinbase(ach.get_mpz_t(), 2) <= r.cr.thm_1_1_3.exponent;
      if (!below) throw Error("achieved crossing count " + std::to_string(c) + " is not below " + key);
    }
  }
  return r;
}

}  // namespace trilink
