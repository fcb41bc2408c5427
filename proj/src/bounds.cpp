#include "sdist/bounds.hpp"

#include "sdist/error.hpp"

namespace sdist {

Integer binom(long a, long b) {
  if (b < 0) return 0;
  if (a < 0) throw DomainError("binom(" + std::to_string(a) + ", " + std::to_string(b) + "): negative upper index");
  if (b > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

SubspaceDimensions subspace_dimensions(long n, long d) {
  if (n < 2) throw DomainError("dimension n must be >= 2, got " + std::to_string(n));
  if (d < 0) throw DomainError("degree d must be >= 0, got " + std::to_string(d));
  return {binom(n + d - 1, d) + binom(n + d - 2, d - 1), binom(n + d - 2, d) + binom(n + d - 3, d - 1)};
}

namespace {

Rational barg_musin_value(long n, long s) {
  Rational scale(Integer(n + 2 * s - 2), Integer(s));
  scale.canonicalize();
  Rational v = Rational(binom(n + s - 3, s - 2)) + Rational(binom(n + s - 4, s - 3)) +
               scale * Rational(binom(n + s - 3, s - 1));
  v.canonicalize();
  return v;
}

}  // namespace

BoundsReport compute_bounds(long n, long s) {
  if (n < 2) throw DomainError("dimension n must be >= 2, got " + std::to_string(n));
  if (s < 1) throw DomainError("number of distances s must be >= 1, got " + std::to_string(s));
  BoundsReport r;
  r.n = n;
  r.s = s;
  r.gerzon = binom(n + 1, 2);
  r.dgs = subspace_dimensions(n, s).up_to;
  r.hegedus = binom(n + s - 1, s);
  r.barg_musin = barg_musin_value(n, s);
  r.dm = binom(n + s - 1, s) + binom(n + s - 4, s - 3);
  r.applicability_notes = {
      {"gerzon", "s = 2 with t_1 + t_2 >= 0 (equiangular sets in particular)"},
      {"dgs", "any spherical s-distance set"},
      {"hegedus", "s even and inner products of the form {+-a_1, ..., +-a_l}"},
      {"barg_musin", "s even and t_1 + ... + t_s >= 0"},
      {"dm", "t_1 + ... + t_s = 0"},
  };
  return r;
}

bool check_identities(long n, long s) {
  if (n < 2 || s < 1) return false;
  for (long r = 1; r <= n - 1; ++r)
    if (binom(n - 1, r - 1) + binom(n - 1, r) != binom(n, r)) return false;
  if (s >= 2) {
    Rational scale(Integer(n + 2 * s - 2), Integer(s));
    scale.canonicalize();
    Rational lhs = Rational(binom(n + s - 3, s - 2)) + scale * Rational(binom(n + s - 3, s - 1));
    if (lhs != Rational(binom(n + s - 1, s))) return false;
    const BoundsReport b = compute_bounds(n, s);
    if (Rational(b.dm) != b.barg_musin) return false;
  }
  return true;
}

}  // namespace sdist
