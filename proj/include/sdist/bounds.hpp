#pragma once

#include <string>
#include <vector>

#include "sdist/rational.hpp"

namespace sdist {

// Binomial coefficient with the out-of-range convention used by every bound here:
// b < 0 gives 0 (checked first, whatever the sign of a), 0 <= a < b gives 0.
// Throws DomainError for b >= 0 and a < 0.
Integer binom(long a, long b);

struct SubspaceDimensions {
  Integer up_to;  // dim of polynomial functions of degree <= d on the sphere
  Integer exact;  // dim of the span of reduced monomials of degree exactly d
};

// Closed forms for the sizes of the reduced monomial bases. n >= 2, d >= 0.
SubspaceDimensions subspace_dimensions(long n, long d);

struct BoundNote {
  std::string bound;
  std::string condition;
};

struct BoundsReport {
  long n = 0;
  long s = 0;
  Integer gerzon;      // C(n+1, 2)
  Integer dgs;         // M_{<=s}(n)
  Integer hegedus;     // C(n+s-1, s)
  Rational barg_musin;
  Integer dm;          // C(n+s-1, s) + C(n+s-4, s-3), valid when the inner products sum to zero
  std::vector<BoundNote> applicability_notes;
};

BoundsReport compute_bounds(long n, long s);

// Pascal's rule for 1 <= r <= n-1, and for s >= 2 the identity
// C(n+s-3, s-2) + (n+2s-2)/s * C(n+s-3, s-1) == C(n+s-1, s) together with dm == barg_musin.
bool check_identities(long n, long s);

}  // namespace sdist
