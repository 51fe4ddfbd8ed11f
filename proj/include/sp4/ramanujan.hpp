#pragma once

#include "sp4/common.hpp"

#include <cstdint>

namespace sp4 {

// The generalized Ramanujan sum R_{v1,v12}(n1,n2): the exponential sum
// e(n1 v2/v1 + n2 v14/v12) over the residue data of the long Bruhat cell at
// fixed moduli (v1, v12) — v2, v3, v4 mod v1 and v13, v14 mod v12 subject to
// the linear relation v1 v13 + v2 v14 - v4 v12 = 0 (read as a congruence
// mod v1*v12 with the canonical lift of v13 making it exact), integrality of
// the two dependent coordinates v23, v34, and the primitivity conditions
// gcd(v1, v2, v3, v4) = 1, gcd(v12, v13, v14, v23, v34) = 1. Specializes to
// the classical Ramanujan sum c_q(n) when either modulus is 1. The value is
// real up to roundoff; it is returned as a complex number so the test layer
// can assert that. Throws budget_exceeded when the residue enumeration would
// exceed `budget` tuples.
cx R_bruteforce(std::int64_t v1, std::int64_t v12, std::int64_t n1,
                std::int64_t n2, double budget = 1e8);

// Divisor aggregate r_{v1,v12}(n1,n2) = sum of R_{u1,u12}(n1,n2) over
// u1 | v1, u12 | v12. Multiplicative in (v1, v12) across coprime splittings.
cx r_sum(std::int64_t v1, std::int64_t v12, std::int64_t n1, std::int64_t n2,
         double budget = 1e8);

// |S(p^w1, p^w12, p^w2, p^w14)|: the number of (v3, v4 mod p^w1,
// v13 mod p^w12) satisfying the linear relation and the two divisibility
// conditions v1 | v2 v13 - v3 v12, v1 | v3 v14 - v4 v13 at v2 = p^w2,
// v14 = p^w14 (the coprimality-free local count appearing inside r_sum).
// Requires 0 <= w2 <= w1 and 0 <= w14 <= w12 (the normalization under which
// the closed case distinction is stated). bruteforce enumerates; closed
// implements the case tree. They agree exactly (enforced by tests over
// p in {2,3,5,7}, exponents <= 4).
std::int64_t local_count_bruteforce(std::int64_t p, int w1, int w12, int w2,
                                    int w14);
std::int64_t local_count_closed(std::int64_t p, int w1, int w12, int w2,
                                int w14);

// r_{p^w1, p^w12}(p^e1, p^e2) assembled from the closed local counts and the
// closed form of the order-restricted character sums: the fast local path
// used to validate the Dirichlet-series factorization at large prime powers
// where direct enumeration is infeasible. Exact in exact arithmetic;
// returned as double (values are integers well below 2^53 for the ranges
// used here).
double r_local(std::int64_t p, int w1, int w12, int e1, int e2);

// Symplectic Schur function Sp_{l1,l2}(x1,x2), l1 >= l2 >= 0: the character
// of the rank-two symplectic irreducible with highest weight (l1, l2),
// evaluated through its exact Laurent-polynomial expansion (valid at every
// nonzero (x1, x2), including the singular locus of the determinant ratio).
cx symplectic_schur(int l1, int l2, cx x1, cx x2);

// The defining 2x2 determinant ratio, used as an independent cross-check of
// the expansion. Throws std::domain_error when the denominator vanishes.
cx symplectic_schur_ratio(int l1, int l2, cx x1, cx x2);

// sigma_{s1,s2}(n1,n2): multiplicative extension of
//   p^((e1+e2) s1 + e1 s2) * Sp_{e1+e2, e1}(p^s1, p^s2)
// over the joint prime factorization of n1, n2 >= 1.
double sigma_pair(double s1, double s2, std::int64_t n1, std::int64_t n2);

// Closed form of the Dirichlet series
//   sum_{v1,v12 >= 1} v1^(-nu1) v12^(-nu2) R_{v1,v12}(n1,n2),
// branching on the vanishing pattern of (n1, n2); depends on n1, n2 only
// through |n1|, |n2|. Throws std::domain_error when any zeta argument it
// needs lies within pole_eps of the pole at 1.
double dirichlet_closed(double nu1, double nu2, std::int64_t n1,
                        std::int64_t n2, double pole_eps = 1e-8);

// Truncated partial sum of the same series over v1, v12 <= N, evaluated
// from R_bruteforce with compensated accumulation in ascending (v1, v12)
// order. The tail is the caller's responsibility.
cx dirichlet_truncated(double nu1, double nu2, std::int64_t n1,
                       std::int64_t n2, std::int64_t N, double budget = 1e8);

} // namespace sp4
