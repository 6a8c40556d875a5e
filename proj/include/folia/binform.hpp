#pragma once

#include "folia/poly.hpp"

#include <utility>
#include <vector>

namespace folia {

// Binary forms are MPoly values in a 2-variable ring (s, t), homogeneous.
// Dense univariate polynomials (coefficient of degree i at index i) back
// the gcd and factorization routines.
using UPoly = std::vector<Rat>;

int udeg(const UPoly& f); // -1 for zero
UPoly unormalize(UPoly f);
UPoly uadd(const UPoly& a, const UPoly& b);
UPoly usub(const UPoly& a, const UPoly& b);
UPoly umul(const UPoly& a, const UPoly& b);
UPoly umonic(const UPoly& f);
Rat ueval(const UPoly& f, const Rat& x);
UPoly uderiv(const UPoly& f);
// Quotient and remainder; exact division asserts zero remainder.
std::pair<UPoly, UPoly> udivmod(const UPoly& a, const UPoly& b);
UPoly udiv_exact(const UPoly& a, const UPoly& b);

// Monic gcd via the subresultant polynomial remainder sequence on
// denominator-cleared inputs.
UPoly ugcd(const UPoly& a, const UPoly& b);

// Yun squarefree decomposition: returns (squarefree factor, multiplicity)
// pairs with multiplicities strictly increasing; product of f_i^{m_i}
// equals the monic part of f.
std::vector<std::pair<UPoly, int>> usquarefree(const UPoly& f);

// All rational roots with multiplicities, plus the (monic) rootless
// cofactor. `enumerable` is false when the divisor enumeration bound was
// exceeded and the root list may be incomplete.
struct RootSplit {
    std::vector<std::pair<Rat, int>> roots;
    UPoly cofactor;
    bool enumerable = true;
};
RootSplit urational_roots(const UPoly& f);

// ---- binary forms ----

bool is_binary_form(const MPoly& p); // 2 variables, homogeneous
// Dense coefficients c[i] of s^i t^(d-i).
UPoly binform_dehomogenize(const MPoly& p);
MPoly binform_homogenize(const RingPtr& ring, const UPoly& f, int total_deg);

// Monic greatest common divisor of one or more nonzero binary forms of a
// common ring. Dehomogenizes the core part (monomial content stripped),
// runs the subresultant gcd, and recombines with min s/t powers.
MPoly gcd_binary(const std::vector<MPoly>& forms);
MPoly gcd_binary(const MPoly& a, const MPoly& b,
                 const std::vector<MPoly>& rest = {});

// Vanishing order of the binary form at the point [s0 : t0] of P^1.
int binform_order_at(const MPoly& f, const Rat& s0, const Rat& t0);

// Coprime factorization of a binary form: rational points of P^1 come out
// as (point, order) pairs, the rest as squarefree binary-form factors with
// order and an irreducibility certificate (degree <= 3 without rational
// roots is certifiably irreducible over Q).
struct BinFactor {
    bool is_point = false;
    Rat s0, t0;          // the point [s0 : t0] when is_point
    MPoly factor;        // the factor itself (monic)
    int order = 0;
    bool certified_irreducible = true;
};
std::vector<BinFactor> binform_factor(const MPoly& f);

} // namespace folia
