#pragma once

#include "folia/binform.hpp" // UPoly helpers
#include "folia/ideal.hpp"

#include <optional>

namespace folia {

// Dimension, degree, Hilbert polynomial and arithmetic genus of a
// homogeneous ideal (as a projective scheme). dim_proj = -1 means empty.
// p_a is present only for curves (dim_proj == 1), as 1 - P(0).
struct HilbertData {
    int dim_proj = -1;
    long degree = 0;
    UPoly hilbert_poly; // coefficients in m, exact rationals
    std::optional<long> p_a;

    Rat hp_eval(const Rat& m) const { return ueval(hilbert_poly, m); }
};

// Requires a homogeneous ideal, saturated by the irrelevant ideal for the
// geometric readings to be exact; set saturate_first to do that here.
HilbertData hilbert_data(const Ideal& I, bool saturate_first = false,
                         const GBConfig& cfg = {});

// Hilbert function values dim_k (R/I)_m for m = 0..upto, computed from the
// Hilbert series of the lead-term ideal (grevlex).
std::vector<long> hilbert_function_prefix(const Ideal& I, int upto,
                                          const GBConfig& cfg = {});

// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of R/I for a monomial
// ideal given by lead monomials.
UPoly hilbert_numerator(std::vector<Mono> leads, size_t nvars);

// k-vector-space dimension of R/I for a zero-dimensional affine ideal;
// errors with positive_dimensional otherwise.
long zero_dim_degree(const Ideal& I, const GBConfig& cfg = {});

// Monomials outside the lead ideal (finite case); used by multiplicity
// counting as well.
long count_standard_monomials(const std::vector<Mono>& leads, size_t nvars);
bool lead_ideal_zero_dimensional(const std::vector<Mono>& leads, size_t nvars);

} // namespace folia
