#pragma once

#include "folia/forms.hpp"
#include "folia/hilbert.hpp"
#include "folia/ideal.hpp"

namespace folia {

// A validated codimension-one foliation on P^3: a grade-1 form in the four
// homogeneous coordinates whose components are homogeneous of degree d+1,
// contracted to zero by the Euler field, integrable, and whose singular
// scheme has codimension >= 2.
class FoliationP3 {
  public:
    const PolyForm& omega() const { return omega_; }
    int degree() const { return degree_; }
    const RingPtr& ring() const { return omega_.ring(); }

    // The four coefficient polynomials A_i (dx_i components).
    std::vector<MPoly> coefficients() const;
    Ideal coefficient_ideal() const;

  private:
    friend FoliationP3 validate_foliation(const PolyForm&, int, const GBConfig&);
    FoliationP3(PolyForm omega, int d) : omega_(std::move(omega)), degree_(d) {}

    PolyForm omega_;
    int degree_;
};

// Checks, in order: 4 variables and grade 1; homogeneous components of
// degree d+1; the Euler contraction i_R omega = 0; integrability
// omega ^ d(omega) = 0; and codimension >= 2 of the saturated singular
// scheme. Each failure carries its own error code.
FoliationP3 validate_foliation(const PolyForm& omega, int d,
                               const GBConfig& cfg = {});

// Dehomogenization x_chart = 1; the dx_chart component drops out. The
// result lives in the 3-variable ring of the remaining coordinate names.
PolyForm chart_restrict(const FoliationP3& F, size_t chart);
PolyForm chart_restrict_form(const PolyForm& omega, size_t chart);

// Inverse of chart_restrict up to a power of x_chart (used in tests).
PolyForm homogenize_form(const PolyForm& affine, size_t chart,
                         const RingPtr& proj_ring, int coeff_degree);

} // namespace folia
