#include "folia/foliation.hpp"

#include "folia/error.hpp"

namespace folia {

std::vector<MPoly> FoliationP3::coefficients() const {
    std::vector<MPoly> out;
    for (size_t i = 0; i < 4; ++i)
        out.push_back(omega_.comp({static_cast<int>(i)}));
    return out;
}

Ideal FoliationP3::coefficient_ideal() const {
    return Ideal(ring(), coefficients());
}

FoliationP3 validate_foliation(const PolyForm& omega, int d, const GBConfig& cfg) {
    if (omega.grade() != 1 || omega.nvars() != 4)
        fail(Errc::arity_mismatch,
             "a foliation form has grade 1 in 4 homogeneous variables");
    if (d < 0)
        fail(Errc::degree_mismatch, "negative foliation degree");
    if (omega.is_zero())
        fail(Errc::non_homogeneous, "the zero form does not define a foliation");
    for (const auto& [t, p] : omega.comps())
        if (!p.is_homogeneous_of(d + 1))
            fail(Errc::non_homogeneous,
                 "coefficient of dx" + std::to_string(t[0]) +
                     " is not homogeneous of degree " + std::to_string(d + 1));

    MPoly euler = pair_form_field(omega, euler_field(omega.ring()));
    if (!euler.is_zero())
        fail(Errc::euler_fails,
             "Euler condition fails: i_R omega = " + euler.str());

    PolyForm integ = wedge(omega, ext_d(omega));
    if (!integ.is_zero())
        fail(Errc::not_integrable, "omega ^ d(omega) != 0");

    FoliationP3 F(omega, d);
    Ideal sing = saturation(F.coefficient_ideal(), irrelevant_ideal(omega.ring()), cfg);
    HilbertData hd = hilbert_data(sing, false, cfg);
    if (hd.dim_proj > 1)
        fail(Errc::codimension_one_part,
             "the singular scheme has a codimension-one part (dimension " +
                 std::to_string(hd.dim_proj) + ")");
    return F;
}

PolyForm chart_restrict_form(const PolyForm& omega, size_t chart) {
    if (omega.grade() != 1)
        fail(Errc::grade_overflow, "chart_restrict expects a grade-1 form");
    const RingPtr& ring = omega.ring();
    if (chart >= ring->size())
        fail(Errc::arity_mismatch, "chart index out of range");
    std::vector<std::string> names;
    for (size_t i = 0; i < ring->size(); ++i)
        if (i != chart)
            names.push_back(ring->vars[i]);
    RingPtr target = make_ring(std::move(names));
    PolyForm out(target, 1);
    int k = 0;
    for (size_t i = 0; i < ring->size(); ++i) {
        if (i == chart)
            continue;
        MPoly c = omega.comp({static_cast<int>(i)});
        if (!c.is_zero())
            out.add_comp({k}, dehomogenize(c, chart, target));
        ++k;
    }
    return out;
}

PolyForm chart_restrict(const FoliationP3& F, size_t chart) {
    if (chart >= 4)
        fail(Errc::arity_mismatch, "chart index out of range");
    return chart_restrict_form(F.omega(), chart);
}

PolyForm homogenize_form(const PolyForm& affine, size_t chart,
                         const RingPtr& proj_ring, int coeff_degree) {
    if (affine.grade() != 1)
        fail(Errc::grade_overflow, "homogenize_form expects a grade-1 form");
    const size_t n = proj_ring->size();
    PolyForm out(proj_ring, 1);
    // variable i of the affine ring maps to projective index (i or i+1)
    auto proj_index = [&](int i) {
        return i < static_cast<int>(chart) ? i : i + 1;
    };
    for (const auto& [t, p] : affine.comps()) {
        MPoly ph(proj_ring);
        for (const auto& [m, c] : p.terms()) {
            std::vector<int> e(n, 0);
            for (size_t i = 0; i < m.nvars(); ++i)
                e[static_cast<size_t>(proj_index(static_cast<int>(i)))] = m[i];
            int fill = coeff_degree - m.deg();
            if (fill < 0)
                fail(Errc::degree_mismatch, "coeff_degree too small");
            e[chart] = fill;
            ph.add_term(Mono(std::move(e)), c);
        }
        out.add_comp({proj_index(t[0])}, ph);
    }
    return out;
}

} // namespace folia
