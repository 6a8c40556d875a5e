#pragma once

#include "folia/poly.hpp"
#include "folia/util.hpp"

#include <vector>

namespace folia {

// Polynomial ideal given by generators. Zero generators are dropped at
// construction; an empty generator list is the zero ideal.
struct Ideal {
    RingPtr ring;
    std::vector<MPoly> gens;

    Ideal() = default;
    Ideal(RingPtr r, std::vector<MPoly> g);

    bool is_zero() const { return gens.empty(); }
    bool is_homogeneous() const;
};

struct GBConfig {
    const CancelToken* cancel = nullptr;
};

// Reduced Groebner basis: monic, auto-reduced, deterministic for a given
// (generators, order); pair selection is sugar degree, then the order on
// the pair lcm, then generator indices.
class GroebnerBasis {
  public:
    GroebnerBasis(MonomialOrder order, std::vector<MPoly> basis)
        : order_(std::move(order)), basis_(std::move(basis)) {}

    const MonomialOrder& order() const { return order_; }
    const std::vector<MPoly>& basis() const { return basis_; }
    const RingPtr& ring() const { return ring_; }
    void set_ring(RingPtr r) { ring_ = std::move(r); }

    bool is_unit() const; // basis == {1}
    std::vector<Mono> lead_monomials() const;

  private:
    MonomialOrder order_;
    std::vector<MPoly> basis_;
    RingPtr ring_;
};

GroebnerBasis groebner(const Ideal& I, const MonomialOrder& order,
                       const GBConfig& cfg = {});

// Unique remainder of p modulo G (full tail reduction). Zero iff p lies in
// the ideal when G is a Groebner basis for a global order.
MPoly normal_form(const MPoly& p, const GroebnerBasis& G);

bool ideal_contains(const Ideal& I, const MPoly& f, const GBConfig& cfg = {});
// Every generator of J lies in I.
bool ideal_contains_ideal(const Ideal& I, const Ideal& J, const GBConfig& cfg = {});
bool ideal_equal(const Ideal& I, const Ideal& J, const GBConfig& cfg = {});

// Exact multivariate division; fails if not divisible.
MPoly divide_exact(const MPoly& p, const MPoly& f);

Ideal intersect(const Ideal& I, const Ideal& J, const GBConfig& cfg = {});
// Ideal quotient I : f (plain colon, single divisor).
Ideal quotient_single(const Ideal& I, const MPoly& f, const GBConfig& cfg = {});
// I : f^infinity via the extra-variable trick (I + (1 - w f)) ^ R.
Ideal saturate_single(const Ideal& I, const MPoly& f, const GBConfig& cfg = {});
// I : J^infinity; iterates single-generator saturations and intersections
// to stabilization.
Ideal saturation(const Ideal& I, const Ideal& J, const GBConfig& cfg = {});

// f in radical(I), by the Rabinowitsch trick.
bool radical_member(const MPoly& f, const Ideal& I, const GBConfig& cfg = {});

// The irrelevant ideal (x_0, ..., x_{n-1}).
Ideal irrelevant_ideal(const RingPtr& ring);

// Dehomogenize by setting variable `chart` to 1 (result lives in the ring
// of the remaining variables).
Ideal dehomogenize(const Ideal& I, size_t chart);
MPoly dehomogenize(const MPoly& p, size_t chart, const RingPtr& target);

} // namespace folia
