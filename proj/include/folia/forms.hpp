#pragma once

#include "folia/poly.hpp"

#include <map>
#include <vector>

namespace folia {

class PolyVectorField;

// Polynomial differential form of a fixed grade. Components are indexed by
// strictly increasing variable-index tuples; zero components are not stored.
class PolyForm {
  public:
    using IdxTuple = std::vector<int>;
    using CompMap = std::map<IdxTuple, MPoly>;

    PolyForm() = default;
    PolyForm(RingPtr ring, int grade);

    static PolyForm scalar(const MPoly& p); // grade 0
    static PolyForm d_var(const RingPtr& ring, size_t i); // dx_i

    int grade() const { return grade_; }
    const RingPtr& ring() const { return ring_; }
    size_t nvars() const { return ring_ ? ring_->size() : 0; }
    const CompMap& comps() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    const MPoly& comp(const IdxTuple& t) const; // zero poly if absent
    void add_comp(const IdxTuple& t, const MPoly& p); // accumulates

    PolyForm operator+(const PolyForm& o) const;
    PolyForm operator-(const PolyForm& o) const;
    PolyForm operator-() const;
    PolyForm operator*(const MPoly& s) const; // scalar (grade-0) multiple
    PolyForm operator*(const Rat& c) const;

    bool operator==(const PolyForm& o) const;
    bool operator!=(const PolyForm& o) const { return !(*this == o); }

    // All components truncated at total degree cap.
    PolyForm truncated(int cap) const;
    // The part whose coefficient polynomials are homogeneous of degree d.
    PolyForm graded_part(int d) const;
    // Maximum coefficient degree; empty for the zero form.
    std::optional<int> coeff_degree() const;
    // Minimum degree over all terms of all components; empty for zero.
    std::optional<int> coeff_order() const;

    std::string str() const;

  private:
    int grade_ = 0;
    RingPtr ring_;
    CompMap comps_;
};

inline PolyForm operator*(const MPoly& s, const PolyForm& f) { return f * s; }

// Polynomial vector field: one component per variable.
class PolyVectorField {
  public:
    PolyVectorField() = default;
    explicit PolyVectorField(RingPtr ring);
    PolyVectorField(RingPtr ring, std::vector<MPoly> comps);

    const RingPtr& ring() const { return ring_; }
    const std::vector<MPoly>& comps() const { return comps_; }
    const MPoly& comp(size_t i) const { return comps_[i]; }
    MPoly& comp(size_t i) { return comps_[i]; }
    bool is_zero() const;

    bool operator==(const PolyVectorField& o) const {
        return comps_ == o.comps_;
    }

    std::string str() const;

  private:
    RingPtr ring_;
    std::vector<MPoly> comps_;
};

// Graded-antisymmetric product; errors when the grades sum past the
// variable count.
PolyForm wedge(const PolyForm& a, const PolyForm& b);

// Exterior derivative.
PolyForm ext_d(const PolyForm& a);

// Interior product i_X, an antiderivation of degree -1.
PolyForm contract(const PolyVectorField& x, const PolyForm& a);

// omega(X) for a grade-1 form: the contraction collapsed to a polynomial.
MPoly pair_form_field(const PolyForm& omega, const PolyVectorField& x);

// The unique X with i_X dx^dy^dz = d(omega); 3 variables only.
PolyVectorField rot(const PolyForm& omega);

// The Euler (radial) field sum x_i d/dx_i.
PolyVectorField euler_field(const RingPtr& ring);

// The volume form dx_0 ^ ... ^ dx_{n-1}.
PolyForm volume_form(const RingPtr& ring);

} // namespace folia
