#pragma once

#include "folia/monomial.hpp"
#include "folia/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace folia {

// A polynomial ring is its ordered list of variable names. Rings compare
// by value; the shared_ptr is only to keep polynomials light.
struct Ring {
    std::vector<std::string> vars;

    size_t size() const { return vars.size(); }
    bool operator==(const Ring& o) const { return vars == o.vars; }
    int var_index(const std::string& name) const; // -1 if absent
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars);
RingPtr p3_ring();      // x0 x1 x2 x3
RingPtr affine3_ring(); // x y z
RingPtr st_ring();      // s t (binary forms)

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are stored in descending grevlex order (the canonical rendering
// order); no zero coefficients are stored. Degree of the zero polynomial
// is a distinguished "minus infinity" (an empty optional), never -1.
class MPoly {
  public:
    using TermMap = std::map<Mono, Rat, MonoGrevlexGreater>;

    MPoly() = default;
    explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}
    MPoly(RingPtr ring, const Rat& c);

    static MPoly var(const RingPtr& ring, size_t i, int e = 1);
    static MPoly term(const RingPtr& ring, Mono m, const Rat& c);

    const RingPtr& ring() const { return ring_; }
    size_t nvars() const { return ring_ ? ring_->size() : 0; }
    const TermMap& terms() const { return terms_; }
    size_t nterms() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    std::optional<int> degree() const; // empty = minus infinity (zero poly)
    bool is_constant() const;
    Rat constant_value() const; // requires is_constant()
    bool is_homogeneous() const;
    bool is_homogeneous_of(int d) const;

    const Rat& coeff(const Mono& m) const; // zero if absent

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rat& c) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(int e) const;
    MPoly derivative(size_t var) const;

    // Ring morphism: one image per variable, all in a common target ring.
    MPoly substitute(const std::vector<MPoly>& images) const;
    Rat eval(const std::vector<Rat>& point) const;

    // Keep only terms of total degree <= cap / the degree-d part.
    MPoly truncated(int cap) const;
    MPoly graded_part(int d) const;
    MPoly leading_coeff_normalized() const; // monic w.r.t. grevlex lead

    void add_term(const Mono& m, const Rat& c); // accumulate, drop zeros

    std::string str() const;

  private:
    void check_same_ring(const MPoly& o) const;

    RingPtr ring_;
    TermMap terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

enum class PolyArithKind { add, sub, mul };

// Spec-level entry point; errors on ring mismatch.
MPoly poly_arith(const MPoly& a, const MPoly& b, PolyArithKind kind);

MPoly partial_derivative(const MPoly& p, size_t var);
MPoly substitute(const MPoly& p, const std::vector<MPoly>& images);

// Extend `ring` with extra trailing variable names; `promote` maps a
// polynomial into the extended ring, `restrict_back` drops the trailing
// variables (which must not occur).
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra);
MPoly promote(const MPoly& p, const RingPtr& bigger);
MPoly restrict_back(const MPoly& p, const RingPtr& smaller);

} // namespace folia
