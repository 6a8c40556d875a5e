#pragma once

#include "folia/ideal.hpp"

#include <vector>

namespace folia {

struct LocalConfig {
    int degree_cap = 20;  // lead-degree guard for Mora reductions
    bool escalate = true; // double the cap once before giving up
    const CancelToken* cancel = nullptr;
};

// Local multiplicity of an ideal at a rational point: the k-dimension of
// the local quotient ring. Infinite when the point is not isolated.
struct LocalMultiplicity {
    enum class Kind { finite, infinite };
    Kind kind = Kind::infinite;
    long value = 0; // meaningful when finite
    std::vector<Rat> point;

    bool is_finite() const { return kind == Kind::finite; }
};

// Mora standard basis of generators w.r.t. the local antigraded order,
// at the origin. Results are monic with pairwise non-dividing leads.
std::vector<MPoly> mora_std_basis(const std::vector<MPoly>& gens,
                                  const LocalConfig& cfg = {});

// Mora weak normal form of f against a (standard) basis; zero iff f lies
// in the ideal generated in the local ring.
MPoly nf_mora(const MPoly& f, const std::vector<MPoly>& basis,
              const LocalConfig& cfg = {});

// As nf_mora, but also returns the exact polynomial identity
//   unit * f = sum coeffs[i] * basis[i] + remainder
// with unit(0) != 0. Used by the residue transformation law.
struct MoraTrace {
    MPoly remainder;
    MPoly unit;
    std::vector<MPoly> coeffs;
};
MoraTrace nf_mora_traced(const MPoly& f, const std::vector<MPoly>& basis,
                         const LocalConfig& cfg = {});

LocalMultiplicity local_multiplicity(const Ideal& I, const std::vector<Rat>& point,
                                     const LocalConfig& cfg = {});

// Translate a polynomial so that `point` moves to the origin.
MPoly translate_to_origin(const MPoly& p, const std::vector<Rat>& point);

} // namespace folia
