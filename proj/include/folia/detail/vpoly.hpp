#pragma once

#include "folia/monomial.hpp"
#include "folia/poly.hpp"

#include <algorithm>
#include <vector>

namespace folia::detail {

struct Term {
    Mono m;
    Rat c;
};

// Terms sorted strictly descending under a working order.
struct VPoly {
    std::vector<Term> t;

    bool zero() const { return t.empty(); }
    const Mono& lm() const { return t.front().m; }
    const Rat& lc() const { return t.front().c; }
    int maxdeg() const {
        int d = 0;
        for (const auto& x : t)
            d = std::max(d, x.m.deg());
        return d;
    }
    // ecart = maxdeg - deg(lm); zero for global degree orders.
    int ecart() const { return maxdeg() - lm().deg(); }
};

inline VPoly from_mpoly(const MPoly& p, const MonomialOrder& ord) {
    VPoly v;
    v.t.reserve(p.nterms());
    for (const auto& [m, c] : p.terms())
        v.t.push_back({m, c});
    std::sort(v.t.begin(), v.t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    return v;
}

inline MPoly to_mpoly(const VPoly& v, const RingPtr& ring) {
    MPoly p(ring);
    for (const auto& x : v.t)
        p.add_term(x.m, x.c);
    return p;
}

inline void make_monic(VPoly& v) {
    if (v.zero() || v.lc().is_one())
        return;
    Rat inv = v.lc().inv();
    for (auto& x : v.t)
        x.c *= inv;
}

// a - coeff * x^shift * b, merged under ord.
inline VPoly sub_scaled(const VPoly& a, const Rat& coeff, const Mono& shift,
                        const VPoly& b, const MonomialOrder& ord) {
    VPoly r;
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        Mono bm = b.t[j].m * shift;
        int cmp = ord.compare(a.t[i].m, bm);
        if (cmp > 0) {
            r.t.push_back(a.t[i++]);
        } else if (cmp < 0) {
            r.t.push_back({bm, -(coeff * b.t[j].c)});
            ++j;
        } else {
            Rat c = a.t[i].c - coeff * b.t[j].c;
            if (!c.is_zero())
                r.t.push_back({a.t[i].m, c});
            ++i;
            ++j;
        }
    }
    while (i < a.t.size())
        r.t.push_back(a.t[i++]);
    while (j < b.t.size()) {
        r.t.push_back({b.t[j].m * shift, -(coeff * b.t[j].c)});
        ++j;
    }
    return r;
}

} // namespace folia::detail
