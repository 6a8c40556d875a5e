#include "folia/ideal.hpp"

#include "folia/detail/vpoly.hpp"
#include "folia/error.hpp"

#include <algorithm>
#include <set>

namespace folia {

using detail::Term;
using detail::VPoly;
using detail::from_mpoly;
using detail::make_monic;
using detail::sub_scaled;
using detail::to_mpoly;

Ideal::Ideal(RingPtr r, std::vector<MPoly> g) : ring(std::move(r)) {
    for (auto& p : g) {
        if (p.is_zero())
            continue;
        if (!(*p.ring() == *ring))
            fail(Errc::ring_mismatch, "ideal generator in a different ring");
        gens.push_back(std::move(p));
    }
}

bool Ideal::is_homogeneous() const {
    for (const auto& g : gens)
        if (!g.is_homogeneous())
            return false;
    return true;
}

bool GroebnerBasis::is_unit() const {
    return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
}

std::vector<Mono> GroebnerBasis::lead_monomials() const {
    std::vector<Mono> out;
    out.reserve(basis_.size());
    for (const auto& p : basis_) {
        Mono best;
        bool first = true;
        for (const auto& [m, c] : p.terms()) {
            if (first || order_.greater(m, best)) {
                best = m;
                first = false;
            }
        }
        out.push_back(best);
    }
    return out;
}

namespace {

void check_cancel(const GBConfig& cfg) {
    if (cfg.cancel && cfg.cancel->cancelled())
        fail(Errc::cancelled, "computation cancelled");
}

// Full normal form: every term of the result is irreducible.
VPoly reduce_full(VPoly f, const std::vector<VPoly>& basis,
                  const MonomialOrder& ord, const GBConfig& cfg,
                  const std::vector<bool>* skip = nullptr) {
    VPoly out;
    while (!f.zero()) {
        check_cancel(cfg);
        const Mono& m = f.lm();
        const VPoly* reducer = nullptr;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (skip && (*skip)[k])
                continue;
            if (!basis[k].zero() && basis[k].lm().divides(m)) {
                reducer = &basis[k];
                break;
            }
        }
        if (reducer) {
            Rat q = f.lc() / reducer->lc();
            f = sub_scaled(f, q, m.div(reducer->lm()), *reducer, ord);
        } else {
            out.t.push_back(f.t.front());
            f.t.erase(f.t.begin());
        }
    }
    return out;
}

struct GBPair {
    size_t i, j;
    Mono lcm;
    int sugar;
};

struct GBPairLess {
    const MonomialOrder* ord;
    bool operator()(const GBPair& a, const GBPair& b) const {
        if (a.sugar != b.sugar)
            return a.sugar < b.sugar;
        int c = ord->compare(a.lcm, b.lcm);
        if (c != 0)
            return c < 0;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    }
};

} // namespace

GroebnerBasis groebner(const Ideal& I, const MonomialOrder& order,
                       const GBConfig& cfg) {
    if (order.nvars() != I.ring->size())
        fail(Errc::arity_mismatch, "order arity != ring size");
    if (order.is_local())
        fail(Errc::unsupported,
             "groebner: local orders go through mora_std_basis");

    std::vector<VPoly> G;
    std::vector<int> sugar;
    for (const auto& g : I.gens) {
        VPoly v = from_mpoly(g, order);
        make_monic(v);
        G.push_back(std::move(v));
        sugar.push_back(G.back().maxdeg());
    }

    const bool product_criterion_ok = !order.is_local();

    std::set<GBPair, GBPairLess> pairs(GBPairLess{&order});
    auto push_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            if (G[i].zero())
                continue;
            Mono l = Mono::lcm(G[i].lm(), G[k].lm());
            int s = std::max(sugar[i] + l.deg() - G[i].lm().deg(),
                             sugar[k] + l.deg() - G[k].lm().deg());
            pairs.insert({i, k, l, s});
        }
    };
    for (size_t k = 1; k < G.size(); ++k)
        push_pairs_for(k);

    auto pair_pending = [&](size_t i, size_t j) {
        for (const auto& p : pairs)
            if ((p.i == i && p.j == j) || (p.i == j && p.j == i))
                return true;
        return false;
    };

    while (!pairs.empty()) {
        check_cancel(cfg);
        GBPair pr = *pairs.begin();
        pairs.erase(pairs.begin());
        const VPoly& fi = G[pr.i];
        const VPoly& fj = G[pr.j];
        if (fi.zero() || fj.zero())
            continue;
        if (product_criterion_ok && fi.lm().coprime(fj.lm()))
            continue;
        // chain criterion
        bool skip = false;
        for (size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j || G[k].zero())
                continue;
            if (G[k].lm().divides(pr.lcm) && !pair_pending(pr.i, k) &&
                !pair_pending(pr.j, k))
                skip = true;
        }
        if (skip)
            continue;

        VPoly s = sub_scaled(
            // lcm/lm_i * f_i - lcm/lm_j * f_j, both monic
            [&] {
                VPoly shifted;
                Mono sh = pr.lcm.div(fi.lm());
                shifted.t.reserve(fi.t.size());
                for (const auto& x : fi.t)
                    shifted.t.push_back({x.m * sh, x.c});
                return shifted;
            }(),
            Rat(1), pr.lcm.div(fj.lm()), fj, order);
        VPoly red = reduce_full(std::move(s), G, order, cfg);
        if (red.zero())
            continue;
        make_monic(red);
        if (red.lm().is_one()) {
            // unit ideal
            std::vector<MPoly> one = {MPoly(I.ring, Rat(1))};
            GroebnerBasis gb(order, std::move(one));
            gb.set_ring(I.ring);
            return gb;
        }
        G.push_back(std::move(red));
        sugar.push_back(std::max(pr.sugar, G.back().maxdeg()));
        push_pairs_for(G.size() - 1);
    }

    // inter-reduce to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < G.size(); ++i) {
            if (G[i].zero())
                continue;
            std::vector<bool> skip(G.size(), false);
            skip[i] = true;
            VPoly r = reduce_full(G[i], G, order, cfg, &skip);
            make_monic(r);
            if (!(r.t.size() == G[i].t.size() &&
                  std::equal(r.t.begin(), r.t.end(), G[i].t.begin(),
                             [](const Term& a, const Term& b) {
                                 return a.m == b.m && a.c == b.c;
                             }))) {
                G[i] = std::move(r);
                changed = true;
            }
        }
    }

    std::vector<VPoly> kept;
    for (auto& g : G)
        if (!g.zero())
            kept.push_back(std::move(g));
    std::sort(kept.begin(), kept.end(), [&](const VPoly& a, const VPoly& b) {
        return order.less(a.lm(), b.lm());
    });
    std::vector<MPoly> basis;
    basis.reserve(kept.size());
    for (const auto& g : kept)
        basis.push_back(to_mpoly(g, I.ring));
    GroebnerBasis gb(order, std::move(basis));
    gb.set_ring(I.ring);
    return gb;
}

MPoly normal_form(const MPoly& p, const GroebnerBasis& G) {
    if (G.ring() && !(*p.ring() == *G.ring()))
        fail(Errc::ring_mismatch, "normal_form: ring mismatch");
    const MonomialOrder& ord = G.order();
    std::vector<VPoly> basis;
    basis.reserve(G.basis().size());
    for (const auto& g : G.basis())
        basis.push_back(from_mpoly(g, ord));
    GBConfig cfg;
    VPoly r = reduce_full(from_mpoly(p, ord), basis, ord, cfg);
    return to_mpoly(r, p.ring());
}

bool ideal_contains(const Ideal& I, const MPoly& f, const GBConfig& cfg) {
    if (f.is_zero())
        return true;
    if (I.is_zero())
        return false;
    GroebnerBasis gb = groebner(I, MonomialOrder::grevlex(I.ring->size()), cfg);
    return normal_form(f, gb).is_zero();
}

bool ideal_contains_ideal(const Ideal& I, const Ideal& J, const GBConfig& cfg) {
    if (J.is_zero())
        return true;
    if (I.is_zero())
        return false;
    GroebnerBasis gb = groebner(I, MonomialOrder::grevlex(I.ring->size()), cfg);
    for (const auto& g : J.gens)
        if (!normal_form(g, gb).is_zero())
            return false;
    return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J, const GBConfig& cfg) {
    return ideal_contains_ideal(I, J, cfg) && ideal_contains_ideal(J, I, cfg);
}

MPoly divide_exact(const MPoly& p, const MPoly& f) {
    if (f.is_zero())
        fail(Errc::internal, "division by the zero polynomial");
    MonomialOrder ord = MonomialOrder::grevlex(p.nvars());
    VPoly num = from_mpoly(p, ord);
    VPoly den = from_mpoly(f, ord);
    VPoly quo;
    while (!num.zero()) {
        if (!den.lm().divides(num.lm()))
            fail(Errc::internal, "divide_exact: not divisible");
        Rat q = num.lc() / den.lc();
        Mono sh = num.lm().div(den.lm());
        quo.t.push_back({sh, q});
        num = sub_scaled(num, q, sh, den, ord);
    }
    return to_mpoly(quo, p.ring());
}

namespace {

// Keep GB elements free of the trailing k variables and restrict them back.
std::vector<MPoly> elimination_ideal(const Ideal& ext, size_t k,
                                     const RingPtr& small_ring,
                                     const GBConfig& cfg) {
    const size_t n = ext.ring->size();
    GroebnerBasis gb = groebner(ext, MonomialOrder::elim_trailing(n, k), cfg);
    std::vector<MPoly> out;
    for (const auto& g : gb.basis()) {
        bool pure = true;
        for (const auto& [m, c] : g.terms())
            for (size_t i = n - k; i < n && pure; ++i)
                if (m[i] != 0)
                    pure = false;
        if (pure)
            out.push_back(restrict_back(g, small_ring));
    }
    return out;
}

} // namespace

Ideal intersect(const Ideal& I, const Ideal& J, const GBConfig& cfg) {
    if (I.is_zero())
        return I;
    if (J.is_zero())
        return J;
    RingPtr big = extend_ring(I.ring, {"_t"});
    MPoly t = MPoly::var(big, big->size() - 1);
    MPoly one_minus_t = MPoly(big, Rat(1)) - t;
    std::vector<MPoly> gens;
    for (const auto& g : I.gens)
        gens.push_back(t * promote(g, big));
    for (const auto& g : J.gens)
        gens.push_back(one_minus_t * promote(g, big));
    Ideal ext(big, std::move(gens));
    return Ideal(I.ring, elimination_ideal(ext, 1, I.ring, cfg));
}

Ideal quotient_single(const Ideal& I, const MPoly& f, const GBConfig& cfg) {
    if (f.is_zero())
        fail(Errc::internal, "quotient by zero");
    if (I.is_zero())
        return I;
    Ideal principal(I.ring, {f});
    Ideal meet = intersect(I, principal, cfg);
    std::vector<MPoly> gens;
    for (const auto& g : meet.gens)
        gens.push_back(divide_exact(g, f));
    return Ideal(I.ring, std::move(gens));
}

Ideal saturate_single(const Ideal& I, const MPoly& f, const GBConfig& cfg) {
    if (f.is_zero())
        fail(Errc::internal, "saturation by zero");
    if (I.is_zero())
        return I;
    RingPtr big = extend_ring(I.ring, {"_w"});
    std::vector<MPoly> gens;
    for (const auto& g : I.gens)
        gens.push_back(promote(g, big));
    MPoly w = MPoly::var(big, big->size() - 1);
    gens.push_back(MPoly(big, Rat(1)) - w * promote(f, big));
    Ideal ext(big, std::move(gens));
    return Ideal(I.ring, elimination_ideal(ext, 1, I.ring, cfg));
}

Ideal saturation(const Ideal& I, const Ideal& J, const GBConfig& cfg) {
    if (J.is_zero())
        fail(Errc::internal, "saturation by the zero ideal");
    if (I.is_zero())
        return I;
    Ideal cur = I;
    while (true) {
        Ideal next = saturate_single(cur, J.gens[0], cfg);
        for (size_t j = 1; j < J.gens.size(); ++j)
            next = intersect(next, saturate_single(cur, J.gens[j], cfg), cfg);
        if (ideal_equal(next, cur, cfg))
            return next;
        cur = std::move(next);
    }
}

bool radical_member(const MPoly& f, const Ideal& I, const GBConfig& cfg) {
    if (f.is_zero())
        return true;
    RingPtr big = extend_ring(I.ring, {"_w"});
    std::vector<MPoly> gens;
    for (const auto& g : I.gens)
        gens.push_back(promote(g, big));
    MPoly w = MPoly::var(big, big->size() - 1);
    gens.push_back(MPoly(big, Rat(1)) - w * promote(f, big));
    Ideal ext(big, std::move(gens));
    GroebnerBasis gb = groebner(ext, MonomialOrder::grevlex(big->size()), cfg);
    return gb.is_unit();
}

Ideal irrelevant_ideal(const RingPtr& ring) {
    std::vector<MPoly> gens;
    for (size_t i = 0; i < ring->size(); ++i)
        gens.push_back(MPoly::var(ring, i));
    return Ideal(ring, std::move(gens));
}

MPoly dehomogenize(const MPoly& p, size_t chart, const RingPtr& target) {
    std::vector<MPoly> images;
    size_t k = 0;
    for (size_t i = 0; i < p.nvars(); ++i) {
        if (i == chart)
            images.push_back(MPoly(target, Rat(1)));
        else
            images.push_back(MPoly::var(target, k++));
    }
    return p.substitute(images);
}

Ideal dehomogenize(const Ideal& I, size_t chart) {
    std::vector<std::string> names;
    for (size_t i = 0; i < I.ring->size(); ++i)
        if (i != chart)
            names.push_back(I.ring->vars[i]);
    RingPtr target = make_ring(std::move(names));
    std::vector<MPoly> gens;
    for (const auto& g : I.gens)
        gens.push_back(dehomogenize(g, chart, target));
    return Ideal(target, std::move(gens));
}

} // namespace folia
