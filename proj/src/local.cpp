#include "folia/local.hpp"

#include "folia/detail/vpoly.hpp"
#include "folia/error.hpp"
#include "folia/hilbert.hpp"

#include <algorithm>

namespace folia {

using detail::VPoly;
using detail::from_mpoly;
using detail::sub_scaled;
using detail::to_mpoly;

namespace {

// Polynomial with an optional representation trace:
//   p = alpha * f0 + sum beta[i] * gen[i]
// (beta empty in untraced mode; alpha empty when not tracking f0).
struct TPoly {
    VPoly p;
    VPoly alpha;
    std::vector<VPoly> beta;
};

void tsub(TPoly& a, const Rat& q, const Mono& shift, const TPoly& b,
          const MonomialOrder& ord) {
    a.p = sub_scaled(a.p, q, shift, b.p, ord);
    if (!a.alpha.t.empty() || !b.alpha.t.empty())
        a.alpha = sub_scaled(a.alpha, q, shift, b.alpha, ord);
    for (size_t i = 0; i < a.beta.size(); ++i)
        if (!a.beta[i].t.empty() || !b.beta[i].t.empty())
            a.beta[i] = sub_scaled(a.beta[i], q, shift, b.beta[i], ord);
}

void tmonic(TPoly& a) {
    if (a.p.zero() || a.p.lc().is_one())
        return;
    Rat inv = a.p.lc().inv();
    for (auto& x : a.p.t)
        x.c *= inv;
    for (auto& x : a.alpha.t)
        x.c *= inv;
    for (auto& v : a.beta)
        for (auto& x : v.t)
            x.c *= inv;
}

struct MoraEngine {
    MonomialOrder ord;
    LocalConfig cfg;
    int cap;

    explicit MoraEngine(size_t nvars, const LocalConfig& c)
        : ord(MonomialOrder::local_antigraded(nvars)), cfg(c), cap(c.degree_cap) {}

    void guard(const VPoly& h) const {
        if (cfg.cancel && cfg.cancel->cancelled())
            fail(Errc::cancelled, "local computation cancelled");
        if (!h.zero() && h.lm().deg() > cap)
            fail(Errc::inconclusive,
                 "Mora reduction exceeded the degree cap " + std::to_string(cap));
    }

    // Weak normal form; reducers may grow by self-inserted intermediates.
    TPoly nf(TPoly h, const std::vector<TPoly>& basis) const {
        std::vector<TPoly> extra; // self-inserted reducers
        size_t steps = 0;
        while (!h.p.zero()) {
            guard(h.p);
            if (++steps > 2000000)
                fail(Errc::inconclusive, "Mora reduction step guard tripped");
            const Mono& m = h.p.lm();
            const TPoly* best = nullptr;
            int best_ecart = 0;
            auto consider = [&](const TPoly& g) {
                if (g.p.zero() || !g.p.lm().divides(m))
                    return;
                int e = g.p.ecart();
                if (!best || e < best_ecart) {
                    best = &g;
                    best_ecart = e;
                }
            };
            for (const auto& g : basis)
                consider(g);
            for (const auto& g : extra)
                consider(g);
            if (!best)
                return h;
            // copy before extra.push_back can invalidate `best`
            TPoly red = *best;
            if (best_ecart > h.p.ecart())
                extra.push_back(h);
            Rat q = h.p.lc() / red.p.lc();
            Mono shift = m.div(red.p.lm());
            tsub(h, q, shift, red, ord);
        }
        return h;
    }

    std::vector<TPoly> std_basis(std::vector<TPoly> basis) const {
        struct Pair {
            size_t i, j;
            Mono lcm;
        };
        auto pair_less = [&](const Pair& a, const Pair& b) {
            if (a.lcm.deg() != b.lcm.deg())
                return a.lcm.deg() < b.lcm.deg();
            int c = ord.compare(a.lcm, b.lcm);
            if (c != 0)
                return c > 0; // larger in local order = lower degree first
            if (a.i != b.i)
                return a.i < b.i;
            return a.j < b.j;
        };
        std::vector<Pair> pairs;
        auto add_pairs = [&](size_t k) {
            for (size_t i = 0; i < k; ++i)
                pairs.push_back({i, k, Mono::lcm(basis[i].p.lm(), basis[k].p.lm())});
            std::sort(pairs.begin(), pairs.end(), pair_less);
        };
        for (auto& b : basis)
            tmonic(b);
        for (size_t k = 1; k < basis.size(); ++k)
            add_pairs(k);
        while (!pairs.empty()) {
            Pair pr = pairs.front();
            pairs.erase(pairs.begin());
            const TPoly& fi = basis[pr.i];
            const TPoly& fj = basis[pr.j];
            // s-poly (both monic)
            TPoly s = fi;
            {
                Mono sh = pr.lcm.div(fi.p.lm());
                auto shift_all = [&](VPoly& v) {
                    for (auto& x : v.t)
                        x.m = x.m * sh;
                };
                shift_all(s.p);
                shift_all(s.alpha);
                for (auto& v : s.beta)
                    shift_all(v);
            }
            tsub(s, Rat(1), pr.lcm.div(fj.p.lm()), fj, ord);
            TPoly r = nf(std::move(s), basis);
            if (r.p.zero())
                continue;
            tmonic(r);
            basis.push_back(std::move(r));
            add_pairs(basis.size() - 1);
        }
        return basis;
    }
};

std::vector<TPoly> to_tpolys(const std::vector<MPoly>& gens,
                             const MonomialOrder& ord, bool traced) {
    std::vector<TPoly> out;
    size_t n = gens.size();
    for (size_t i = 0; i < n; ++i) {
        if (gens[i].is_zero())
            continue;
        TPoly t;
        t.p = from_mpoly(gens[i], ord);
        if (traced) {
            t.beta.resize(n);
            t.beta[i].t.push_back({Mono(gens[i].nvars()), Rat(1)});
        }
        out.push_back(std::move(t));
    }
    return out;
}

template <typename Fn> auto with_escalation(const LocalConfig& cfg, Fn&& fn) {
    LocalConfig c = cfg;
    if (!c.escalate)
        return fn(c);
    try {
        return fn(c);
    } catch (const Error& e) {
        if (e.code() != Errc::inconclusive)
            throw;
        c.degree_cap *= 2;
        return fn(c);
    }
}

} // namespace

std::vector<MPoly> mora_std_basis(const std::vector<MPoly>& gens,
                                  const LocalConfig& cfg) {
    if (gens.empty())
        return {};
    RingPtr ring = gens.front().ring();
    return with_escalation(cfg, [&](const LocalConfig& c) {
        MoraEngine eng(ring->size(), c);
        auto basis = eng.std_basis(to_tpolys(gens, eng.ord, false));
        std::vector<MPoly> out;
        for (const auto& b : basis)
            if (!b.p.zero())
                out.push_back(to_mpoly(b.p, ring));
        return out;
    });
}

MPoly nf_mora(const MPoly& f, const std::vector<MPoly>& basis,
              const LocalConfig& cfg) {
    if (f.is_zero())
        return f;
    return with_escalation(cfg, [&](const LocalConfig& c) {
        MoraEngine eng(f.nvars(), c);
        TPoly h;
        h.p = from_mpoly(f, eng.ord);
        TPoly r = eng.nf(std::move(h), to_tpolys(basis, eng.ord, false));
        return to_mpoly(r.p, f.ring());
    });
}

MoraTrace nf_mora_traced(const MPoly& f, const std::vector<MPoly>& gens,
                         const LocalConfig& cfg) {
    return with_escalation(cfg, [&](const LocalConfig& c) -> MoraTrace {
        RingPtr ring = f.ring();
        MoraEngine eng(ring->size(), c);
        auto traced_gens = to_tpolys(gens, eng.ord, true);
        auto sb = eng.std_basis(std::move(traced_gens));
        TPoly h;
        h.p = from_mpoly(f, eng.ord);
        h.alpha.t.push_back({Mono(ring->size()), Rat(1)});
        h.beta.resize(gens.size());
        TPoly r = eng.nf(std::move(h), sb);
        MoraTrace tr;
        tr.remainder = to_mpoly(r.p, ring);
        // identity: r.p = r.alpha * f + sum r.beta[i] * gen[i]
        //   =>  r.alpha * f = remainder - sum beta[i] gen[i]
        tr.unit = to_mpoly(r.alpha, ring);
        for (const auto& b : r.beta)
            tr.coeffs.push_back(-to_mpoly(b, ring));
        if (tr.unit.graded_part(0).is_zero())
            fail(Errc::internal, "Mora trace lost the unit multiplier");
        return tr;
    });
}

MPoly translate_to_origin(const MPoly& p, const std::vector<Rat>& point) {
    if (point.size() != p.nvars())
        fail(Errc::arity_mismatch, "translate: wrong point dimension");
    std::vector<MPoly> images;
    for (size_t i = 0; i < p.nvars(); ++i)
        images.push_back(MPoly::var(p.ring(), i) + MPoly(p.ring(), point[i]));
    return p.substitute(images);
}

LocalMultiplicity local_multiplicity(const Ideal& I, const std::vector<Rat>& point,
                                     const LocalConfig& cfg) {
    LocalMultiplicity out;
    out.point = point;
    if (I.is_zero()) {
        out.kind = LocalMultiplicity::Kind::infinite;
        return out;
    }
    std::vector<MPoly> shifted;
    for (const auto& g : I.gens)
        shifted.push_back(translate_to_origin(g, point));
    std::vector<MPoly> sb = mora_std_basis(shifted, cfg);
    MonomialOrder ord = MonomialOrder::local_antigraded(I.ring->size());
    std::vector<Mono> leads;
    for (const auto& g : sb) {
        Mono best;
        bool first = true;
        for (const auto& [m, c] : g.terms())
            if (first || ord.greater(m, best)) {
                best = m;
                first = false;
            }
        leads.push_back(best);
    }
    if (!lead_ideal_zero_dimensional(leads, I.ring->size())) {
        out.kind = LocalMultiplicity::Kind::infinite;
        return out;
    }
    out.kind = LocalMultiplicity::Kind::finite;
    out.value = count_standard_monomials(leads, I.ring->size());
    return out;
}

} // namespace folia
