#include "folia/binform.hpp"

#include "folia/error.hpp"

#include <algorithm>
#include <tuple>

namespace folia {

int udeg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly unormalize(UPoly f) {
    while (!f.empty() && f.back().is_zero())
        f.pop_back();
    return f;
}

UPoly uadd(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    return unormalize(std::move(r));
}

UPoly usub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    return unormalize(std::move(r));
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty())
        return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return unormalize(std::move(r));
}

UPoly umonic(const UPoly& f) {
    if (f.empty())
        return f;
    UPoly r = f;
    Rat inv = f.back().inv();
    for (auto& c : r)
        c *= inv;
    return r;
}

Rat ueval(const UPoly& f, const Rat& x) {
    Rat acc(0);
    for (size_t i = f.size(); i-- > 0;)
        acc = acc * x + f[i];
    return acc;
}

UPoly uderiv(const UPoly& f) {
    if (f.size() <= 1)
        return {};
    UPoly r(f.size() - 1, Rat(0));
    for (size_t i = 1; i < f.size(); ++i)
        r[i - 1] = f[i] * Rat(static_cast<long>(i));
    return unormalize(std::move(r));
}

std::pair<UPoly, UPoly> udivmod(const UPoly& a, const UPoly& b) {
    if (b.empty())
        fail(Errc::internal, "univariate division by zero");
    UPoly rem = unormalize(a);
    if (rem.size() < b.size())
        return {{}, rem};
    UPoly quo(rem.size() - b.size() + 1, Rat(0));
    const Rat lb = b.back().inv();
    for (size_t k = rem.size(); k-- >= b.size();) {
        if (!rem[k].is_zero()) {
            Rat q = rem[k] * lb;
            quo[k - b.size() + 1] = q;
            for (size_t j = 0; j < b.size(); ++j)
                rem[k - b.size() + 1 + j] -= q * b[j];
        }
        if (k == 0)
            break;
    }
    return {unormalize(std::move(quo)), unormalize(std::move(rem))};
}

UPoly udiv_exact(const UPoly& a, const UPoly& b) {
    auto [q, r] = udivmod(a, b);
    if (!r.empty())
        fail(Errc::internal, "univariate division not exact");
    return q;
}

namespace {

// Clear denominators; monic normalization downstream makes the integer
// content irrelevant for gcd purposes.
UPoly clear_denominators(const UPoly& f) {
    if (f.empty())
        return f;
    Rat den(1);
    for (const auto& c : f)
        if (!c.is_zero())
            den = den * Rat::from_string(c.den_str());
    UPoly g(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        g[i] = f[i] * den;
    return g;
}

} // namespace

UPoly ugcd(const UPoly& a, const UPoly& b) {
    UPoly A = unormalize(a), B = unormalize(b);
    if (A.empty())
        return umonic(B);
    if (B.empty())
        return umonic(A);
    A = clear_denominators(A);
    B = clear_denominators(B);
    if (udeg(A) < udeg(B))
        std::swap(A, B);
    // subresultant polynomial remainder sequence
    Rat g(1), h(1);
    while (true) {
        int delta = udeg(A) - udeg(B);
        Rat lb = B.back();
        Rat scale(1);
        for (int i = 0; i <= delta; ++i)
            scale *= lb;
        UPoly R = A;
        for (auto& c : R)
            c *= scale;
        R = udivmod(R, B).second;
        if (R.empty())
            return umonic(B);
        if (udeg(R) == 0)
            return {Rat(1)};
        Rat divisor = g;
        for (int i = 0; i < delta; ++i)
            divisor *= h;
        for (auto& c : R)
            c /= divisor;
        A = std::move(B);
        B = std::move(R);
        g = A.back();
        if (delta >= 1) {
            Rat nh(1);
            for (int i = 0; i < delta; ++i)
                nh *= g;
            for (int i = 0; i < delta - 1; ++i)
                nh /= h;
            h = nh;
        }
    }
}

std::vector<std::pair<UPoly, int>> usquarefree(const UPoly& f0) {
    std::vector<std::pair<UPoly, int>> out;
    UPoly f = umonic(unormalize(f0));
    if (udeg(f) <= 0)
        return out;
    // Yun's algorithm
    UPoly d = uderiv(f);
    UPoly a = ugcd(f, d);
    UPoly w = udiv_exact(f, a);
    UPoly y = udiv_exact(d, a);
    UPoly z = usub(y, uderiv(w));
    int i = 1;
    while (udeg(w) != 0) {
        UPoly g = ugcd(w, z);
        if (udeg(g) > 0)
            out.emplace_back(umonic(g), i);
        w = udiv_exact(w, g);
        y = udiv_exact(z, g);
        z = usub(y, uderiv(w));
        ++i;
    }
    return out;
}

namespace {

bool small_divisors(const Rat& v, std::vector<long>& out) {
    if (!v.is_integer())
        return false;
    Rat a = v.abs();
    if (a > Rat(1000000000L))
        return false;
    long n = a.to_long();
    if (n == 0)
        return false;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d)
                out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return true;
}

} // namespace

RootSplit urational_roots(const UPoly& f0) {
    RootSplit rs;
    UPoly f = umonic(unormalize(f0));
    if (udeg(f) <= 0) {
        rs.cofactor = f;
        return rs;
    }
    int zero_mult = 0;
    while (udeg(f) >= 1 && f[0].is_zero()) {
        f.erase(f.begin());
        ++zero_mult;
    }
    if (zero_mult > 0)
        rs.roots.emplace_back(Rat(0), zero_mult);
    if (udeg(f) <= 0) {
        rs.cofactor = f;
        return rs;
    }
    UPoly g = clear_denominators(f);
    std::vector<long> ps, qs;
    if (!small_divisors(g[0], ps) || !small_divisors(g.back(), qs)) {
        rs.enumerable = false;
        rs.cofactor = f;
        return rs;
    }
    std::vector<Rat> candidates;
    for (long p : ps)
        for (long q : qs) {
            candidates.push_back(Rat(p, q));
            candidates.push_back(Rat(-p, q));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (const Rat& r : candidates) {
        int mult = 0;
        while (udeg(f) >= 1 && ueval(f, r).is_zero()) {
            f = udiv_exact(f, UPoly{-r, Rat(1)});
            ++mult;
        }
        if (mult > 0)
            rs.roots.emplace_back(r, mult);
    }
    rs.cofactor = umonic(f);
    return rs;
}

// ---- binary forms ----

bool is_binary_form(const MPoly& p) {
    return p.nvars() == 2 && p.is_homogeneous();
}

UPoly binform_dehomogenize(const MPoly& p) {
    auto d = p.degree();
    if (!d)
        return {};
    UPoly f(static_cast<size_t>(*d) + 1, Rat(0));
    for (const auto& [m, c] : p.terms())
        f[static_cast<size_t>(m[0])] += c;
    return unormalize(std::move(f));
}

MPoly binform_homogenize(const RingPtr& ring, const UPoly& f, int total_deg) {
    MPoly r(ring);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_zero())
            continue;
        if (total_deg < static_cast<int>(i))
            fail(Errc::internal, "homogenize: degree too small");
        r.add_term(Mono(std::vector<int>{static_cast<int>(i),
                                         total_deg - static_cast<int>(i)}),
                   f[i]);
    }
    return r;
}

namespace {

// Split off the monomial content s^a t^b, returning (a, b, core).
std::tuple<int, int, MPoly> strip_st(const MPoly& p) {
    int a = 1 << 29, b = 1 << 29;
    for (const auto& [m, c] : p.terms()) {
        a = std::min(a, m[0]);
        b = std::min(b, m[1]);
    }
    MPoly core(p.ring());
    for (const auto& [m, c] : p.terms())
        core.add_term(Mono(std::vector<int>{m[0] - a, m[1] - b}), c);
    return {a, b, core};
}

} // namespace

MPoly gcd_binary(const std::vector<MPoly>& forms) {
    if (forms.empty())
        fail(Errc::empty_input, "gcd_binary: empty input list");
    const RingPtr ring = forms.front().ring();
    for (const auto& f : forms) {
        if (f.is_zero())
            fail(Errc::empty_input, "gcd_binary: zero input form");
        if (!(*f.ring() == *ring))
            fail(Errc::ring_mismatch, "gcd_binary: mixed rings");
        if (!is_binary_form(f))
            fail(Errc::non_homogeneous, "gcd_binary: input is not a binary form");
    }
    int min_a = 1 << 29, min_b = 1 << 29;
    UPoly acc;
    bool first = true;
    for (const auto& f : forms) {
        auto [a, b, core] = strip_st(f);
        min_a = std::min(min_a, a);
        min_b = std::min(min_b, b);
        UPoly u = binform_dehomogenize(core);
        acc = first ? umonic(u) : ugcd(acc, u);
        first = false;
    }
    MPoly g = binform_homogenize(ring, acc, udeg(acc));
    if (min_a > 0)
        g = g * MPoly::var(ring, 0, min_a);
    if (min_b > 0)
        g = g * MPoly::var(ring, 1, min_b);
    return g.leading_coeff_normalized();
}

MPoly gcd_binary(const MPoly& a, const MPoly& b, const std::vector<MPoly>& rest) {
    std::vector<MPoly> all = {a, b};
    all.insert(all.end(), rest.begin(), rest.end());
    return gcd_binary(all);
}

int binform_order_at(const MPoly& f, const Rat& s0, const Rat& t0) {
    if (f.is_zero())
        fail(Errc::internal, "order of the zero form");
    if (s0.is_zero() && t0.is_zero())
        fail(Errc::internal, "[0:0] is not a point of P^1");
    if (t0.is_zero()) {
        // order at [1:0] = minimal t-exponent
        int b = 1 << 29;
        for (const auto& [m, c] : f.terms())
            b = std::min(b, m[1]);
        return b;
    }
    // multiplicity of the root s0/t0 in f(s, 1)
    UPoly u = binform_dehomogenize(f);
    Rat r = s0 / t0;
    int ord = 0;
    while (udeg(u) >= 1 && ueval(u, r).is_zero()) {
        u = udiv_exact(u, UPoly{-r, Rat(1)});
        ++ord;
    }
    return ord;
}

std::vector<BinFactor> binform_factor(const MPoly& f) {
    if (f.is_zero())
        fail(Errc::internal, "factor of the zero form");
    std::vector<BinFactor> out;
    const RingPtr ring = f.ring();
    auto [a, b, core] = strip_st(f);
    if (a > 0) {
        BinFactor bf;
        bf.is_point = true;
        bf.s0 = Rat(0);
        bf.t0 = Rat(1);
        bf.factor = MPoly::var(ring, 0); // s vanishes at [0:1]
        bf.order = a;
        out.push_back(std::move(bf));
    }
    if (b > 0) {
        BinFactor bf;
        bf.is_point = true;
        bf.s0 = Rat(1);
        bf.t0 = Rat(0);
        bf.factor = MPoly::var(ring, 1); // t vanishes at [1:0]
        bf.order = b;
        out.push_back(std::move(bf));
    }
    UPoly u = binform_dehomogenize(core);
    if (udeg(u) >= 1) {
        for (const auto& [sq, mult] : usquarefree(u)) {
            RootSplit rs = urational_roots(sq);
            for (const auto& [root, m1] : rs.roots) {
                BinFactor bf;
                bf.is_point = true;
                bf.s0 = root;
                bf.t0 = Rat(1);
                MPoly lin(ring);
                lin.add_term(Mono(std::vector<int>{1, 0}), Rat(1));
                lin.add_term(Mono(std::vector<int>{0, 1}), -root);
                bf.factor = lin;
                bf.order = mult * m1;
                out.push_back(std::move(bf));
            }
            if (udeg(rs.cofactor) >= 1) {
                BinFactor bf;
                bf.is_point = false;
                bf.factor =
                    binform_homogenize(ring, rs.cofactor, udeg(rs.cofactor));
                bf.order = mult;
                bf.certified_irreducible = rs.enumerable && udeg(rs.cofactor) <= 3;
                out.push_back(std::move(bf));
            }
        }
    }
    return out;
}

} // namespace folia
