#include "folia/hilbert.hpp"

#include "folia/error.hpp"

#include <algorithm>
#include <map>

namespace folia {

namespace {

std::vector<Mono> minimalize(std::vector<Mono> gens) {
    std::vector<Mono> out;
    std::sort(gens.begin(), gens.end(), [](const Mono& a, const Mono& b) {
        return a.deg() < b.deg();
    });
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& g : out)
            if (g.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant)
            out.push_back(m);
    }
    return out;
}

UPoly one_poly() { return UPoly{Rat(1)}; }

UPoly shift_mul(const UPoly& f, int k) { // t^k * f
    if (f.empty())
        return f;
    UPoly r(f.size() + static_cast<size_t>(k), Rat(0));
    for (size_t i = 0; i < f.size(); ++i)
        r[i + static_cast<size_t>(k)] = f[i];
    return r;
}

UPoly hilbert_num_rec(std::vector<Mono> gens, size_t nvars,
                      std::map<std::vector<int>, UPoly>& memo) {
    gens = minimalize(std::move(gens));
    if (gens.empty())
        return one_poly();
    if (gens.size() == 1 && gens[0].is_one())
        return UPoly{};
    // memo key: concatenated sorted exponent vectors
    std::vector<int> key;
    {
        std::vector<std::vector<int>> rows;
        for (const auto& m : gens)
            rows.push_back(m.exps());
        std::sort(rows.begin(), rows.end());
        for (const auto& r : rows)
            key.insert(key.end(), r.begin(), r.end());
    }
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;

    // pairwise coprime => product formula
    bool coprime = true;
    for (size_t i = 0; i < gens.size() && coprime; ++i)
        for (size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!gens[i].coprime(gens[j]))
                coprime = false;
    UPoly result;
    if (coprime) {
        result = one_poly();
        for (const auto& m : gens) {
            UPoly f(static_cast<size_t>(m.deg()) + 1, Rat(0));
            f[0] = Rat(1);
            f[static_cast<size_t>(m.deg())] = Rat(-1);
            result = umul(result, f);
        }
    } else {
        // pivot: a variable occurring in the most generators
        size_t pivot = 0;
        int best = -1;
        for (size_t v = 0; v < nvars; ++v) {
            int cnt = 0;
            for (const auto& m : gens)
                if (m[v] > 0)
                    ++cnt;
            if (cnt > best) {
                best = cnt;
                pivot = v;
            }
        }
        // N(I) = N(I + (x)) + t * N(I : x)
        std::vector<Mono> plus;  // I + (x): generators with pivot removed
        std::vector<Mono> colon; // I : x
        plus.push_back(Mono::var(nvars, pivot));
        for (const auto& m : gens) {
            if (m[pivot] == 0)
                plus.push_back(m);
            std::vector<int> e = m.exps();
            if (e[pivot] > 0)
                e[pivot] -= 1;
            colon.push_back(Mono(std::move(e)));
        }
        result = uadd(hilbert_num_rec(std::move(plus), nvars, memo),
                      shift_mul(hilbert_num_rec(std::move(colon), nvars, memo), 1));
    }
    memo.emplace(std::move(key), result);
    return result;
}

// Divide f by (1 - t)^k as long as 1 is a root; returns multiplicity.
int divide_out_one_root(UPoly& f) {
    int k = 0;
    while (udeg(f) >= 1 && ueval(f, Rat(1)).is_zero()) {
        // f / (1 - t): synthetic division by root 1 on reversed sign:
        // f(t) = (1 - t) q(t) => q_i = -(f_{i+1} + q_{i+1}) backwards
        UPoly q(f.size() - 1, Rat(0));
        Rat carry(0); // coefficient being accumulated
        // Use f(t) = (1-t) q(t): f_0 = q_0, f_i = q_i - q_{i-1}
        q[0] = f[0];
        for (size_t i = 1; i + 1 <= q.size(); ++i)
            q[i] = f[i] + q[i - 1];
        (void)carry;
        f = unormalize(std::move(q));
        ++k;
    }
    return k;
}

// Binomial-coefficient polynomial C(m + a, d) in the variable m, degree d.
UPoly binom_poly(int a, int d) {
    UPoly r = {Rat(1)};
    if (d == 0)
        return r;
    for (int i = 1; i <= d; ++i) {
        // multiply by (m + a - d + i)
        UPoly factor = {Rat(a - d + i), Rat(1)};
        r = umul(r, factor);
    }
    Rat fact(1);
    for (int i = 2; i <= d; ++i)
        fact *= Rat(i);
    for (auto& c : r)
        c /= fact;
    return r;
}

} // namespace

UPoly hilbert_numerator(std::vector<Mono> leads, size_t nvars) {
    std::map<std::vector<int>, UPoly> memo;
    return hilbert_num_rec(std::move(leads), nvars, memo);
}

HilbertData hilbert_data(const Ideal& I, bool saturate_first, const GBConfig& cfg) {
    if (!I.is_homogeneous())
        fail(Errc::non_homogeneous, "hilbert_data: ideal is not homogeneous");
    Ideal J = I;
    if (saturate_first && !I.is_zero())
        J = saturation(I, irrelevant_ideal(I.ring), cfg);

    const size_t n = J.ring->size();
    std::vector<Mono> leads;
    if (!J.is_zero()) {
        GroebnerBasis gb = groebner(J, MonomialOrder::grevlex(n), cfg);
        if (gb.is_unit()) {
            HilbertData hd;
            hd.dim_proj = -1;
            hd.degree = 0;
            return hd;
        }
        leads = gb.lead_monomials();
    }
    UPoly num = hilbert_numerator(leads, n);
    int a = divide_out_one_root(num);
    int D = static_cast<int>(n) - a; // Krull dimension of R/I
    HilbertData hd;
    hd.dim_proj = D - 1;
    if (D <= 0) {
        hd.dim_proj = -1;
        hd.degree = 0;
        return hd;
    }
    hd.degree = ueval(num, Rat(1)).to_long();
    // P(m) = sum_j q_j * C(m - j + D - 1, D - 1)
    UPoly P;
    for (size_t j = 0; j < num.size(); ++j) {
        if (num[j].is_zero())
            continue;
        UPoly term = binom_poly(-static_cast<int>(j) + D - 1, D - 1);
        for (auto& c : term)
            c *= num[j];
        P = uadd(P, term);
    }
    hd.hilbert_poly = P;
    if (hd.dim_proj == 1) {
        Rat p0 = ueval(P, Rat(0));
        Rat pa = Rat(1) - p0;
        if (!pa.is_integer())
            fail(Errc::internal, "arithmetic genus not integral");
        hd.p_a = pa.to_long();
    }
    return hd;
}

std::vector<long> hilbert_function_prefix(const Ideal& I, int upto,
                                          const GBConfig& cfg) {
    const size_t n = I.ring->size();
    std::vector<Mono> leads;
    if (!I.is_zero()) {
        if (!I.is_homogeneous())
            fail(Errc::non_homogeneous, "hilbert_function_prefix: not homogeneous");
        GroebnerBasis gb = groebner(I, MonomialOrder::grevlex(n), cfg);
        leads = gb.lead_monomials();
    }
    UPoly num = hilbert_numerator(leads, n);
    // expand num(t) / (1-t)^n to degree `upto`
    std::vector<Rat> inv(static_cast<size_t>(upto) + 1, Rat(0));
    for (int k = 0; k <= upto; ++k) {
        // C(n - 1 + k, n - 1)
        Rat b(1);
        for (size_t i = 1; i < n; ++i)
            b = b * Rat(static_cast<long>(k) + static_cast<long>(i)) / Rat(static_cast<long>(i));
        inv[static_cast<size_t>(k)] = b;
    }
    std::vector<long> out(static_cast<size_t>(upto) + 1, 0);
    for (int m = 0; m <= upto; ++m) {
        Rat acc(0);
        for (size_t j = 0; j < num.size() && static_cast<int>(j) <= m; ++j)
            acc += num[j] * inv[static_cast<size_t>(m) - j];
        out[static_cast<size_t>(m)] = acc.to_long();
    }
    return out;
}

bool lead_ideal_zero_dimensional(const std::vector<Mono>& leads, size_t nvars) {
    for (size_t v = 0; v < nvars; ++v) {
        bool pure = false;
        for (const auto& m : leads) {
            bool only_v = m[v] > 0;
            for (size_t u = 0; u < nvars && only_v; ++u)
                if (u != v && m[u] > 0)
                    only_v = false;
            if (only_v) {
                pure = true;
                break;
            }
        }
        if (!pure)
            return false;
    }
    return true;
}

long count_standard_monomials(const std::vector<Mono>& leads, size_t nvars) {
    // bounds: minimal pure-power exponents
    std::vector<int> bound(nvars, 0);
    for (size_t v = 0; v < nvars; ++v) {
        int best = -1;
        for (const auto& m : leads) {
            bool only_v = m[v] > 0;
            for (size_t u = 0; u < nvars && only_v; ++u)
                if (u != v && m[u] > 0)
                    only_v = false;
            if (only_v && (best < 0 || m[v] < best))
                best = m[v];
        }
        if (best < 0)
            fail(Errc::positive_dimensional, "lead ideal not zero-dimensional");
        bound[v] = best;
    }
    long count = 0;
    std::vector<int> e(nvars, 0);
    while (true) {
        Mono m(e);
        bool divisible = false;
        for (const auto& g : leads)
            if (g.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible)
            ++count;
        size_t pos = 0;
        while (pos < nvars) {
            if (++e[pos] < bound[pos])
                break;
            e[pos] = 0;
            ++pos;
        }
        if (pos == nvars)
            break;
    }
    return count;
}

long zero_dim_degree(const Ideal& I, const GBConfig& cfg) {
    if (I.is_zero())
        fail(Errc::positive_dimensional, "zero ideal is not zero-dimensional");
    const size_t n = I.ring->size();
    GroebnerBasis gb = groebner(I, MonomialOrder::grevlex(n), cfg);
    if (gb.is_unit())
        return 0;
    std::vector<Mono> leads = gb.lead_monomials();
    if (!lead_ideal_zero_dimensional(leads, n))
        fail(Errc::positive_dimensional,
             "ideal does not define a zero-dimensional scheme");
    return count_standard_monomials(leads, n);
}

} // namespace folia
