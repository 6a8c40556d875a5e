#include "folia/monomial.hpp"

#include "folia/error.hpp"

#include <algorithm>
#include <numeric>

namespace folia {

Mono::Mono(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_) {
        if (x < 0)
            fail(Errc::internal, "negative exponent");
        deg_ += x;
    }
}

Mono Mono::operator*(const Mono& o) const {
    if (e_.size() != o.e_.size())
        fail(Errc::ring_mismatch, "monomial size mismatch");
    Mono r(e_.size());
    for (size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = e_[i] + o.e_[i];
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Mono::divides(const Mono& o) const {
    if (e_.size() != o.e_.size())
        fail(Errc::ring_mismatch, "monomial size mismatch");
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i])
            return false;
    return true;
}

Mono Mono::div(const Mono& o) const {
    Mono r(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] = e_[i] - o.e_[i];
        if (r.e_[i] < 0)
            fail(Errc::internal, "monomial division not exact");
    }
    r.deg_ = deg_ - o.deg_;
    return r;
}

Mono Mono::lcm(const Mono& a, const Mono& b) {
    Mono r(a.e_.size());
    for (size_t i = 0; i < a.e_.size(); ++i)
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.deg_ = std::accumulate(r.e_.begin(), r.e_.end(), 0);
    return r;
}

Mono Mono::gcd(const Mono& a, const Mono& b) {
    Mono r(a.e_.size());
    for (size_t i = 0; i < a.e_.size(); ++i)
        r.e_[i] = std::min(a.e_[i], b.e_[i]);
    r.deg_ = std::accumulate(r.e_.begin(), r.e_.end(), 0);
    return r;
}

bool Mono::coprime(const Mono& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0)
            return false;
    return true;
}

Mono Mono::var(size_t nvars, size_t i, int e) {
    Mono r(nvars);
    r.e_[i] = e;
    r.deg_ = e;
    return r;
}

int grevlex_cmp(const Mono& a, const Mono& b) {
    if (a.deg() != b.deg())
        return a.deg() > b.deg() ? 1 : -1;
    for (size_t i = a.nvars(); i-- > 0;) {
        int d = a[i] - b[i];
        if (d != 0)
            return d < 0 ? 1 : -1;
    }
    return 0;
}

namespace {

std::vector<int> identity_perm(size_t n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// grevlex on the permuted slice [from, to) of the exponent vectors.
int grevlex_slice_cmp(const Mono& a, const Mono& b, const std::vector<int>& perm,
                      size_t from, size_t to) {
    int da = 0, db = 0;
    for (size_t r = from; r < to; ++r) {
        da += a[perm[r]];
        db += b[perm[r]];
    }
    if (da != db)
        return da > db ? 1 : -1;
    for (size_t r = to; r-- > from;) {
        int d = a[perm[r]] - b[perm[r]];
        if (d != 0)
            return d < 0 ? 1 : -1;
    }
    return 0;
}

} // namespace

MonomialOrder MonomialOrder::grevlex(size_t n) {
    return MonomialOrder(OrderKind::grevlex, identity_perm(n), 0);
}

MonomialOrder MonomialOrder::lex(size_t n) {
    return MonomialOrder(OrderKind::lex, identity_perm(n), 0);
}

MonomialOrder MonomialOrder::lex(size_t n, std::vector<int> perm) {
    if (perm.size() != n)
        fail(Errc::arity_mismatch, "lex permutation size mismatch");
    return MonomialOrder(OrderKind::lex, std::move(perm), 0);
}

MonomialOrder MonomialOrder::local_antigraded(size_t n) {
    return MonomialOrder(OrderKind::local_antigraded, identity_perm(n), 0);
}

MonomialOrder MonomialOrder::elim_first(size_t n, size_t block) {
    if (block > n)
        fail(Errc::arity_mismatch, "elimination block too large");
    return MonomialOrder(OrderKind::elim, identity_perm(n), block);
}

MonomialOrder MonomialOrder::elim_trailing(size_t n, size_t k) {
    if (k > n)
        fail(Errc::arity_mismatch, "elimination block too large");
    std::vector<int> perm;
    perm.reserve(n);
    for (size_t i = n - k; i < n; ++i)
        perm.push_back(static_cast<int>(i));
    for (size_t i = 0; i < n - k; ++i)
        perm.push_back(static_cast<int>(i));
    return MonomialOrder(OrderKind::elim, std::move(perm), k);
}

int MonomialOrder::compare(const Mono& a, const Mono& b) const {
    const size_t n = perm_.size();
    switch (kind_) {
    case OrderKind::grevlex:
        return grevlex_slice_cmp(a, b, perm_, 0, n);
    case OrderKind::lex:
        for (size_t r = 0; r < n; ++r) {
            int d = a[perm_[r]] - b[perm_[r]];
            if (d != 0)
                return d > 0 ? 1 : -1;
        }
        return 0;
    case OrderKind::local_antigraded: {
        if (a.deg() != b.deg())
            return a.deg() < b.deg() ? 1 : -1;
        for (size_t r = n; r-- > 0;) {
            int d = a[perm_[r]] - b[perm_[r]];
            if (d != 0)
                return d < 0 ? 1 : -1;
        }
        return 0;
    }
    case OrderKind::elim: {
        int c = grevlex_slice_cmp(a, b, perm_, 0, block_);
        if (c != 0)
            return c;
        return grevlex_slice_cmp(a, b, perm_, block_, n);
    }
    }
    return 0;
}

std::string MonomialOrder::str() const {
    switch (kind_) {
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::lex: return "lex";
    case OrderKind::local_antigraded: return "local";
    case OrderKind::elim: return "elim(" + std::to_string(block_) + ")";
    }
    return "?";
}

} // namespace folia
