#include "folia/poly.hpp"

#include "folia/error.hpp"

#include <algorithm>
#include <sstream>

namespace folia {

int Ring::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name)
            return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const Ring>(Ring{std::move(vars)});
}

RingPtr p3_ring() {
    static RingPtr r = make_ring({"x0", "x1", "x2", "x3"});
    return r;
}

RingPtr affine3_ring() {
    static RingPtr r = make_ring({"x", "y", "z"});
    return r;
}

RingPtr st_ring() {
    static RingPtr r = make_ring({"s", "t"});
    return r;
}

MPoly::MPoly(RingPtr ring, const Rat& c) : ring_(std::move(ring)) {
    if (!c.is_zero())
        terms_.emplace(Mono(ring_->size()), c);
}

MPoly MPoly::var(const RingPtr& ring, size_t i, int e) {
    MPoly p(ring);
    if (i >= ring->size())
        fail(Errc::arity_mismatch, "variable index out of range");
    p.terms_.emplace(Mono::var(ring->size(), i, e), Rat(1));
    return p;
}

MPoly MPoly::term(const RingPtr& ring, Mono m, const Rat& c) {
    MPoly p(ring);
    if (m.nvars() != ring->size())
        fail(Errc::ring_mismatch, "monomial/ring size mismatch");
    if (!c.is_zero())
        p.terms_.emplace(std::move(m), c);
    return p;
}

void MPoly::check_same_ring(const MPoly& o) const {
    if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_))
        fail(Errc::ring_mismatch, "polynomials live in different rings");
}

std::optional<int> MPoly::degree() const {
    if (terms_.empty())
        return std::nullopt;
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.deg());
    return d;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat MPoly::constant_value() const {
    if (terms_.empty())
        return Rat(0);
    if (!is_constant())
        fail(Errc::internal, "constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    int d = terms_.begin()->first.deg();
    return is_homogeneous_of(d);
}

bool MPoly::is_homogeneous_of(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.deg() != d)
            return false;
    return true;
}

const Rat& MPoly::coeff(const Mono& m) const {
    static const Rat zero(0);
    auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
}

void MPoly::add_term(const Mono& m, const Rat& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(ring_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    r -= o;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_same_ring(o);
    MPoly r(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly r(ring_);
    if (c.is_zero())
        return r;
    for (const auto& [m, cc] : terms_)
        r.terms_.emplace(m, cc * c);
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    if (!ring_ || !o.ring_)
        return terms_.empty() && o.terms_.empty();
    if (!(*ring_ == *o.ring_))
        return false;
    return terms_ == o.terms_;
}

MPoly MPoly::pow(int e) const {
    if (e < 0)
        fail(Errc::internal, "negative power");
    MPoly r(ring_, Rat(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return r;
}

MPoly MPoly::derivative(size_t var) const {
    if (var >= nvars())
        fail(Errc::arity_mismatch, "derivative: variable index out of range");
    MPoly r(ring_);
    for (const auto& [m, c] : terms_) {
        int e = m[var];
        if (e == 0)
            continue;
        std::vector<int> exps = m.exps();
        exps[var] -= 1;
        r.add_term(Mono(std::move(exps)), c * Rat(e));
    }
    return r;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    if (images.size() != nvars())
        fail(Errc::arity_mismatch, "substitute: one image per variable required");
    RingPtr target;
    for (const auto& im : images) {
        if (!target)
            target = im.ring();
        else if (!(*target == *im.ring()))
            fail(Errc::ring_mismatch, "substitute: images in different rings");
    }
    if (!target)
        fail(Errc::arity_mismatch, "substitute: empty image list");

    MPoly r(target);
    for (const auto& [m, c] : terms_) {
        MPoly t(target, c);
        for (size_t i = 0; i < images.size(); ++i)
            if (m[i] > 0)
                t = t * images[i].pow(m[i]);
        r += t;
    }
    return r;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != nvars())
        fail(Errc::arity_mismatch, "eval: wrong point dimension");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < point.size(); ++i)
            for (int k = 0; k < m[i]; ++k)
                t *= point[i];
        acc += t;
    }
    return acc;
}

MPoly MPoly::truncated(int cap) const {
    MPoly r(ring_);
    for (const auto& [m, c] : terms_)
        if (m.deg() <= cap)
            r.terms_.emplace(m, c);
    return r;
}

MPoly MPoly::graded_part(int d) const {
    MPoly r(ring_);
    for (const auto& [m, c] : terms_)
        if (m.deg() == d)
            r.terms_.emplace(m, c);
    return r;
}

MPoly MPoly::leading_coeff_normalized() const {
    if (terms_.empty())
        return *this;
    return *this * terms_.begin()->second.inv();
}

std::string MPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0)
                a = -a;
        }
        bool coeff_shown = !(a.is_one() && !m.is_one());
        if (coeff_shown)
            os << a.str();
        bool any_var = false;
        for (size_t i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0)
                continue;
            if (coeff_shown || any_var)
                os << "*";
            os << ring_->vars[i];
            if (m[i] > 1)
                os << "^" << m[i];
            any_var = true;
        }
        first = false;
    }
    return os.str();
}

MPoly poly_arith(const MPoly& a, const MPoly& b, PolyArithKind kind) {
    switch (kind) {
    case PolyArithKind::add: return a + b;
    case PolyArithKind::sub: return a - b;
    case PolyArithKind::mul: return a * b;
    }
    fail(Errc::internal, "bad arith kind");
}

MPoly partial_derivative(const MPoly& p, size_t var) { return p.derivative(var); }

MPoly substitute(const MPoly& p, const std::vector<MPoly>& images) {
    return p.substitute(images);
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
    std::vector<std::string> vars = ring->vars;
    for (const auto& e : extra)
        vars.push_back(e);
    return make_ring(std::move(vars));
}

MPoly promote(const MPoly& p, const RingPtr& bigger) {
    const size_t n = p.nvars();
    if (bigger->size() < n)
        fail(Errc::ring_mismatch, "promote: target ring smaller");
    for (size_t i = 0; i < n; ++i)
        if (bigger->vars[i] != p.ring()->vars[i])
            fail(Errc::ring_mismatch, "promote: ring is not a prefix extension");
    MPoly r(bigger);
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e = m.exps();
        e.resize(bigger->size(), 0);
        r.add_term(Mono(std::move(e)), c);
    }
    return r;
}

MPoly restrict_back(const MPoly& p, const RingPtr& smaller) {
    const size_t n = smaller->size();
    if (p.nvars() < n)
        fail(Errc::ring_mismatch, "restrict_back: source ring smaller");
    MPoly r(smaller);
    for (const auto& [m, c] : p.terms()) {
        for (size_t i = n; i < p.nvars(); ++i)
            if (m[i] != 0)
                fail(Errc::internal, "restrict_back: trailing variable occurs");
        std::vector<int> e(m.exps().begin(), m.exps().begin() + n);
        r.add_term(Mono(std::move(e)), c);
    }
    return r;
}

} // namespace folia
