#include "folia/forms.hpp"

#include "folia/error.hpp"

#include <algorithm>
#include <sstream>

namespace folia {

PolyForm::PolyForm(RingPtr ring, int grade) : grade_(grade), ring_(std::move(ring)) {
    if (grade_ < 0 || grade_ > static_cast<int>(ring_->size()))
        fail(Errc::grade_overflow,
             "form grade " + std::to_string(grade_) + " out of range");
}

PolyForm PolyForm::scalar(const MPoly& p) {
    PolyForm f(p.ring(), 0);
    if (!p.is_zero())
        f.comps_.emplace(IdxTuple{}, p);
    return f;
}

PolyForm PolyForm::d_var(const RingPtr& ring, size_t i) {
    PolyForm f(ring, 1);
    f.comps_.emplace(IdxTuple{static_cast<int>(i)}, MPoly(ring, Rat(1)));
    return f;
}

const MPoly& PolyForm::comp(const IdxTuple& t) const {
    static const MPoly zero;
    auto it = comps_.find(t);
    return it == comps_.end() ? zero : it->second;
}

void PolyForm::add_comp(const IdxTuple& t, const MPoly& p) {
    if (static_cast<int>(t.size()) != grade_)
        fail(Errc::internal, "component tuple length != grade");
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] >= t[i + 1])
            fail(Errc::internal, "component tuple not strictly increasing");
    if (p.is_zero())
        return;
    auto [it, inserted] = comps_.emplace(t, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero())
            comps_.erase(it);
    }
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
    if (grade_ != o.grade_ || !(*ring_ == *o.ring_))
        fail(Errc::ring_mismatch, "form addition: grade or ring mismatch");
    PolyForm r = *this;
    for (const auto& [t, p] : o.comps_)
        r.add_comp(t, p);
    return r;
}

PolyForm PolyForm::operator-(const PolyForm& o) const { return *this + (-o); }

PolyForm PolyForm::operator-() const {
    PolyForm r(ring_, grade_);
    for (const auto& [t, p] : comps_)
        r.comps_.emplace(t, -p);
    return r;
}

PolyForm PolyForm::operator*(const MPoly& s) const {
    PolyForm r(ring_, grade_);
    for (const auto& [t, p] : comps_) {
        MPoly q = p * s;
        if (!q.is_zero())
            r.comps_.emplace(t, std::move(q));
    }
    return r;
}

PolyForm PolyForm::operator*(const Rat& c) const {
    return *this * MPoly(ring_, c);
}

bool PolyForm::operator==(const PolyForm& o) const {
    return grade_ == o.grade_ && *ring_ == *o.ring_ && comps_ == o.comps_;
}

PolyForm PolyForm::truncated(int cap) const {
    PolyForm r(ring_, grade_);
    for (const auto& [t, p] : comps_) {
        MPoly q = p.truncated(cap);
        if (!q.is_zero())
            r.comps_.emplace(t, std::move(q));
    }
    return r;
}

PolyForm PolyForm::graded_part(int d) const {
    PolyForm r(ring_, grade_);
    for (const auto& [t, p] : comps_) {
        MPoly q = p.graded_part(d);
        if (!q.is_zero())
            r.comps_.emplace(t, std::move(q));
    }
    return r;
}

std::optional<int> PolyForm::coeff_degree() const {
    std::optional<int> d;
    for (const auto& [t, p] : comps_) {
        auto pd = p.degree();
        if (pd && (!d || *pd > *d))
            d = pd;
    }
    return d;
}

std::optional<int> PolyForm::coeff_order() const {
    std::optional<int> d;
    for (const auto& [t, p] : comps_)
        for (const auto& [m, c] : p.terms())
            if (!d || m.deg() < *d)
                d = m.deg();
    return d;
}

std::string PolyForm::str() const {
    if (comps_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, p] : comps_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << p.str() << ")";
        for (size_t i = 0; i < t.size(); ++i)
            os << (i ? "^" : " ") << "d" << ring_->vars[t[i]];
    }
    return os.str();
}

PolyVectorField::PolyVectorField(RingPtr ring)
    : ring_(std::move(ring)), comps_(ring_->size(), MPoly(ring_)) {}

PolyVectorField::PolyVectorField(RingPtr ring, std::vector<MPoly> comps)
    : ring_(std::move(ring)), comps_(std::move(comps)) {
    if (comps_.size() != ring_->size())
        fail(Errc::arity_mismatch, "vector field component count != variable count");
}

bool PolyVectorField::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero())
            return false;
    return true;
}

std::string PolyVectorField::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < comps_.size(); ++i)
        os << (i ? ", " : "") << comps_[i].str();
    os << ")";
    return os.str();
}

namespace {

// Merge two strictly increasing tuples; returns false when they share an
// index. `sign` picks up (-1) per transposition needed to sort a|b.
bool merge_tuples(const PolyForm::IdxTuple& a, const PolyForm::IdxTuple& b,
                  PolyForm::IdxTuple& out, int& sign) {
    out.clear();
    out.reserve(a.size() + b.size());
    sign = 1;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return false;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining entries of a
            if ((a.size() - i) % 2 == 1)
                sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size())
        out.push_back(a[i++]);
    while (j < b.size())
        out.push_back(b[j++]);
    return true;
}

} // namespace

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    if (!(*a.ring() == *b.ring()))
        fail(Errc::ring_mismatch, "wedge: rings differ");
    const int n = static_cast<int>(a.nvars());
    if (a.grade() + b.grade() > n)
        fail(Errc::grade_overflow,
             "wedge: grades " + std::to_string(a.grade()) + "+" +
                 std::to_string(b.grade()) + " exceed variable count " +
                 std::to_string(n));
    PolyForm r(a.ring(), a.grade() + b.grade());
    PolyForm::IdxTuple merged;
    int sign;
    for (const auto& [ta, pa] : a.comps())
        for (const auto& [tb, pb] : b.comps()) {
            if (!merge_tuples(ta, tb, merged, sign))
                continue;
            MPoly prod = pa * pb;
            if (sign < 0)
                prod = -prod;
            r.add_comp(merged, prod);
        }
    return r;
}

PolyForm ext_d(const PolyForm& a) {
    const int n = static_cast<int>(a.nvars());
    if (a.grade() >= n)
        fail(Errc::grade_overflow, "ext_d: grade already maximal");
    PolyForm r(a.ring(), a.grade() + 1);
    for (const auto& [t, p] : a.comps()) {
        for (int i = 0; i < n; ++i) {
            if (std::binary_search(t.begin(), t.end(), i))
                continue;
            MPoly dp = p.derivative(static_cast<size_t>(i));
            if (dp.is_zero())
                continue;
            PolyForm::IdxTuple nt = t;
            auto pos = std::lower_bound(nt.begin(), nt.end(), i);
            size_t idx = static_cast<size_t>(pos - nt.begin());
            nt.insert(pos, i);
            if (idx % 2 == 1)
                dp = -dp;
            r.add_comp(nt, dp);
        }
    }
    return r;
}

PolyForm contract(const PolyVectorField& x, const PolyForm& a) {
    if (!(*x.ring() == *a.ring()))
        fail(Errc::ring_mismatch, "contract: rings differ");
    if (a.grade() < 1)
        fail(Errc::grade_overflow, "contract: grade must be >= 1");
    PolyForm r(a.ring(), a.grade() - 1);
    for (const auto& [t, p] : a.comps()) {
        for (size_t k = 0; k < t.size(); ++k) {
            const MPoly& xk = x.comp(static_cast<size_t>(t[k]));
            if (xk.is_zero())
                continue;
            MPoly q = xk * p;
            if (k % 2 == 1)
                q = -q;
            PolyForm::IdxTuple nt;
            nt.reserve(t.size() - 1);
            for (size_t j = 0; j < t.size(); ++j)
                if (j != k)
                    nt.push_back(t[j]);
            r.add_comp(nt, q);
        }
    }
    return r;
}

MPoly pair_form_field(const PolyForm& omega, const PolyVectorField& x) {
    if (omega.grade() != 1)
        fail(Errc::grade_overflow, "pair_form_field: grade-1 form required");
    PolyForm c = contract(x, omega);
    return c.comp({});
}

PolyVectorField rot(const PolyForm& omega) {
    if (omega.nvars() != 3)
        fail(Errc::arity_mismatch, "rot: exactly 3 variables required");
    if (omega.grade() != 1)
        fail(Errc::grade_overflow, "rot: grade-1 form required");
    PolyForm dw = ext_d(omega);
    // i_X dx^dy^dz = X0 dy^dz - X1 dx^dz + X2 dx^dy
    PolyVectorField x(omega.ring());
    x.comp(0) = dw.comp({1, 2});
    x.comp(1) = -dw.comp({0, 2});
    x.comp(2) = dw.comp({0, 1});
    return x;
}

PolyVectorField euler_field(const RingPtr& ring) {
    PolyVectorField r(ring);
    for (size_t i = 0; i < ring->size(); ++i)
        r.comp(i) = MPoly::var(ring, i);
    return r;
}

PolyForm volume_form(const RingPtr& ring) {
    PolyForm v(ring, static_cast<int>(ring->size()));
    PolyForm::IdxTuple t(ring->size());
    for (size_t i = 0; i < ring->size(); ++i)
        t[i] = static_cast<int>(i);
    v.add_comp(t, MPoly(ring, Rat(1)));
    return v;
}

} // namespace folia
