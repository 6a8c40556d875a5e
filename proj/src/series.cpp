#include "folia/series.hpp"

#include "folia/error.hpp"

namespace folia {

TruncSeries::TruncSeries(MPoly body, int cap) : body_(std::move(body)), cap_(cap) {
    if (cap < 0)
        fail(Errc::internal, "negative series cap");
    body_ = body_.truncated(cap_);
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
    if (cap_ != o.cap_)
        fail(Errc::cap_mismatch, "series caps differ");
    if (!body_.ring() || !o.body_.ring() || !(*body_.ring() == *o.body_.ring()))
        fail(Errc::ring_mismatch, "series rings differ");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    check_compatible(o);
    return TruncSeries(body_ + o.body_, cap_);
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    check_compatible(o);
    return TruncSeries(body_ - o.body_, cap_);
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    check_compatible(o);
    return TruncSeries((body_ * o.body_).truncated(cap_), cap_);
}

TruncSeries TruncSeries::inverse() const {
    MPoly c0_part = body_.graded_part(0);
    if (c0_part.is_zero())
        fail(Errc::internal, "series inverse of a non-unit");
    Rat c0 = c0_part.constant_value();
    // body = c0 (1 - r), ord(r) >= 1; inverse = (1/c0) sum r^j
    MPoly one(ring(), Rat(1));
    MPoly r = one - body_ * c0.inv();
    MPoly acc = one;
    MPoly pw = one;
    for (int j = 1; j <= cap_; ++j) {
        pw = (pw * r).truncated(cap_);
        if (pw.is_zero())
            break;
        acc += pw;
    }
    return TruncSeries(acc * c0.inv(), cap_);
}

TruncSeries TruncSeries::substituted(const std::vector<MPoly>& images) const {
    return TruncSeries(body_.substitute(images).truncated(cap_), cap_);
}

std::string TruncSeries::str() const {
    return body_.str() + " + O(deg " + std::to_string(cap_ + 1) + ")";
}

TruncSeries series_arith(const TruncSeries& a, const TruncSeries& b,
                         SeriesArithKind kind) {
    switch (kind) {
    case SeriesArithKind::add: return a + b;
    case SeriesArithKind::mul: return a * b;
    }
    fail(Errc::internal, "bad series arith kind");
}

} // namespace folia
