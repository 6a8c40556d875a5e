#pragma once

#include "folia/poly.hpp"

namespace folia {

// Truncated multivariate power series: an MPoly with every term of total
// degree <= cap. Arithmetic re-truncates; mixing caps or rings is an error.
class TruncSeries {
  public:
    TruncSeries() = default;
    TruncSeries(MPoly body, int cap);

    const MPoly& body() const { return body_; }
    int cap() const { return cap_; }
    const RingPtr& ring() const { return body_.ring(); }
    bool is_zero() const { return body_.is_zero(); }

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;

    // Multiplicative inverse; requires a unit (nonzero constant term).
    TruncSeries inverse() const;

    // Composition: substitute images (each with zero constant term unless
    // the caller accepts cap loss) and re-truncate to this cap.
    TruncSeries substituted(const std::vector<MPoly>& images) const;

    bool operator==(const TruncSeries& o) const {
        return cap_ == o.cap_ && body_ == o.body_;
    }

    std::string str() const;

  private:
    void check_compatible(const TruncSeries& o) const;

    MPoly body_;
    int cap_ = 0;
};

enum class SeriesArithKind { add, mul };

TruncSeries series_arith(const TruncSeries& a, const TruncSeries& b,
                         SeriesArithKind kind);

} // namespace folia
