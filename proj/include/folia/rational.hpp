#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace folia {

// Exact rational scalar backed by GMP. Invariants: always reduced to
// lowest terms, denominator > 0, zero is 0/1. Plain value semantics;
// no expression templates leak out of this header.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den);

    static Rat from_string(const std::string& s); // "n" or "n/d"

    Rat operator-() const;
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const; // o != 0

    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat inv() const; // 1/this, this != 0
    Rat abs() const;

    // Integer value; requires is_integer() and fit into long.
    long to_long() const;

    std::string str() const;     // "n" or "n/d"
    std::string num_str() const; // numerator as decimal string
    std::string den_str() const;

  private:
    explicit Rat(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat operator*(long a, const Rat& b) { return Rat(a) * b; }
inline Rat operator+(long a, const Rat& b) { return Rat(a) + b; }
inline Rat operator-(long a, const Rat& b) { return Rat(a) - b; }

} // namespace folia
