#include "folia/rational.hpp"

#include "folia/error.hpp"

#include <ostream>

namespace folia {

Rat::Rat(long num, long den) {
    if (den == 0)
        fail(Errc::internal, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        fail(Errc::parse_error, "bad rational literal: '" + s + "'");
    v.canonicalize();
    return Rat(std::move(v));
}

Rat Rat::operator-() const { return Rat(mpq_class(-v_)); }
Rat Rat::operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
Rat Rat::operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
Rat Rat::operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }

Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero())
        fail(Errc::internal, "rational division by zero");
    return Rat(mpq_class(v_ / o.v_));
}

Rat& Rat::operator+=(const Rat& o) { v_ += o.v_; return *this; }
Rat& Rat::operator-=(const Rat& o) { v_ -= o.v_; return *this; }
Rat& Rat::operator*=(const Rat& o) { v_ *= o.v_; return *this; }

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero())
        fail(Errc::internal, "rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inv() const {
    if (is_zero())
        fail(Errc::internal, "inverse of zero");
    return Rat(mpq_class(1 / v_));
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(v_))); }

long Rat::to_long() const {
    if (!is_integer())
        fail(Errc::internal, "to_long on non-integer " + str());
    if (!v_.get_num().fits_slong_p())
        fail(Errc::internal, "integer too large for long: " + str());
    return v_.get_num().get_si();
}

std::string Rat::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::num_str() const { return v_.get_num().get_str(); }
std::string Rat::den_str() const { return v_.get_den().get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::ring_mismatch: return "ring_mismatch";
    case Errc::arity_mismatch: return "arity_mismatch";
    case Errc::cap_mismatch: return "cap_mismatch";
    case Errc::empty_input: return "empty_input";
    case Errc::grade_overflow: return "grade_overflow";
    case Errc::non_homogeneous: return "non_homogeneous";
    case Errc::euler_fails: return "euler_fails";
    case Errc::not_integrable: return "not_integrable";
    case Errc::codimension_one_part: return "codimension_one_part";
    case Errc::degree_mismatch: return "degree_mismatch";
    case Errc::not_zero_dimensional: return "not_zero_dimensional";
    case Errc::positive_dimensional: return "positive_dimensional";
    case Errc::component_not_contained: return "component_not_contained";
    case Errc::param_not_on_component: return "param_not_on_component";
    case Errc::entirely_non_kupka: return "entirely_non_kupka";
    case Errc::point_not_singular: return "point_not_singular";
    case Errc::genus_undefined: return "genus_undefined";
    case Errc::weight_condition: return "weight_condition";
    case Errc::descent_violation: return "descent_violation";
    case Errc::non_reduced: return "non_reduced";
    case Errc::not_coprime: return "not_coprime";
    case Errc::singular_germ: return "singular_germ";
    case Errc::inconsistent_system: return "inconsistent_system";
    case Errc::rot_not_isolated: return "rot_not_isolated";
    case Errc::origin_not_a_zero: return "origin_not_a_zero";
    case Errc::odd_degree: return "odd_degree";
    case Errc::parse_error: return "parse_error";
    case Errc::undeclared_identifier: return "undeclared_identifier";
    case Errc::nonlinear_differential: return "nonlinear_differential";
    case Errc::unsupported: return "unsupported";
    case Errc::cancelled: return "cancelled";
    case Errc::inconclusive: return "inconclusive";
    case Errc::internal: return "internal";
    }
    return "unknown";
}

} // namespace folia
