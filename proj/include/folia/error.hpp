#pragma once

#include <stdexcept>
#include <string>

namespace folia {

enum class Errc {
    ring_mismatch,
    arity_mismatch,
    cap_mismatch,
    empty_input,
    grade_overflow,
    non_homogeneous,
    euler_fails,
    not_integrable,
    codimension_one_part,
    degree_mismatch,
    not_zero_dimensional,
    positive_dimensional,
    component_not_contained,
    param_not_on_component,
    entirely_non_kupka,
    point_not_singular,
    genus_undefined,
    weight_condition,
    descent_violation,
    non_reduced,
    not_coprime,
    singular_germ,
    inconsistent_system,
    rot_not_isolated,
    origin_not_a_zero,
    odd_degree,
    parse_error,
    undeclared_identifier,
    nonlinear_differential,
    unsupported,
    cancelled,
    inconclusive,
    internal,
};

const char* errc_name(Errc c);

// All library failures are reported through this type; the code
// distinguishes conditions the spec of each operation names.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace folia
