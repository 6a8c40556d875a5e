#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace folia {

// Exponent vector of fixed length (the ambient variable count).
class Mono {
  public:
    Mono() = default;
    explicit Mono(size_t nvars) : e_(nvars, 0) {}
    explicit Mono(std::vector<int> exps);

    size_t nvars() const { return e_.size(); }
    int deg() const { return deg_; }
    int operator[](size_t i) const { return e_[i]; }
    const std::vector<int>& exps() const { return e_; }

    bool is_one() const { return deg_ == 0; }

    Mono operator*(const Mono& o) const;
    bool divides(const Mono& o) const;    // this | o
    Mono div(const Mono& o) const;        // this / o, requires o | this
    static Mono lcm(const Mono& a, const Mono& b);
    static Mono gcd(const Mono& a, const Mono& b);
    bool coprime(const Mono& o) const;

    static Mono var(size_t nvars, size_t i, int e = 1);

    bool operator==(const Mono& o) const { return e_ == o.e_; }
    bool operator!=(const Mono& o) const { return e_ != o.e_; }

  private:
    std::vector<int> e_;
    int deg_ = 0;
};

// Compare two monomials under graded reverse lexicographic order with the
// identity permutation; returns +1 if a > b, 0, or -1. This is the canonical
// storage and rendering order for MPoly terms.
int grevlex_cmp(const Mono& a, const Mono& b);

struct MonoGrevlexGreater {
    bool operator()(const Mono& a, const Mono& b) const {
        return grevlex_cmp(a, b) > 0;
    }
};

enum class OrderKind {
    grevlex,
    lex,
    local_antigraded, // smaller total degree first, grevlex tie-break (Mora)
    elim,             // block order: leading block grevlex, then grevlex
};

// Total order on monomials compatible with multiplication. `perm[r]` is the
// variable ranked r-th (rank 0 most significant). For OrderKind::elim the
// first `block` ranked variables are compared first as a grevlex block.
class MonomialOrder {
  public:
    static MonomialOrder grevlex(size_t n);
    static MonomialOrder lex(size_t n);
    static MonomialOrder lex(size_t n, std::vector<int> perm);
    static MonomialOrder local_antigraded(size_t n);
    static MonomialOrder elim_first(size_t n, size_t block);
    // Eliminate the trailing k variables: they form the leading block.
    static MonomialOrder elim_trailing(size_t n, size_t k);

    OrderKind kind() const { return kind_; }
    size_t nvars() const { return perm_.size(); }
    size_t block() const { return block_; }
    const std::vector<int>& perm() const { return perm_; }

    // A local order has non-trivial units (1 is not the smallest monomial).
    bool is_local() const { return kind_ == OrderKind::local_antigraded; }

    int compare(const Mono& a, const Mono& b) const; // +1 if a > b
    bool greater(const Mono& a, const Mono& b) const { return compare(a, b) > 0; }
    bool less(const Mono& a, const Mono& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && perm_ == o.perm_ && block_ == o.block_;
    }

    std::string str() const;

  private:
    MonomialOrder(OrderKind k, std::vector<int> perm, size_t block)
        : kind_(k), perm_(std::move(perm)), block_(block) {}

    OrderKind kind_;
    std::vector<int> perm_;
    size_t block_ = 0;
};

} // namespace folia
