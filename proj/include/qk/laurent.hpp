// laurent.hpp — the equivariant coefficient ring: exact Laurent polynomials
// with BigInt coefficients in the simple-root character variables z_1..z_{n-1},
// where z_r is the class of the one-dimensional torus representation of
// weight e_{r+1} - e_r.
//
// Values are immutable in spirit: every operation returns a canonical result
// with zero terms pruned.

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qk/bigint.hpp"

namespace qk {

// Exponent vector of a Laurent monomial, packed one biased byte per variable
// so that string comparison is the lexicographic order on (e_1, ..., e_v).
// Exponents are limited to [-64, 63]; iterated divisor products stay far
// below that, and the guard turns a breach into a loud failure.
class Monomial {
public:
    explicit Monomial(int vars);

    int vars() const { return static_cast<int>(packed_.size()); }
    int exponent(int r) const; // r in 1..vars
    void set_exponent(int r, int e);

    bool is_unit() const;
    Monomial times(const Monomial& o) const;
    Monomial reversed() const; // z_r -> z_{vars+1-r}

    auto operator<=>(const Monomial& o) const = default;

private:
    static constexpr int kBias = 64;
    std::string packed_;
};

class Laurent {
public:
    using Term = std::pair<Monomial, BigInt>;

    explicit Laurent(int vars) : vars_(vars) {}
    static Laurent constant(int vars, BigInt c);
    static Laurent variable(int vars, int r); // z_r, r in 1..vars
    static Laurent monomial(Monomial m, BigInt c);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_single_term() const { return terms_.size() == 1; }
    const std::vector<Term>& terms() const { return terms_; }

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);

    bool operator==(const Laurent& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }

    // Evaluation at z_1 = ... = z_v = 1; a ring homomorphism.
    BigInt eval_all_ones() const;

    // The variable permutation z_r -> z_{v+1-r}; an involutive automorphism.
    Laurent variables_reversed() const;

    bool has_negative_exponent() const;
    bool has_negative_coefficient() const;

    std::string str() const;

private:
    int vars_;
    std::vector<Term> terms_; // sorted by monomial, nonzero coefficients

    friend Laurent merge_terms(int vars, std::vector<Laurent::Term> raw);
};

// The Laurent monomial of the character e_a - e_b (a, b in 1..n): the product
// of z_r over r = b..a-1 when a > b, the inverse product when a < b, 1 when
// a = b.
Laurent char_monomial(int n, int a, int b);

// Rewrites a genuine polynomial in the z_r (no negative exponents) in the
// shifted variables y_r = z_r - 1, i.e. returns p with p(y) = c(y+1).
// Returns nullopt when some exponent is negative.
std::optional<Laurent> to_positivity_basis(const Laurent& c);

// Inverse substitution y_r = z_r - 1 applied the other way: returns c with
// c(z) = p(z-1). Requires nonnegative exponents.
std::optional<Laurent> from_positivity_basis(const Laurent& p);

} // namespace qk
