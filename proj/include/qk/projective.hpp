// projective.hpp — the quantum K-theory of the projective space P^(n-1) as a
// target: basis indexed by k >= 0 (representing q^(k div n) times the class
// of a codimension-(k mod n) linear subspace), divisor products, and the ring
// homomorphism induced by the first projection of the incidence variety.

#pragma once

#include <map>
#include <string>

#include "qk/laurent.hpp"
#include "qk/qkring.hpp"

namespace qk {

class ProjElement {
public:
    explicit ProjElement(int n);

    static ProjElement basis(int n, int k); // O^k, k >= 0

    int n() const { return n_; }
    int vars() const { return n_ - 1; }
    const std::map<int, Laurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(int k, const Laurent& c);
    ProjElement& operator+=(const ProjElement& o);

    // True iff supported on O^0 and O^1.
    bool is_divisor_combination() const;

    bool operator==(const ProjElement& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

    std::string str() const;

private:
    int n_;
    std::map<int, Laurent> terms_;
};

// Each basis term of degree (d1,d2) with normalized label [bi,bj] maps to
// index (bi - 1) + n*d1; the second quantum parameter specializes to 1 and
// coefficients pass through unchanged. Linear over the coefficient ring.
ProjElement project(const QkElement& e);

// Non-equivariant product is additive on indices. The equivariant product is
// only defined when one factor is a combination of O^0 and O^1; it follows
// the divisor product rule with the character subscript read through
// (k mod n) + 1.
ProjElement proj_mult(const ProjElement& a, const ProjElement& b, bool equivariant);

} // namespace qk
