// qkring.hpp — elements of the (torus-equivariant) quantum K-theory ring of
// Fl(1, n-1; n) with the quantum parameters inverted, and all of its products:
// the equivariant divisor product, its classical truncation, the
// non-equivariant closed product rule, general equivariant products through
// divisor-operator polynomials, dual-class expansion, the Euler pairing, and
// the involution induced by the diagram symmetry.

#pragma once

#include <compare>
#include <map>
#include <vector>

#include "qk/combinatorics.hpp"
#include "qk/laurent.hpp"

namespace qk {

// Canonical basis key: normalized label plus quantum degree. Map order is
// (degree, bar) lexicographic, which is also the canonical printing order.
struct BasisKey {
    int d1 = 0;
    int d2 = 0;
    int bi = 0;
    int bj = 0;

    Degree degree() const { return {d1, d2}; }
    auto operator<=>(const BasisKey&) const = default;
};

BasisKey basis_key(const TildeIndex& w);
TildeIndex key_index(const BasisKey& k, int n);

// Finite linear combination of basis classes with coefficients in the
// equivariant coefficient ring. Zero coefficients are pruned on every
// mutation; two elements are equal iff their canonical term maps agree.
class QkElement {
public:
    explicit QkElement(int n);

    static QkElement unit(int n);
    static QkElement basis(const TildeIndex& w);

    int n() const { return n_; }
    int vars() const { return n_ - 1; }
    const std::map<BasisKey, Laurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // True iff every stored index has degree (0,0).
    bool is_classical() const;

    void add(const BasisKey& key, const Laurent& c);
    void add(const TildeIndex& w, const Laurent& c);

    Laurent coefficient(const BasisKey& key) const; // zero when absent

    QkElement operator+(const QkElement& o) const;
    QkElement operator-(const QkElement& o) const;
    QkElement& operator+=(const QkElement& o);
    QkElement& operator-=(const QkElement& o);
    QkElement scaled(const Laurent& c) const;
    QkElement q_shifted(Degree d) const;

    // z -> 1 on every coefficient, pruning cancellations.
    QkElement specialized() const;

    bool operator==(const QkElement& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

private:
    int n_;
    std::map<BasisKey, Laurent> terms_;
};

// e * O^[k] for k = 1, 2 by the divisor product rule, extended linearly.
// Each basis index contributes at most 4 terms.
QkElement chevalley_mult(const QkElement& e, int k);

// The ordinary (non-quantum) K-theory divisor product: the divisor product
// rule with every output term of strictly larger degree discarded, applied
// per basis index preserving its incoming degree.
QkElement classical_divisor_mult(const QkElement& e, int k);

// Non-equivariant closed product rule on basis labels: one term
// O^[x,y] or three terms O^[x,y-1] + O^[x+1,y] - O^[x+1,y-1], with
// x = u.i + v.i - 1 and y = u.j + v.j - n; the branch is decided on the
// normalized entries.
QkElement lr_mult(const TildeIndex& u, const TildeIndex& v);

// Polynomial in the two commuting divisor-multiplication operators M1, M2
// with coefficients that are finite sums of (Laurent) * q^(degree). Applying
// the polynomial of a label u to any element by iterated divisor products
// yields multiplication by the class of u.
class DivisorPolynomial {
public:
    struct OperatorKey {
        int a = 0; // M1 exponent
        int b = 0; // M2 exponent
        auto operator<=>(const OperatorKey&) const = default;
    };
    using QCoefficient = std::map<Degree, Laurent>;

    explicit DivisorPolynomial(int n) : n_(n) {}

    static DivisorPolynomial one(int n);

    int n() const { return n_; }
    bool is_zero() const { return monomials_.empty(); }
    const std::map<OperatorKey, QCoefficient>& monomials() const { return monomials_; }

    void add(OperatorKey key, Degree d, const Laurent& c);

    DivisorPolynomial operator+(const DivisorPolynomial& o) const;
    DivisorPolynomial operator-(const DivisorPolynomial& o) const;
    DivisorPolynomial scaled(const Laurent& c) const;
    DivisorPolynomial q_scaled(Degree d) const;
    DivisorPolynomial times_operator(int k) const; // multiply by M1 or M2

    bool operator==(const DivisorPolynomial& o) const {
        return n_ == o.n_ && monomials_ == o.monomials_;
    }

private:
    int n_;
    std::map<OperatorKey, QCoefficient> monomials_;
};

// Memoized per (n, u); throws internal_error if the recursion exceeds
// depth 4n.
const DivisorPolynomial& divisor_polynomial(const WpIndex& u);

QkElement apply(const DivisorPolynomial& p, const QkElement& e);

// Bilinear product: each basis term of e1 acts on e2 through the operator
// polynomial of its normalized label, shifted by its degree. Commutative
// and associative with unit O^[1,n]; basis-pair products are memoized.
QkElement mult(const QkElement& e1, const QkElement& e2);

// Expansion of the dual basis element of a Schubert class over Schubert
// (non-opposite) classes: signed sum over i_set(v) with sign
// (-1)^(length(u) + length(v)). Kept distinct from QkElement, whose basis is
// opposite-Schubert; the two sides meet only through euler_pair.
std::vector<std::pair<WpIndex, int>> dual_expand(const WpIndex& v);

// Sheaf Euler characteristic pairing of a classical element against a
// Schubert class: sum of coefficients of O^[x,y] with a >= x and b <= y.
// Rejects elements with nonzero quantum degree.
Laurent euler_pair(const QkElement& e, const WpIndex& w);

// The ring involution induced by the diagram symmetry: indices through iota
// (degrees swapped), coefficients through the variable reversal.
QkElement phi_map(const QkElement& e);

} // namespace qk
