// gromov_witten.hpp — curve neighborhoods, the degree-unitriangular series
// automorphism relating the quantum product to the invariant pairing, and
// closed-form genus-zero 3-point invariants against divisor classes.

#pragma once

#include "qk/combinatorics.hpp"
#include "qk/laurent.hpp"
#include "qk/qkring.hpp"

namespace qk {

// Label of the degree-d curve neighborhood of the Schubert variety X_u.
// Rejects non-effective degrees.
WpIndex gamma_schubert(const WpIndex& u, Degree d);

// Label of the degree-d curve neighborhood of the opposite Schubert variety
// X^u. Rejects non-effective degrees.
WpIndex gamma_opposite(const WpIndex& u, Degree d);

// Opposite neighborhood of an extended label: the degree-(d - deg(u))
// neighborhood of its normalized class. Requires d >= deg(u).
WpIndex gamma_opposite(const TildeIndex& u, Degree d);

// Neighborhood of X_u cut by the divisor D^[k]: the intersection with the
// divisor happens exactly when d_k = 0.
struct RichardsonDescriptor {
    WpIndex base;
    int divisor_cut = 0; // 0 = none, else 1 or 2

    bool operator==(const RichardsonDescriptor&) const = default;
};
RichardsonDescriptor gamma_divisor(const WpIndex& u, Degree d, int k);

// An element whose coefficients are exact for every index of degree <= cutoff
// componentwise; indices beyond the cutoff are absent.
struct TruncatedSeries {
    QkElement element;
    Degree cutoff;
};

// The unitriangular series automorphism: each basis term O^u contributes
// q^(deg(u)+d) times the class of its degree-d opposite neighborhood for
// every effective d, truncated at the cutoff.
TruncatedSeries psi(const QkElement& e, Degree cutoff);

// Unique preimage below the cutoff, by degree-graded elimination.
QkElement psi_inverse(const TruncatedSeries& s);

// Closed-form invariant of (O^u, O^[k]; O_w), compared on the raw extended
// entries of w; zero whenever deg(w) has a negative component.
Laurent gw_divisor_closed(const WpIndex& u, int k, const TildeIndex& w);

// The same invariant computed in the ordinary equivariant ring: pair sigma
// (or sigma * O^[k] when d_k = 0) against the curve neighborhood of X_w.
Laurent gw_divisor_qclassical(const QkElement& sigma, int k, const WpIndex& w, Degree d);

// Invariant against a dual class: signed sum of closed-form invariants over
// i_set of the normalized label, each summand shifted to w's degree.
Laurent gw_divisor_dual(const WpIndex& u, int k, const TildeIndex& w);

// Non-equivariant genus-zero 3-point invariant of degree d: apply psi to the
// closed product of u and v, read the coefficients at degree exactly d, and
// sum those whose label is Bruhat-below w.
long long three_point(const WpIndex& u, const WpIndex& v, const WpIndex& w, Degree d);

// Distinct degrees appearing in the closed product, sorted.
std::vector<Degree> lr_degree_set(const WpIndex& u, const WpIndex& v);

// True iff the degree set of the closed product fills the componentwise box
// between its minimum and maximum.
bool q_interval_check(const WpIndex& u, const WpIndex& v);

} // namespace qk
