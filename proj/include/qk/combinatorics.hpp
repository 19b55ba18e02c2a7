// combinatorics.hpp — the Schubert indexing combinatorics of the incidence
// variety Fl(1, n-1; n).
//
// Basis labels are pairs [i,j] of integers with i != j (mod n); the pairs
// with both entries in 1..n label the Schubert classes themselves, and the
// rest absorb powers of the two quantum parameters: shifting a label by
// (a,b) in Z^2 sends [i,j] to [i+a*n, j-b*n].

#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace qk {

struct Degree {
    int d1 = 0;
    int d2 = 0;

    bool is_effective() const { return d1 >= 0 && d2 >= 0; }
    Degree operator+(Degree o) const { return {d1 + o.d1, d2 + o.d2}; }
    Degree operator-(Degree o) const { return {d1 - o.d1, d2 - o.d2}; }
    Degree swapped() const { return {d2, d1}; }

    auto operator<=>(const Degree&) const = default;
};

// Componentwise partial order on degrees.
inline bool degree_leq(Degree a, Degree b) { return a.d1 <= b.d1 && a.d2 <= b.d2; }

// Representative of x modulo n lying in 1..n.
int mod_1n(int x, int n);

class WpIndex;

// Extended basis label [i,j], i != j (mod n); n >= 3 is carried in the value
// and cross-n operations are rejected.
class TildeIndex {
public:
    TildeIndex(int i, int j, int n); // throws std::invalid_argument when i = j (mod n)

    int i() const { return i_; }
    int j() const { return j_; }
    int n() const { return n_; }

    int bar_i() const { return mod_1n(i_, n_); }
    int bar_j() const { return mod_1n(j_, n_); }
    Degree degree() const { return {(i_ - bar_i()) / n_, (bar_j() - j_) / n_}; }

    bool operator==(const TildeIndex& o) const = default;

    std::string str() const;

private:
    int i_, j_, n_;
};

// Label with both entries in 1..n: a Schubert (or opposite Schubert) class,
// i.e. a TildeIndex of degree (0,0).
class WpIndex {
public:
    WpIndex(int i, int j, int n); // throws std::invalid_argument when out of 1..n or i = j

    int i() const { return i_; }
    int j() const { return j_; }
    int n() const { return n_; }

    TildeIndex tilde() const { return {i_, j_, n_}; }

    bool operator==(const WpIndex& o) const = default;
    auto operator<=>(const WpIndex& o) const = default;

    std::string str() const;

private:
    int i_, j_, n_;
};

void require_same_n(int a, int b);

std::pair<WpIndex, Degree> normalize(const TildeIndex& w);
TildeIndex q_shift(const TildeIndex& w, Degree d);
TildeIndex q_shift(const WpIndex& w, Degree d);

// Common value of dim X_[i,j] and codim X^[i,j]: (i-1) + (n-j) - [i > j].
int length(const WpIndex& w);
// Extends by length(q^d w) = length(w) + (n-1)(d1+d2).
int length(const TildeIndex& w);

// u <= v iff u.i <= v.i and u.j >= v.j.
bool bruhat_leq(const WpIndex& u, const WpIndex& v);

// The involution [i,j] -> [n+1-j, n+1-i]; on extended labels it swaps the
// two degree components.
WpIndex iota(const WpIndex& w);
TildeIndex iota(const TildeIndex& w);

// The set of u <= v whose full Bruhat interval [u, v] in S_n stays inside
// the minimal coset representatives; closed-form three-case rule. Sorted
// lexicographically.
std::vector<WpIndex> i_set(const WpIndex& v);

// All n(n-1) labels with entries in 1..n, ordered lexicographically on (i,j).
std::vector<WpIndex> enumerate_wp(int n);

} // namespace qk
