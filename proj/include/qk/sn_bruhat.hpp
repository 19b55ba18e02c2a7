// sn_bruhat.hpp — Bruhat order on the full symmetric group S_n, used as the
// independent oracle for the closed-form poset rules on basis labels.

#pragma once

#include <vector>

#include "qk/combinatorics.hpp"

namespace qk {

using Permutation = std::vector<int>; // one-line notation, values 1..n

// Minimal coset representative of [i,j]: w(1) = i, w(n) = j, and the
// remaining values in increasing order in between.
Permutation wp_representative(const WpIndex& w);

class PermutationOracle {
public:
    explicit PermutationOracle(int n); // throws std::invalid_argument when n < 3

    int n() const { return n_; }

    // Tableau criterion: u <= v iff for every k the sorted prefixes
    // {u(1..k)} and {v(1..k)} compare entrywise. Rejects non-permutations.
    bool leq(const Permutation& u, const Permutation& v) const;

    bool is_minimal_coset_representative(const Permutation& w) const;

    std::vector<Permutation> all_permutations() const;

    // Brute-force I(v): u <= v in S_n with no w outside the minimal coset
    // representatives strictly between them.
    std::vector<WpIndex> interval_set(const WpIndex& v) const;

private:
    int n_;
    void require_permutation(const Permutation& w) const;
};

} // namespace qk
