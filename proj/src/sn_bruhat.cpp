#include "qk/sn_bruhat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qk {

Permutation wp_representative(const WpIndex& w) {
    const int n = w.n();
    Permutation out;
    out.reserve(static_cast<std::size_t>(n));
    out.push_back(w.i());
    for (int v = 1; v <= n; ++v)
        if (v != w.i() && v != w.j()) out.push_back(v);
    out.push_back(w.j());
    return out;
}

PermutationOracle::PermutationOracle(int n) : n_(n) {
    if (n < 3) throw std::invalid_argument("rank parameter must be at least 3");
}

void PermutationOracle::require_permutation(const Permutation& w) const {
    if (static_cast<int>(w.size()) != n_)
        throw std::invalid_argument("permutation has wrong size");
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    for (int v : w) {
        if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

bool PermutationOracle::leq(const Permutation& u, const Permutation& v) const {
    require_permutation(u);
    require_permutation(v);
    std::vector<int> pu, pv;
    pu.reserve(u.size());
    pv.reserve(v.size());
    for (int k = 0; k < n_ - 1; ++k) {
        pu.insert(std::upper_bound(pu.begin(), pu.end(), u[static_cast<std::size_t>(k)]),
                  u[static_cast<std::size_t>(k)]);
        pv.insert(std::upper_bound(pv.begin(), pv.end(), v[static_cast<std::size_t>(k)]),
                  v[static_cast<std::size_t>(k)]);
        for (std::size_t m = 0; m < pu.size(); ++m)
            if (pu[m] > pv[m]) return false;
    }
    return true;
}

bool PermutationOracle::is_minimal_coset_representative(const Permutation& w) const {
    require_permutation(w);
    return std::is_sorted(w.begin() + 1, w.end() - 1);
}

std::vector<Permutation> PermutationOracle::all_permutations() const {
    Permutation w(static_cast<std::size_t>(n_));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<WpIndex> PermutationOracle::interval_set(const WpIndex& v) const {
    const Permutation pv = wp_representative(v);
    const std::vector<Permutation> all = all_permutations();

    std::vector<WpIndex> out;
    for (const WpIndex& u : enumerate_wp(n_)) {
        const Permutation pu = wp_representative(u);
        if (!leq(pu, pv)) continue;
        bool blocked = false;
        for (const Permutation& w : all) {
            if (is_minimal_coset_representative(w)) continue;
            if (leq(pu, w) && leq(w, pv) && w != pu && w != pv) {
                blocked = true;
                break;
            }
        }
        if (!blocked) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qk
