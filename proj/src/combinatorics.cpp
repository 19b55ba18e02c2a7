#include "qk/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace qk {

int mod_1n(int x, int n) {
    int r = x % n;
    if (r <= 0) r += n;
    return r;
}

void require_same_n(int a, int b) {
    if (a != b) throw std::invalid_argument("mismatched rank parameters n");
}

TildeIndex::TildeIndex(int i, int j, int n) : i_(i), j_(j), n_(n) {
    if (n < 3) throw std::invalid_argument("rank parameter must be at least 3");
    if ((i - j) % n == 0)
        throw std::invalid_argument("malformed index: entries congruent mod n");
}

std::string TildeIndex::str() const {
    return "[" + std::to_string(i_) + "," + std::to_string(j_) + "]";
}

WpIndex::WpIndex(int i, int j, int n) : i_(i), j_(j), n_(n) {
    if (n < 3) throw std::invalid_argument("rank parameter must be at least 3");
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("index entries must lie in 1..n");
    if (i == j) throw std::invalid_argument("index entries must be distinct");
}

std::string WpIndex::str() const {
    return "[" + std::to_string(i_) + "," + std::to_string(j_) + "]";
}

std::pair<WpIndex, Degree> normalize(const TildeIndex& w) {
    return {WpIndex(w.bar_i(), w.bar_j(), w.n()), w.degree()};
}

TildeIndex q_shift(const TildeIndex& w, Degree d) {
    return {w.i() + d.d1 * w.n(), w.j() - d.d2 * w.n(), w.n()};
}

TildeIndex q_shift(const WpIndex& w, Degree d) { return q_shift(w.tilde(), d); }

int length(const WpIndex& w) {
    return (w.i() - 1) + (w.n() - w.j()) - (w.i() > w.j() ? 1 : 0);
}

int length(const TildeIndex& w) {
    auto [bar, d] = normalize(w);
    return length(bar) + (w.n() - 1) * (d.d1 + d.d2);
}

bool bruhat_leq(const WpIndex& u, const WpIndex& v) {
    require_same_n(u.n(), v.n());
    return u.i() <= v.i() && u.j() >= v.j();
}

WpIndex iota(const WpIndex& w) { return {w.n() + 1 - w.j(), w.n() + 1 - w.i(), w.n()}; }

TildeIndex iota(const TildeIndex& w) {
    // The raw substitution already swaps the degree components.
    return {w.n() + 1 - w.j(), w.n() + 1 - w.i(), w.n()};
}

std::vector<WpIndex> i_set(const WpIndex& v) {
    const int n = v.n();
    const int a = v.i();
    const int b = v.j();

    auto in_wp = [n](int k, int l) { return k >= 1 && k <= n && l >= 1 && l <= n && k != l; };

    std::vector<WpIndex> out;
    auto push = [&](int k, int l) {
        if (!in_wp(k, l)) return;
        WpIndex u(k, l, n);
        if (!bruhat_leq(u, v)) return;
        if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
    };

    if (a - b == 1) {
        push(a, b);
        push(b - 1, b);
        push(b, a);
        push(a, a + 1);
        push(b - 1, a);
        push(b, a + 1);
    } else if (a - b == 2) {
        for (int k = b; k <= a; ++k)
            for (int l = b; l <= a; ++l) push(k, l);
    } else {
        push(a, b);
        push(a - 1, b);
        push(a, b + 1);
        push(a - 1, b + 1);
    }

    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WpIndex> enumerate_wp(int n) {
    if (n < 3) throw std::invalid_argument("rank parameter must be at least 3");
    std::vector<WpIndex> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) out.emplace_back(i, j, n);
    return out;
}

} // namespace qk
