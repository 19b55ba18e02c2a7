#include "qk/gromov_witten.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qk {

namespace {

void require_effective(Degree d) {
    if (!d.is_effective()) throw std::invalid_argument("degree must be effective");
}

} // namespace

WpIndex gamma_schubert(const WpIndex& u, Degree d) {
    require_effective(d);
    const int n = u.n();
    if (d.d1 == 0 && d.d2 == 0) return u;
    if (d.d1 > 0 && d.d2 == 0) return u.j() < n ? WpIndex(n, u.j(), n) : WpIndex(n - 1, n, n);
    if (d.d1 == 0 && d.d2 > 0) return u.i() > 1 ? WpIndex(u.i(), 1, n) : WpIndex(1, 2, n);
    return {n, 1, n};
}

WpIndex gamma_opposite(const WpIndex& u, Degree d) {
    require_effective(d);
    const int n = u.n();
    if (d.d1 == 0 && d.d2 == 0) return u;
    if (d.d1 > 0 && d.d2 == 0) return u.j() > 1 ? WpIndex(1, u.j(), n) : WpIndex(2, 1, n);
    if (d.d1 == 0 && d.d2 > 0) return u.i() < n ? WpIndex(u.i(), n, n) : WpIndex(n, n - 1, n);
    return {1, n, n};
}

WpIndex gamma_opposite(const TildeIndex& u, Degree d) {
    auto [bar, du] = normalize(u);
    if (!degree_leq(du, d)) throw std::invalid_argument("degree below the label's degree");
    return gamma_opposite(bar, d - du);
}

RichardsonDescriptor gamma_divisor(const WpIndex& u, Degree d, int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("divisor side must be 1 or 2");
    require_effective(d);
    const int dk = (k == 1) ? d.d1 : d.d2;
    return {gamma_schubert(u, d), dk == 0 ? k : 0};
}

TruncatedSeries psi(const QkElement& e, Degree cutoff) {
    require_effective(cutoff);
    const int n = e.n();
    QkElement out(n);
    for (const auto& [key, c] : e.terms()) {
        const Degree base = key.degree();
        const WpIndex bar(key.bi, key.bj, n);
        for (int a = 0; base.d1 + a <= cutoff.d1; ++a) {
            for (int b = 0; base.d2 + b <= cutoff.d2; ++b) {
                const WpIndex label = gamma_opposite(bar, {a, b});
                out.add(q_shift(label, {base.d1 + a, base.d2 + b}), c);
            }
        }
    }
    return {out, cutoff};
}

QkElement psi_inverse(const TruncatedSeries& s) {
    const int n = s.element.n();
    for (const auto& [key, c] : s.element.terms())
        if (!degree_leq(key.degree(), s.cutoff))
            throw std::invalid_argument("series contains indices beyond its cutoff");
    QkElement out(n);
    QkElement rest = s.element;
    while (!rest.is_zero()) {
        // Terms of minimal total degree can only come from themselves:
        // every other series contribution raises the total degree.
        int best = rest.terms().begin()->first.d1 + rest.terms().begin()->first.d2;
        for (const auto& [key, c] : rest.terms()) best = std::min(best, key.d1 + key.d2);
        std::vector<std::pair<BasisKey, Laurent>> layer;
        for (const auto& [key, c] : rest.terms())
            if (key.d1 + key.d2 == best) layer.emplace_back(key, c);
        for (const auto& [key, c] : layer) {
            out.add(key, c);
            rest -= psi(QkElement::basis(key_index(key, n)), s.cutoff).element.scaled(c);
        }
    }
    return out;
}

Laurent gw_divisor_closed(const WpIndex& u, int k, const TildeIndex& w) {
    require_same_n(u.n(), w.n());
    if (k != 1 && k != 2) throw std::invalid_argument("divisor side must be 1 or 2");
    const int n = u.n();
    const Laurent zero(n - 1);
    const Laurent one = Laurent::constant(n - 1, BigInt(1));
    if (!w.degree().is_effective()) return zero;

    if (k == 1) {
        if (u.j() < w.j()) return zero;
        if (u.i() == w.i()) return one - char_monomial(n, w.bar_i(), 1);
        if (u.i() < w.i()) return one;
        return zero;
    }
    if (u.i() > w.i()) return zero;
    if (u.j() == w.j()) return one - char_monomial(n, n, w.bar_j());
    if (u.j() > w.j()) return one;
    return zero;
}

Laurent gw_divisor_qclassical(const QkElement& sigma, int k, const WpIndex& w, Degree d) {
    require_same_n(sigma.n(), w.n());
    if (k != 1 && k != 2) throw std::invalid_argument("divisor side must be 1 or 2");
    require_effective(d);
    if (!sigma.is_classical())
        throw std::invalid_argument("quantum-equals-classical evaluation requires a classical element");
    const int dk = (k == 1) ? d.d1 : d.d2;
    const WpIndex nbhd = gamma_schubert(w, d);
    if (dk > 0) return euler_pair(sigma, nbhd);
    return euler_pair(classical_divisor_mult(sigma, k), nbhd);
}

Laurent gw_divisor_dual(const WpIndex& u, int k, const TildeIndex& w) {
    auto [bar, d] = normalize(w);
    const int lv = length(bar);
    Laurent out(u.n() - 1);
    for (const WpIndex& kl : i_set(bar)) {
        const Laurent value = gw_divisor_closed(u, k, q_shift(kl, d));
        out += (length(kl) + lv) % 2 == 0 ? value : -value;
    }
    return out;
}

long long three_point(const WpIndex& u, const WpIndex& v, const WpIndex& w, Degree d) {
    require_same_n(u.n(), v.n());
    require_same_n(u.n(), w.n());
    require_effective(d);
    const TruncatedSeries series = psi(lr_mult(u.tilde(), v.tilde()), d);
    BigInt total;
    for (const auto& [key, c] : series.element.terms())
        if (key.degree() == d && bruhat_leq(WpIndex(key.bi, key.bj, u.n()), w))
            total += c.eval_all_ones();
    return total.to_long_long();
}

std::vector<Degree> lr_degree_set(const WpIndex& u, const WpIndex& v) {
    const QkElement prod = lr_mult(u.tilde(), v.tilde());
    std::set<Degree> degrees;
    for (const auto& [key, c] : prod.terms()) degrees.insert(key.degree());
    return {degrees.begin(), degrees.end()};
}

bool q_interval_check(const WpIndex& u, const WpIndex& v) {
    const std::vector<Degree> degrees = lr_degree_set(u, v);
    Degree lo = degrees.front();
    Degree hi = degrees.front();
    for (Degree d : degrees) {
        lo = {std::min(lo.d1, d.d1), std::min(lo.d2, d.d2)};
        hi = {std::max(hi.d1, d.d1), std::max(hi.d2, d.d2)};
    }
    std::vector<Degree> box;
    for (int a = lo.d1; a <= hi.d1; ++a)
        for (int b = lo.d2; b <= hi.d2; ++b) box.push_back({a, b});
    return degrees == box;
}

} // namespace qk
