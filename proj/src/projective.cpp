#include "qk/projective.hpp"

#include <stdexcept>

namespace qk {

ProjElement::ProjElement(int n) : n_(n) {
    if (n < 3) throw std::invalid_argument("rank parameter must be at least 3");
}

ProjElement ProjElement::basis(int n, int k) {
    ProjElement out(n);
    out.add(k, Laurent::constant(n - 1, BigInt(1)));
    return out;
}

void ProjElement::add(int k, const Laurent& c) {
    if (k < 0) throw std::invalid_argument("projective index must be nonnegative");
    if (c.vars() != vars()) throw std::invalid_argument("coefficient has wrong variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ProjElement& ProjElement::operator+=(const ProjElement& o) {
    require_same_n(n_, o.n_);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

bool ProjElement::is_divisor_combination() const {
    for (const auto& [k, c] : terms_)
        if (k > 1) return false;
    return true;
}

std::string ProjElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string coeff;
        bool negative = false;
        if (c.is_single_term()) {
            const auto& [m, v] = c.terms()[0];
            negative = v.signum() < 0;
            Laurent abs = negative ? -c : c;
            if (!abs.is_one()) coeff = abs.str() + "*";
        } else {
            coeff = "(" + c.str() + ")*";
        }
        if (first) {
            out += negative ? "-" : "";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const int q = k / n_;
        const int r = k % n_;
        if (q > 0) coeff += q == 1 ? "q*" : "q^" + std::to_string(q) + "*";
        out += coeff + "P[" + std::to_string(r) + "]";
    }
    return out;
}

ProjElement project(const QkElement& e) {
    ProjElement out(e.n());
    for (const auto& [key, c] : e.terms())
        out.add((key.bi - 1) + e.n() * key.d1, c);
    return out;
}

namespace {

ProjElement divisor_times(const ProjElement& divisor, const ProjElement& other) {
    const int n = other.n();
    ProjElement out(n);
    const Laurent alpha = divisor.terms().count(0) ? divisor.terms().at(0) : Laurent(n - 1);
    const Laurent beta = divisor.terms().count(1) ? divisor.terms().at(1) : Laurent(n - 1);
    const Laurent one = Laurent::constant(n - 1, BigInt(1));
    for (const auto& [k, c] : other.terms()) {
        out.add(k, c * alpha);
        if (!beta.is_zero()) {
            const Laurent chr = char_monomial(n, (k % n) + 1, 1);
            out.add(k, c * beta * (one - chr));
            out.add(k + 1, c * beta * chr);
        }
    }
    return out;
}

} // namespace

ProjElement proj_mult(const ProjElement& a, const ProjElement& b, bool equivariant) {
    require_same_n(a.n(), b.n());
    if (!equivariant) {
        ProjElement out(a.n());
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms()) out.add(ka + kb, ca * cb);
        return out;
    }
    if (a.is_divisor_combination()) return divisor_times(a, b);
    if (b.is_divisor_combination()) return divisor_times(b, a);
    throw std::invalid_argument(
        "equivariant projective products require one factor supported on P[0] and P[1]");
}

} // namespace qk
