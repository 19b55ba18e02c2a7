#include "qk/qkring.hpp"

#include <mutex>
#include <stdexcept>

#include "qk/errors.hpp"

namespace qk {

BasisKey basis_key(const TildeIndex& w) {
    auto [bar, d] = normalize(w);
    return {d.d1, d.d2, bar.i(), bar.j()};
}

TildeIndex key_index(const BasisKey& k, int n) {
    return q_shift(WpIndex(k.bi, k.bj, n), {k.d1, k.d2});
}

QkElement::QkElement(int n) : n_(n) {
    if (n < 3) throw std::invalid_argument("rank parameter must be at least 3");
}

QkElement QkElement::unit(int n) { return basis(TildeIndex(1, n, n)); }

QkElement QkElement::basis(const TildeIndex& w) {
    QkElement out(w.n());
    out.add(w, Laurent::constant(w.n() - 1, BigInt(1)));
    return out;
}

bool QkElement::is_classical() const {
    for (const auto& [key, c] : terms_)
        if (key.d1 != 0 || key.d2 != 0) return false;
    return true;
}

void QkElement::add(const BasisKey& key, const Laurent& c) {
    if (c.vars() != vars()) throw std::invalid_argument("coefficient has wrong variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void QkElement::add(const TildeIndex& w, const Laurent& c) {
    require_same_n(n_, w.n());
    add(basis_key(w), c);
}

Laurent QkElement::coefficient(const BasisKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Laurent(vars()) : it->second;
}

QkElement& QkElement::operator+=(const QkElement& o) {
    require_same_n(n_, o.n_);
    for (const auto& [key, c] : o.terms_) add(key, c);
    return *this;
}

QkElement& QkElement::operator-=(const QkElement& o) {
    require_same_n(n_, o.n_);
    for (const auto& [key, c] : o.terms_) add(key, -c);
    return *this;
}

QkElement QkElement::operator+(const QkElement& o) const {
    QkElement out = *this;
    out += o;
    return out;
}

QkElement QkElement::operator-(const QkElement& o) const {
    QkElement out = *this;
    out -= o;
    return out;
}

QkElement QkElement::scaled(const Laurent& c) const {
    QkElement out(n_);
    for (const auto& [key, coeff] : terms_) out.add(key, coeff * c);
    return out;
}

QkElement QkElement::q_shifted(Degree d) const {
    QkElement out(n_);
    for (const auto& [key, coeff] : terms_)
        out.add(BasisKey{key.d1 + d.d1, key.d2 + d.d2, key.bi, key.bj}, coeff);
    return out;
}

QkElement QkElement::specialized() const {
    QkElement out(n_);
    for (const auto& [key, coeff] : terms_)
        out.add(key, Laurent::constant(vars(), coeff.eval_all_ones()));
    return out;
}

namespace {

// True iff bi + 1 = bj (mod n) for normalized entries.
bool degenerate_branch(int bi, int bj, int n) {
    return bj == bi + 1 || (bi == n && bj == 1);
}

void require_divisor_side(int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("divisor side must be 1 or 2");
}

} // namespace

QkElement chevalley_mult(const QkElement& e, int k) {
    require_divisor_side(k);
    const int n = e.n();
    QkElement out(n);
    const Laurent one = Laurent::constant(n - 1, BigInt(1));

    auto emit = [&](int x, int y, Degree d, const Laurent& c) {
        out.add(q_shift(TildeIndex(x, y, n), d), c);
    };

    for (const auto& [key, c] : e.terms()) {
        const int bi = key.bi;
        const int bj = key.bj;
        const Degree d = key.degree();
        const Laurent chr = (k == 1) ? char_monomial(n, bi, 1) : char_monomial(n, n, bj);
        const Laurent cc = c * chr;

        out.add(key, c * (one - chr));
        if (!degenerate_branch(bi, bj, n)) {
            if (k == 1)
                emit(bi + 1, bj, d, cc);
            else
                emit(bi, bj - 1, d, cc);
        } else if (k == 1) {
            emit(bi + 1, bj - 1, d, cc);
            emit(bi + 2, bj, d, cc);
            emit(bi + 2, bj - 1, d, -cc);
        } else {
            emit(bi + 1, bj - 1, d, cc);
            emit(bi, bj - 2, d, cc);
            emit(bi + 1, bj - 2, d, -cc);
        }
    }
    return out;
}

QkElement classical_divisor_mult(const QkElement& e, int k) {
    require_divisor_side(k);
    const int n = e.n();
    QkElement out(n);
    for (const auto& [key, c] : e.terms()) {
        QkElement single(n);
        single.add(BasisKey{0, 0, key.bi, key.bj}, c);
        const QkElement prod = chevalley_mult(single, k);
        for (const auto& [pkey, pc] : prod.terms())
            if (pkey.d1 == 0 && pkey.d2 == 0)
                out.add(BasisKey{key.d1, key.d2, pkey.bi, pkey.bj}, pc);
    }
    return out;
}

QkElement lr_mult(const TildeIndex& u, const TildeIndex& v) {
    require_same_n(u.n(), v.n());
    const int n = u.n();
    const int x = u.i() + v.i() - 1;
    const int y = u.j() + v.j() - n;

    const int lhs = u.bar_i() - u.bar_j() + v.bar_i() - v.bar_j() + n - 1;
    const int rhs = n * ((u.bar_i() > u.bar_j() ? 1 : 0) + (v.bar_i() > v.bar_j() ? 1 : 0));

    QkElement out(n);
    const Laurent one = Laurent::constant(n - 1, BigInt(1));
    if (lhs < rhs) {
        out.add(TildeIndex(x, y, n), one);
    } else {
        out.add(TildeIndex(x, y - 1, n), one);
        out.add(TildeIndex(x + 1, y, n), one);
        out.add(TildeIndex(x + 1, y - 1, n), -one);
    }
    return out;
}

DivisorPolynomial DivisorPolynomial::one(int n) {
    DivisorPolynomial out(n);
    out.add({0, 0}, {0, 0}, Laurent::constant(n - 1, BigInt(1)));
    return out;
}

void DivisorPolynomial::add(OperatorKey key, Degree d, const Laurent& c) {
    if (c.is_zero()) return;
    QCoefficient& qc = monomials_[key];
    auto [it, inserted] = qc.try_emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) qc.erase(it);
    }
    if (qc.empty()) monomials_.erase(key);
}

DivisorPolynomial DivisorPolynomial::operator+(const DivisorPolynomial& o) const {
    require_same_n(n_, o.n_);
    DivisorPolynomial out = *this;
    for (const auto& [key, qc] : o.monomials_)
        for (const auto& [d, c] : qc) out.add(key, d, c);
    return out;
}

DivisorPolynomial DivisorPolynomial::operator-(const DivisorPolynomial& o) const {
    require_same_n(n_, o.n_);
    DivisorPolynomial out = *this;
    for (const auto& [key, qc] : o.monomials_)
        for (const auto& [d, c] : qc) out.add(key, d, -c);
    return out;
}

DivisorPolynomial DivisorPolynomial::scaled(const Laurent& c) const {
    DivisorPolynomial out(n_);
    for (const auto& [key, qc] : monomials_)
        for (const auto& [d, coeff] : qc) out.add(key, d, coeff * c);
    return out;
}

DivisorPolynomial DivisorPolynomial::q_scaled(Degree shift) const {
    DivisorPolynomial out(n_);
    for (const auto& [key, qc] : monomials_)
        for (const auto& [d, coeff] : qc) out.add(key, d + shift, coeff);
    return out;
}

DivisorPolynomial DivisorPolynomial::times_operator(int k) const {
    require_divisor_side(k);
    DivisorPolynomial out(n_);
    for (const auto& [key, qc] : monomials_) {
        OperatorKey shifted = key;
        (k == 1 ? shifted.a : shifted.b) += 1;
        for (const auto& [d, coeff] : qc) out.add(shifted, d, coeff);
    }
    return out;
}

namespace {

struct PolyCacheKey {
    int n, i, j;
    auto operator<=>(const PolyCacheKey&) const = default;
};

class PolynomialBuilder {
public:
    const DivisorPolynomial& get(const WpIndex& u) {
        std::scoped_lock lock(mutex_);
        return get_locked(u);
    }

private:
    std::map<PolyCacheKey, DivisorPolynomial> cache_;
    std::mutex mutex_;
    int depth_ = 0;

    const DivisorPolynomial& get_locked(const WpIndex& u) {
        PolyCacheKey key{u.n(), u.i(), u.j()};
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        if (++depth_ > 4 * u.n()) {
            depth_ = 0;
            throw internal_error("divisor polynomial recursion exceeded depth 4n");
        }
        DivisorPolynomial built = build(u);
        --depth_;
        return cache_.emplace(key, std::move(built)).first->second;
    }

    DivisorPolynomial tilde_poly(int x, int y, int n) {
        auto [bar, d] = normalize(TildeIndex(x, y, n));
        return get_locked(bar).q_scaled(d);
    }

    DivisorPolynomial build(const WpIndex& u) {
        const int n = u.n();
        const int i = u.i();
        const int j = u.j();

        if (i == 1 && j == n) return DivisorPolynomial::one(n);

        if (i == j + 1) {
            // Solve the degenerate-branch divisor product on [j,i] for O^[i,j].
            const Laurent cinv = char_monomial(n, i, n);
            const Laurent c = char_monomial(n, n, i);
            const DivisorPolynomial base = get_locked(WpIndex(j, i, n));
            DivisorPolynomial out =
                (base.times_operator(2) + base.scaled(c) - base).scaled(cinv);
            out = out - tilde_poly(j, j - 1, n);
            out = out + tilde_poly(i, j - 1, n);
            return out;
        }

        if (j == n || i > j + 1) {
            // Step down in the first entry through the nondegenerate branch.
            const Laurent cinv = char_monomial(n, 1, i - 1);
            const DivisorPolynomial base = get_locked(WpIndex(i - 1, j, n));
            return (base.times_operator(1) - base).scaled(cinv) + base;
        }

        // i < j < n: step up in the second entry.
        const Laurent c = char_monomial(n, j + 1, n);
        const DivisorPolynomial base = get_locked(WpIndex(i, j + 1, n));
        return (base.times_operator(2) - base).scaled(c) + base;
    }
};

PolynomialBuilder& polynomial_builder() {
    static PolynomialBuilder builder;
    return builder;
}

} // namespace

const DivisorPolynomial& divisor_polynomial(const WpIndex& u) {
    return polynomial_builder().get(u);
}

QkElement apply(const DivisorPolynomial& p, const QkElement& e) {
    require_same_n(p.n(), e.n());
    QkElement out(e.n());

    // Group by M2 power; the (a,b)-lex map order keeps each group sorted by
    // the M1 power, so both operator chains advance incrementally.
    std::map<int, std::vector<std::pair<int, const DivisorPolynomial::QCoefficient*>>> by_b;
    for (const auto& [key, qc] : p.monomials())
        by_b[key.b].emplace_back(key.a, &qc);

    QkElement column = e;
    int cur_b = 0;
    for (const auto& [b, items] : by_b) {
        while (cur_b < b) {
            column = chevalley_mult(column, 2);
            ++cur_b;
        }
        QkElement row = column;
        int cur_a = 0;
        for (const auto& [a, qc] : items) {
            while (cur_a < a) {
                row = chevalley_mult(row, 1);
                ++cur_a;
            }
            for (const auto& [d, c] : *qc) out += row.scaled(c).q_shifted(d);
        }
    }
    return out;
}

namespace {

struct ProductCacheKey {
    int n, ui, uj, vi, vj;
    auto operator<=>(const ProductCacheKey&) const = default;
};

const QkElement& basis_product(const WpIndex& u, const WpIndex& v) {
    static std::map<ProductCacheKey, QkElement> cache;
    static std::mutex mutex;
    std::scoped_lock lock(mutex);
    ProductCacheKey key{u.n(), u.i(), u.j(), v.i(), v.j()};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    QkElement prod = apply(divisor_polynomial(u), QkElement::basis(v.tilde()));
    // Inverse characters appear inside the operator polynomials, but the
    // product of two honest classes must land in effective degrees.
    for (const auto& [pkey, pc] : prod.terms())
        if (pkey.d1 < 0 || pkey.d2 < 0)
            throw internal_error("basis product " + u.str() + "*" + v.str() +
                                 " produced a non-effective degree");
    return cache.emplace(key, std::move(prod)).first->second;
}

} // namespace

QkElement mult(const QkElement& e1, const QkElement& e2) {
    require_same_n(e1.n(), e2.n());
    const int n = e1.n();
    QkElement out(n);
    for (const auto& [k1, c1] : e1.terms()) {
        for (const auto& [k2, c2] : e2.terms()) {
            const QkElement& prod =
                basis_product(WpIndex(k1.bi, k1.bj, n), WpIndex(k2.bi, k2.bj, n));
            const Degree shift = k1.degree() + k2.degree();
            const Laurent c = c1 * c2;
            for (const auto& [pkey, pc] : prod.terms())
                out.add(BasisKey{pkey.d1 + shift.d1, pkey.d2 + shift.d2, pkey.bi, pkey.bj},
                        pc * c);
        }
    }
    return out;
}

std::vector<std::pair<WpIndex, int>> dual_expand(const WpIndex& v) {
    std::vector<std::pair<WpIndex, int>> out;
    const int lv = length(v);
    for (const WpIndex& u : i_set(v))
        out.emplace_back(u, (length(u) + lv) % 2 == 0 ? 1 : -1);
    return out;
}

Laurent euler_pair(const QkElement& e, const WpIndex& w) {
    require_same_n(e.n(), w.n());
    if (!e.is_classical())
        throw std::invalid_argument("Euler pairing requires a classical element");
    Laurent out(e.vars());
    for (const auto& [key, c] : e.terms())
        if (w.i() >= key.bi && w.j() <= key.bj) out += c;
    return out;
}

QkElement phi_map(const QkElement& e) {
    const int n = e.n();
    QkElement out(n);
    for (const auto& [key, c] : e.terms())
        out.add(BasisKey{key.d2, key.d1, n + 1 - key.bj, n + 1 - key.bi},
                c.variables_reversed());
    return out;
}

} // namespace qk
