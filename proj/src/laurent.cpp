#include "qk/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "qk/errors.hpp"

namespace qk {

Monomial::Monomial(int vars) {
    if (vars < 0) throw std::invalid_argument("negative variable count");
    packed_.assign(static_cast<std::size_t>(vars), static_cast<char>(kBias));
}

int Monomial::exponent(int r) const {
    if (r < 1 || r > vars()) throw std::invalid_argument("variable index out of range");
    return static_cast<unsigned char>(packed_[static_cast<std::size_t>(r - 1)]) - kBias;
}

void Monomial::set_exponent(int r, int e) {
    if (r < 1 || r > vars()) throw std::invalid_argument("variable index out of range");
    if (e < -kBias || e >= kBias) throw internal_error("monomial exponent out of range");
    packed_[static_cast<std::size_t>(r - 1)] = static_cast<char>(e + kBias);
}

bool Monomial::is_unit() const {
    for (char c : packed_)
        if (static_cast<unsigned char>(c) != kBias) return false;
    return true;
}

Monomial Monomial::times(const Monomial& o) const {
    if (vars() != o.vars()) throw std::invalid_argument("mismatched variable counts");
    Monomial out = *this;
    for (int r = 1; r <= vars(); ++r)
        out.set_exponent(r, exponent(r) + o.exponent(r));
    return out;
}

Monomial Monomial::reversed() const {
    Monomial out = *this;
    std::reverse(out.packed_.begin(), out.packed_.end());
    return out;
}

Laurent merge_terms(int vars, std::vector<Laurent::Term> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Laurent::Term& a, const Laurent::Term& b) { return a.first < b.first; });
    Laurent out(vars);
    for (auto& t : raw) {
        if (!out.terms_.empty() && out.terms_.back().first == t.first)
            out.terms_.back().second += t.second;
        else
            out.terms_.push_back(std::move(t));
        if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
    }
    return out;
}

Laurent Laurent::constant(int vars, BigInt c) {
    Laurent out(vars);
    if (!c.is_zero()) out.terms_.emplace_back(Monomial(vars), std::move(c));
    return out;
}

Laurent Laurent::variable(int vars, int r) {
    Monomial m(vars);
    m.set_exponent(r, 1);
    return monomial(std::move(m), BigInt(1));
}

Laurent Laurent::monomial(Monomial m, BigInt c) {
    Laurent out(m.vars());
    if (!c.is_zero()) out.terms_.emplace_back(std::move(m), std::move(c));
    return out;
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_[0].first.is_unit() && terms_[0].second == BigInt(1);
}

bool Laurent::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit());
}

Laurent Laurent::operator-() const {
    Laurent out(vars_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.emplace_back(t.first, -t.second);
    return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("mismatched variable counts");
    if (o.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (a->first < b->first) {
            merged.push_back(std::move(*a++));
        } else if (b->first < a->first) {
            merged.push_back(*b++);
        } else {
            BigInt c = a->second + b->second;
            if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    merged.insert(merged.end(), a, terms_.end());
    merged.insert(merged.end(), b, o.terms_.end());
    terms_ = std::move(merged);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent out = *this;
    out += o;
    return out;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent out = *this;
    out -= o;
    return out;
}

Laurent Laurent::operator*(const Laurent& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("mismatched variable counts");
    std::vector<Term> raw;
    raw.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_)
            raw.emplace_back(a.first.times(b.first), a.second * b.second);
    return merge_terms(vars_, std::move(raw));
}

BigInt Laurent::eval_all_ones() const {
    BigInt out;
    for (const Term& t : terms_) out += t.second;
    return out;
}

Laurent Laurent::variables_reversed() const {
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const Term& t : terms_) raw.emplace_back(t.first.reversed(), t.second);
    return merge_terms(vars_, std::move(raw));
}

bool Laurent::has_negative_exponent() const {
    for (const Term& t : terms_)
        for (int r = 1; r <= vars_; ++r)
            if (t.first.exponent(r) < 0) return true;
    return false;
}

bool Laurent::has_negative_coefficient() const {
    for (const Term& t : terms_)
        if (t.second.signum() < 0) return true;
    return false;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const Term& t = terms_[k];
        bool negative = t.second.signum() < 0;
        if (k == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        BigInt abs = negative ? -t.second : t.second;
        std::string vars_part;
        for (int r = 1; r <= vars_; ++r) {
            int e = t.first.exponent(r);
            if (e == 0) continue;
            if (!vars_part.empty()) vars_part += "*";
            vars_part += "z" + std::to_string(r);
            if (e != 1) vars_part += "^" + std::to_string(e);
        }
        if (vars_part.empty()) {
            out += abs.to_decimal();
        } else if (abs == BigInt(1)) {
            out += vars_part;
        } else {
            out += abs.to_decimal() + "*" + vars_part;
        }
    }
    return out;
}

Laurent char_monomial(int n, int a, int b) {
    if (n < 3) throw std::invalid_argument("rank parameter must be at least 3");
    if (a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument("character subscript out of 1..n");
    Monomial m(n - 1);
    if (a > b) {
        for (int r = b; r < a; ++r) m.set_exponent(r, 1);
    } else {
        for (int r = a; r < b; ++r) m.set_exponent(r, -1);
    }
    return Laurent::monomial(std::move(m), BigInt(1));
}

namespace {

// Row k -> binomial(e, k) for k = 0..e.
std::vector<BigInt> binomial_row(int e) {
    std::vector<BigInt> row(static_cast<std::size_t>(e) + 1);
    row[0] = BigInt(1);
    for (int k = 1; k <= e; ++k) row[static_cast<std::size_t>(k)] = BigInt(0);
    for (int i = 1; i <= e; ++i)
        for (int k = i; k >= 1; --k)
            row[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k - 1)];
    return row;
}

// Substitutes z_r -> z_r + delta into a polynomial with nonnegative exponents.
std::optional<Laurent> shift_variables(const Laurent& c, int delta) {
    if (c.has_negative_exponent()) return std::nullopt;
    int vars = c.vars();
    Laurent out(vars);
    for (const Laurent::Term& t : c.terms()) {
        Laurent expanded = Laurent::constant(vars, t.second);
        for (int r = 1; r <= vars; ++r) {
            int e = t.first.exponent(r);
            if (e == 0) continue;
            std::vector<BigInt> row = binomial_row(e);
            Laurent factor(vars);
            std::vector<Laurent::Term> raw;
            BigInt power(1); // delta^(e-k)
            for (int k = e; k >= 0; --k) {
                Monomial m(vars);
                m.set_exponent(r, k);
                raw.emplace_back(std::move(m), row[static_cast<std::size_t>(k)] * power);
                power *= BigInt(delta);
            }
            factor = merge_terms(vars, std::move(raw));
            expanded = expanded * factor;
        }
        out += expanded;
    }
    return out;
}

} // namespace

std::optional<Laurent> to_positivity_basis(const Laurent& c) { return shift_variables(c, 1); }

std::optional<Laurent> from_positivity_basis(const Laurent& p) { return shift_variables(p, -1); }

} // namespace qk
