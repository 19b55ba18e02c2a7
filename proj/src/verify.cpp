#include "qk/verify.hpp"

#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qk/element_io.hpp"
#include "qk/gromov_witten.hpp"
#include "qk/projective.hpp"
#include "qk/qkring.hpp"
#include "qk/sn_bruhat.hpp"

namespace qk {

namespace {

std::string degree_str(Degree d) {
    return "(" + std::to_string(d.d1) + "," + std::to_string(d.d2) + ")";
}

// The Laurent candidate for a positivity statement: nonnull result must be a
// polynomial in y_r = z_r - 1 with nonnegative coefficients.
bool positivity_holds(const Laurent& signed_coeff, std::string& why) {
    auto p = to_positivity_basis(signed_coeff);
    if (!p) {
        why = "not a polynomial in the character variables";
        return false;
    }
    if (p->has_negative_coefficient()) {
        why = "negative coefficient in shifted variables: " + p->str();
        return false;
    }
    return true;
}

int sign_for(int parity) { return parity % 2 == 0 ? 1 : -1; }

void suite_associativity(VerificationReport& r) {
    const auto basis = enumerate_wp(r.n);
    const bool equivariant = r.n <= 4;
    for (const WpIndex& u : basis) {
        const QkElement eu = QkElement::basis(u.tilde());
        for (const WpIndex& v : basis) {
            const QkElement uv = mult(eu, QkElement::basis(v.tilde()));
            for (const WpIndex& w : basis) {
                const QkElement ew = QkElement::basis(w.tilde());
                QkElement lhs = mult(uv, ew);
                QkElement rhs = mult(eu, mult(QkElement::basis(v.tilde()), ew));
                if (!equivariant) {
                    lhs = lhs.specialized();
                    rhs = rhs.specialized();
                }
                ++r.cases_run;
                if (!(lhs == rhs))
                    r.failures.push_back("(" + u.str() + "*" + v.str() + ")*" + w.str() + " = " +
                                         print_element(lhs) + " but " + u.str() + "*(" + v.str() +
                                         "*" + w.str() + ") = " + print_element(rhs));
            }
        }
    }
    if (!equivariant) r.notes.push_back("compared after specializing z -> 1");
}

void suite_lr_vs_algorithm(VerificationReport& r) {
    const auto basis = enumerate_wp(r.n);
    for (const WpIndex& u : basis) {
        for (const WpIndex& v : basis) {
            const QkElement lhs =
                mult(QkElement::basis(u.tilde()), QkElement::basis(v.tilde())).specialized();
            const QkElement rhs = lr_mult(u.tilde(), v.tilde());
            ++r.cases_run;
            if (!(lhs == rhs))
                r.failures.push_back(u.str() + "*" + v.str() + ": algorithm gives " +
                                     print_element(lhs) + ", closed rule gives " +
                                     print_element(rhs));
        }
    }
}

void suite_chevalley_positivity(VerificationReport& r) {
    for (const WpIndex& u : enumerate_wp(r.n)) {
        for (int k = 1; k <= 2; ++k) {
            const QkElement prod = chevalley_mult(QkElement::basis(u.tilde()), k);
            for (const auto& [key, coeff] : prod.terms()) {
                const int lw = length(key_index(key, r.n));
                const Laurent candidate =
                    sign_for(length(u) + 1 + lw) == 1 ? coeff : -coeff;
                ++r.cases_run;
                std::string why;
                if (!positivity_holds(candidate, why))
                    r.failures.push_back(u.str() + "*O^[" + std::to_string(k) + "] at " +
                                         key_index(key, r.n).str() + ": " + why);
            }
        }
    }
}

void suite_lr_positivity(VerificationReport& r) {
    const auto basis = enumerate_wp(r.n);
    for (const WpIndex& u : basis) {
        for (const WpIndex& v : basis) {
            const QkElement prod = lr_mult(u.tilde(), v.tilde());
            for (const auto& [key, coeff] : prod.terms()) {
                const int lw = length(key_index(key, r.n));
                const BigInt value = coeff.eval_all_ones();
                const BigInt candidate =
                    sign_for(length(u) + length(v) + lw) == 1 ? value : -value;
                ++r.cases_run;
                if (candidate.signum() < 0)
                    r.failures.push_back(u.str() + "*" + v.str() + " at " +
                                         key_index(key, r.n).str() + ": signed coefficient " +
                                         candidate.to_decimal());
            }
        }
    }
}

void suite_phi_symmetry(VerificationReport& r) {
    for (const WpIndex& u : enumerate_wp(r.n)) {
        const QkElement e = QkElement::basis(u.tilde());
        for (int k = 1; k <= 2; ++k) {
            const QkElement lhs = phi_map(chevalley_mult(e, k));
            const QkElement rhs = chevalley_mult(phi_map(e), 3 - k);
            ++r.cases_run;
            if (!(lhs == rhs))
                r.failures.push_back("phi(" + u.str() + "*O^[" + std::to_string(k) + "]) = " +
                                     print_element(lhs) + " but phi(" + u.str() + ")*O^[" +
                                     std::to_string(3 - k) + "] = " + print_element(rhs));
        }
    }
}

void suite_quantum_classical(VerificationReport& r) {
    const auto basis = enumerate_wp(r.n);
    for (const WpIndex& u : basis) {
        const QkElement sigma = QkElement::basis(u.tilde());
        for (int k = 1; k <= 2; ++k) {
            for (const WpIndex& wbar : basis) {
                for (int a = 0; a <= r.cutoff.d1; ++a) {
                    for (int b = 0; b <= r.cutoff.d2; ++b) {
                        const Degree d{a, b};
                        const TildeIndex w = q_shift(wbar, d);
                        const Laurent closed = gw_divisor_closed(u, k, w);
                        const Laurent classical = gw_divisor_qclassical(sigma, k, wbar, d);
                        ++r.cases_run;
                        if (!(closed == classical))
                            r.failures.push_back(
                                "I(" + u.str() + ", O^[" + std::to_string(k) + "]; " + w.str() +
                                "): closed form " + closed.str() + ", classical route " +
                                classical.str());
                    }
                }
            }
        }
    }
}

void suite_psi_roundtrip(VerificationReport& r) {
    for (const WpIndex& u : enumerate_wp(r.n)) {
        const QkElement e = QkElement::basis(u.tilde());
        const QkElement back = psi_inverse(psi(e, r.cutoff));
        ++r.cases_run;
        if (!(back == e))
            r.failures.push_back("psi_inverse(psi(" + u.str() + ")) = " + print_element(back));
    }
}

void suite_odot_check(VerificationReport& r) {
    const auto basis = enumerate_wp(r.n);
    for (const WpIndex& u : basis) {
        for (int k = 1; k <= 2; ++k) {
            QkElement dual_series(r.n);
            for (const WpIndex& wbar : basis)
                for (int a = 0; a <= r.cutoff.d1; ++a)
                    for (int b = 0; b <= r.cutoff.d2; ++b) {
                        const TildeIndex w = q_shift(wbar, {a, b});
                        dual_series.add(w, gw_divisor_dual(u, k, w));
                    }
            const QkElement chev_series =
                psi(chevalley_mult(QkElement::basis(u.tilde()), k), r.cutoff).element;
            ++r.cases_run;
            if (!(dual_series == chev_series))
                r.failures.push_back(u.str() + " side " + std::to_string(k) +
                                     ": dual-expansion series " + print_element(dual_series) +
                                     ", divisor-product series " + print_element(chev_series));
        }
    }
}

void suite_genus_zero(VerificationReport& r) {
    const auto basis = enumerate_wp(r.n);
    for (const WpIndex& u : basis)
        for (const WpIndex& v : basis)
            for (const WpIndex& w : basis)
                for (int a = 0; a <= r.cutoff.d1; ++a)
                    for (int b = 0; b <= r.cutoff.d2; ++b) {
                        const long long value = three_point(u, v, w, {a, b});
                        ++r.cases_run;
                        if (value != 0 && value != 1)
                            r.failures.push_back("I_" + degree_str({a, b}) + "(" + u.str() + "," +
                                                 v.str() + "," + w.str() + ") = " +
                                                 std::to_string(value));
                    }
}

void suite_q_interval(VerificationReport& r) {
    const auto basis = enumerate_wp(r.n);
    std::map<std::string, long long> shapes;
    for (const WpIndex& u : basis) {
        for (const WpIndex& v : basis) {
            const std::vector<Degree> degrees = lr_degree_set(u, v);
            Degree lo = degrees.front();
            for (Degree d : degrees) lo = {std::min(lo.d1, d.d1), std::min(lo.d2, d.d2)};
            std::string shape;
            for (Degree d : degrees) shape += degree_str(d - lo);
            ++shapes[shape];
            ++r.cases_run;
            if (!q_interval_check(u, v)) {
                std::string raw;
                for (Degree d : degrees) raw += degree_str(d);
                r.failures.push_back(u.str() + "*" + v.str() + ": degrees " + raw +
                                     " do not fill the componentwise box");
            }
        }
    }
    for (const auto& [shape, count] : shapes)
        r.notes.push_back("degree-set shape " + shape + ": " + std::to_string(count) + " pairs");
}

void suite_projection_hom(VerificationReport& r) {
    const auto basis = enumerate_wp(r.n);
    for (const WpIndex& u : basis) {
        for (const WpIndex& v : basis) {
            const ProjElement lhs = project(lr_mult(u.tilde(), v.tilde()));
            const ProjElement rhs = proj_mult(project(QkElement::basis(u.tilde())),
                                              project(QkElement::basis(v.tilde())), false);
            ++r.cases_run;
            if (!(lhs == rhs))
                r.failures.push_back("project(" + u.str() + "*" + v.str() + ") = " + lhs.str() +
                                     " but product of projections is " + rhs.str());
        }
    }
    const ProjElement divisor = ProjElement::basis(r.n, 1);
    for (const WpIndex& u : basis) {
        const QkElement e = QkElement::basis(u.tilde());
        const ProjElement lhs = project(chevalley_mult(e, 1));
        const ProjElement rhs = proj_mult(project(e), divisor, true);
        ++r.cases_run;
        if (!(lhs == rhs))
            r.failures.push_back("project(" + u.str() + "*O^[1]) = " + lhs.str() +
                                 " but equivariant projective product is " + rhs.str());
    }
    for (int a = 0; a < r.n; ++a)
        for (int b = 0; b < r.n; ++b) {
            const ProjElement prod =
                proj_mult(ProjElement::basis(r.n, a), ProjElement::basis(r.n, b), false);
            ++r.cases_run;
            if (!(prod == ProjElement::basis(r.n, a + b)))
                r.failures.push_back("P[" + std::to_string(a) + "]*P[" + std::to_string(b) +
                                     "] = " + prod.str());
        }
}

void suite_iset_oracle(VerificationReport& r) {
    const PermutationOracle oracle(r.n);
    for (const WpIndex& v : enumerate_wp(r.n)) {
        const std::vector<WpIndex> closed = i_set(v);
        const std::vector<WpIndex> brute = oracle.interval_set(v);
        ++r.cases_run;
        if (closed != brute) {
            std::string got, want;
            for (const WpIndex& u : closed) got += u.str();
            for (const WpIndex& u : brute) want += u.str();
            r.failures.push_back("I(" + v.str() + ") = " + got + " but oracle gives " + want);
        }
    }
}

void suite_bruhat_oracle(VerificationReport& r) {
    const PermutationOracle oracle(r.n);
    const auto basis = enumerate_wp(r.n);
    for (const WpIndex& u : basis) {
        for (const WpIndex& v : basis) {
            const bool closed = bruhat_leq(u, v);
            const bool brute = oracle.leq(wp_representative(u), wp_representative(v));
            ++r.cases_run;
            if (closed != brute)
                r.failures.push_back(u.str() + " <= " + v.str() + ": rule says " +
                                     (closed ? "true" : "false") + ", oracle says " +
                                     (brute ? "true" : "false"));
        }
    }
}

void suite_lemma_chi(VerificationReport& r) {
    const int n = r.n;
    auto chi = [](bool c) { return c ? 1 : 0; };
    for (const WpIndex& w : enumerate_wp(n)) {
        const int a = w.i();
        const int b = w.j();
        const bool degenerate = (a + 1 - b) % n == 0;
        bool ok = true;
        if (degenerate) {
            ok = ok && a + 1 - b == n * chi(a > b);
            const int a1 = mod_1n(a + 1, n);
            const int a2 = mod_1n(a + 2, n);
            const int b1 = mod_1n(b - 1, n);
            ok = ok && a1 - b1 + n - 1 == n * chi(a1 > b1);
            ok = ok && a2 - b + n - 1 == n * chi(a2 > b);
            ok = ok && a2 - b1 + n - 2 == n * chi(a2 > b1);
        } else {
            const int value = a - b - n * chi(a > b);
            ok = ok && -n < value && value < -1;
            const int a1 = mod_1n(a + 1, n);
            ok = ok && a1 - n * chi(a1 > b) == a + 1 - n * chi(a > b);
        }
        ++r.cases_run;
        if (!ok) r.failures.push_back("integer identities fail at " + w.str());
    }
}

void suite_conjecture(VerificationReport& r) {
    const auto basis = enumerate_wp(r.n);
    long long violations = 0;
    for (const WpIndex& u : basis) {
        for (const WpIndex& v : basis) {
            const QkElement prod = mult(QkElement::basis(u.tilde()), QkElement::basis(v.tilde()));
            for (const auto& [key, coeff] : prod.terms()) {
                const int lw = length(key_index(key, r.n));
                const Laurent candidate =
                    sign_for(length(u) + length(v) + lw) == 1 ? coeff : -coeff;
                ++r.cases_run;
                std::string why;
                if (!positivity_holds(candidate, why)) {
                    ++violations;
                    r.notes.push_back("violation at " + u.str() + "*" + v.str() + " -> " +
                                      key_index(key, r.n).str() + ": " + why);
                }
            }
        }
    }
    r.notes.push_back("sign-rule violations: " + std::to_string(violations));
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "associativity",    "lr-vs-algorithm",
        "chevalley-positivity", "lr-positivity",
        "phi-symmetry",     "quantum-classical",
        "psi-roundtrip",    "odot-check",
        "genus-zero",       "q-interval",
        "projection-hom",   "iset-oracle",
        "bruhat-oracle",    "lemma-chi",
        "equivariant-positivity-conjecture"};
    return names;
}

VerificationReport run_suite(const std::string& name, int n, Degree cutoff) {
    if (n < 3) throw std::invalid_argument("rank parameter must be at least 3");
    if (!cutoff.is_effective()) throw std::invalid_argument("cutoff must be effective");

    static const std::map<std::string, void (*)(VerificationReport&)> suites = {
        {"associativity", suite_associativity},
        {"lr-vs-algorithm", suite_lr_vs_algorithm},
        {"chevalley-positivity", suite_chevalley_positivity},
        {"lr-positivity", suite_lr_positivity},
        {"phi-symmetry", suite_phi_symmetry},
        {"quantum-classical", suite_quantum_classical},
        {"psi-roundtrip", suite_psi_roundtrip},
        {"odot-check", suite_odot_check},
        {"genus-zero", suite_genus_zero},
        {"q-interval", suite_q_interval},
        {"projection-hom", suite_projection_hom},
        {"iset-oracle", suite_iset_oracle},
        {"bruhat-oracle", suite_bruhat_oracle},
        {"lemma-chi", suite_lemma_chi},
        {"equivariant-positivity-conjecture", suite_conjecture}};

    auto it = suites.find(name);
    if (it == suites.end()) throw std::invalid_argument("unknown suite: " + name);

    VerificationReport report;
    report.suite = name;
    report.n = n;
    report.cutoff = cutoff;
    const auto start = std::chrono::steady_clock::now();
    it->second(report);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string VerificationReport::render_text() const {
    std::ostringstream out;
    out << "suite: " << suite << "\n";
    out << "n: " << n << "\n";
    out << "cutoff: " << degree_str(cutoff) << "\n";
    out << "cases: " << cases_run << "\n";
    for (const std::string& note : notes) out << "note: " << note << "\n";
    for (const std::string& f : failures) out << "fail: " << f << "\n";
    out << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string VerificationReport::render_json() const {
    nlohmann::ordered_json root;
    root["suite"] = suite;
    root["n"] = n;
    root["cutoff"] = {cutoff.d1, cutoff.d2};
    root["cases"] = cases_run;
    root["notes"] = notes;
    root["failures"] = failures;
    root["passed"] = passed();
    return root.dump();
}

} // namespace qk
