// acceptance.cpp — end-to-end acceptance run: every criterion below is an
// exact check (integer/polynomial equality, zero tolerance) with a wall-clock
// budget, printed one pass/fail line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "qk/element_io.hpp"
#include "qk/gromov_witten.hpp"
#include "qk/projective.hpp"
#include "qk/qkring.hpp"
#include "qk/verify.hpp"

using namespace qk;

namespace {

struct Outcome {
    long long cases = 0;
    std::vector<std::string> failures;
    std::vector<std::string> data;
};

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void(Outcome&)> run;
};

void merge_report(Outcome& out, const VerificationReport& report) {
    out.cases += report.cases_run;
    for (const std::string& f : report.failures)
        out.failures.push_back(report.suite + " (n=" + std::to_string(report.n) + "): " + f);
}

void check_equal(Outcome& out, const QkElement& got, const QkElement& want,
                 const std::string& label) {
    ++out.cases;
    if (!(got == want))
        out.failures.push_back(label + ": got " + print_element(got) + ", want " +
                               print_element(want));
}

void criterion_worked_examples(Outcome& out) {
    const int n = 5;
    const std::vector<std::pair<std::pair<TildeIndex, TildeIndex>, std::string>> products = {
        {{{1, 3, n}, {1, 5, n}}, "O[1,3]"},
        {{{1, 2, n}, {2, 1, n}}, "q2*O[2,3]"},
        {{{2, 1, n}, {5, 1, n}}, "q1*q2*O[1,2]"},
        {{{1, 2, n}, {3, 5, n}}, "O[3,1] + O[4,2] - O[4,1]"},
        {{{2, 3, n}, {4, 5, n}}, "O[5,2] + q1*O[1,3] - q1*O[1,2]"},
        {{{1, 2, n}, {1, 2, n}}, "q2*O[1,3] + q2*O[2,4] - q2*O[2,3]"},
        {{{1, 2, n}, {5, 1, n}}, "q2*O[5,2] + q1*q2*O[1,3] - q1*q2*O[1,2]"},
        {{{3, 1, n}, {5, 1, n}}, "q1*q2*O[2,1] + q1*q2*O[3,2] - q1*q2*O[3,1]"}};
    for (const auto& [pair, expected_text] : products) {
        const QkElement expected = parse_element(expected_text, n);
        const std::string label = pair.first.str() + "*" + pair.second.str();
        check_equal(out, lr_mult(pair.first, pair.second), expected, label + " (closed rule)");
        check_equal(out,
                    mult(QkElement::basis(pair.first), QkElement::basis(pair.second))
                        .specialized(),
                    expected, label + " (algorithm)");
    }
}

void criterion_lr_vs_algorithm(Outcome& out) {
    for (int n = 3; n <= 6; ++n) merge_report(out, run_suite("lr-vs-algorithm", n, {0, 0}));
}

void criterion_associativity(Outcome& out) {
    for (int n = 3; n <= 5; ++n) merge_report(out, run_suite("associativity", n, {0, 0}));
}

void criterion_positivity(Outcome& out) {
    for (int n = 3; n <= 6; ++n) {
        merge_report(out, run_suite("chevalley-positivity", n, {0, 0}));
        merge_report(out, run_suite("lr-positivity", n, {0, 0}));
    }
}

void criterion_quantum_classical(Outcome& out) {
    for (int n = 3; n <= 5; ++n) merge_report(out, run_suite("quantum-classical", n, {2, 2}));
}

void criterion_odot(Outcome& out) {
    for (int n = 3; n <= 5; ++n) merge_report(out, run_suite("odot-check", n, {3, 3}));
}

void criterion_genus_zero(Outcome& out) {
    for (int n = 3; n <= 5; ++n) merge_report(out, run_suite("genus-zero", n, {3, 3}));
}

void criterion_phi_symmetry(Outcome& out) {
    for (int n = 3; n <= 6; ++n) merge_report(out, run_suite("phi-symmetry", n, {0, 0}));
}

void criterion_projection(Outcome& out) {
    for (int n = 3; n <= 6; ++n) merge_report(out, run_suite("projection-hom", n, {0, 0}));
}

void criterion_combinatorial_oracles(Outcome& out) {
    for (int n = 3; n <= 5; ++n) {
        merge_report(out, run_suite("iset-oracle", n, {0, 0}));
        merge_report(out, run_suite("bruhat-oracle", n, {0, 0}));
    }
    // Published interval-set panels, verbatim.
    const std::vector<std::pair<WpIndex, std::vector<WpIndex>>> panels = {
        {WpIndex(4, 1, 5), {{3, 1, 5}, {3, 2, 5}, {4, 1, 5}, {4, 2, 5}}},
        {WpIndex(3, 2, 5), {{1, 2, 5}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}, {3, 2, 5}, {3, 4, 5}}},
        {WpIndex(3, 1, 5), {{1, 2, 5}, {1, 3, 5}, {2, 1, 5}, {2, 3, 5}, {3, 1, 5}, {3, 2, 5}}},
        {WpIndex(1, 2, 5), {{1, 2, 5}, {1, 3, 5}}}};
    for (const auto& [v, want] : panels) {
        ++out.cases;
        if (i_set(v) != want) {
            std::string got;
            for (const WpIndex& u : i_set(v)) got += u.str();
            out.failures.push_back("I(" + v.str() + ") = " + got);
        }
    }
}

void criterion_psi_roundtrip(Outcome& out) {
    for (int n = 3; n <= 5; ++n) merge_report(out, run_suite("psi-roundtrip", n, {3, 3}));
}

void criterion_integer_identities(Outcome& out) {
    for (int n = 3; n <= 6; ++n) {
        merge_report(out, run_suite("lemma-chi", n, {0, 0}));
        const VerificationReport qi = run_suite("q-interval", n, {0, 0});
        merge_report(out, qi);
        for (const std::string& note : qi.notes)
            out.data.push_back("n=" + std::to_string(n) + " " + note);
    }
}

void criterion_conjecture_report(Outcome& out) {
    for (int n = 3; n <= 4; ++n) {
        const VerificationReport report =
            run_suite("equivariant-positivity-conjecture", n, {0, 0});
        out.cases += report.cases_run;
        for (const std::string& note : report.notes)
            out.data.push_back("n=" + std::to_string(n) + " " + note);
    }
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"worked-example reproduction", 1.0, criterion_worked_examples},
        {"closed rule vs operator algorithm, n=3..6", 60.0, criterion_lr_vs_algorithm},
        {"associativity (equivariant n=3,4; specialized n=5)", 120.0, criterion_associativity},
        {"divisor and closed-rule positivity, n=3..6", 10.0, criterion_positivity},
        {"quantum equals classical, n=3..5, degrees <= (2,2)", 30.0,
         criterion_quantum_classical},
        {"pairing series consistency, n=3..5, cutoff (3,3)", 60.0, criterion_odot},
        {"genus zero, n=3..5, degrees <= (3,3)", 120.0, criterion_genus_zero},
        {"diagram-symmetry intertwining, n=3..6", 5.0, criterion_phi_symmetry},
        {"projection homomorphism, n=3..6", 30.0, criterion_projection},
        {"combinatorial oracles and published panels, n=3..5", 30.0,
         criterion_combinatorial_oracles},
        {"series roundtrip, n=3..5, cutoff (3,3)", 30.0, criterion_psi_roundtrip},
        {"integer identities and degree intervals, n=3..6", 10.0,
         criterion_integer_identities},
        {"equivariant positivity conjecture report, n=3,4", 300.0,
         criterion_conjecture_report}};

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const Criterion& criterion = criteria[k];
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        criterion.run(outcome);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        bool pass = outcome.failures.empty();
        std::string verdict = pass ? "PASS" : "FAIL";
        if (pass && elapsed > criterion.budget_seconds) {
            verdict = "FAIL";
            outcome.failures.push_back("exceeded runtime budget of " +
                                       std::to_string(criterion.budget_seconds) + " s");
            pass = false;
        }
        if (!pass) ++failed;

        char line[256];
        std::snprintf(line, sizeof(line), "criterion %02zu  %s  %-55s (%lld cases, %.2f s)",
                      k + 1, verdict.c_str(), criterion.name.c_str(), outcome.cases, elapsed);
        std::cout << line << "\n";
        for (const std::string& d : outcome.data) std::cout << "    data: " << d << "\n";
        for (const std::string& f : outcome.failures) std::cout << "    fail: " << f << "\n";
    }

    if (failed == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failed << " criteria failed\n";
    return 1;
}
