// verify.hpp — exhaustive verification suites. Each suite sweeps a closed,
// deterministic family of cases and reports failures rendered in the element
// grammar; a report is reproducible byte for byte given (suite, n, cutoff).

#pragma once

#include <string>
#include <vector>

#include "qk/combinatorics.hpp"

namespace qk {

struct VerificationReport {
    std::string suite;
    int n = 0;
    Degree cutoff{0, 0};
    long long cases_run = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes; // data lines: degree-set shapes, conjecture status
    double elapsed_seconds = 0;

    bool passed() const { return failures.empty(); }

    // Deterministic body; elapsed time is intentionally excluded.
    std::string render_text() const;
    std::string render_json() const;
};

// Suite names:
//   associativity, lr-vs-algorithm, chevalley-positivity, lr-positivity,
//   phi-symmetry, quantum-classical, psi-roundtrip, odot-check, genus-zero,
//   q-interval, projection-hom, iset-oracle, bruhat-oracle, lemma-chi,
//   equivariant-positivity-conjecture
//
// The conjecture suite is report-only: violations are surfaced in the notes,
// never as failures. Throws std::invalid_argument for unknown names or n < 3.
VerificationReport run_suite(const std::string& name, int n, Degree cutoff);

const std::vector<std::string>& suite_names();

} // namespace qk
