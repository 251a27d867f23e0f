#pragma once

#include "sturmian/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sturmian {

/// Outcome of one property suite. A suite with zero checks counts as failed.
struct SuiteReport {
    std::string name;
    std::size_t checks = 0, failures = 0;
    std::vector<std::string> messages;  // first few failures
    Json details = Json::object();

    bool passed() const { return checks > 0 && failures == 0; }

    template <class Describe>
    void check(bool ok, Describe&& describe) {
        ++checks;
        if (ok) return;
        ++failures;
        if (messages.size() < 20) messages.push_back(describe());
    }
};

Json to_json(const SuiteReport& r);

/// Random balanced pairs: trace maximizers over every (l, n), n ≤ max_n, are exactly the
/// words whose periodic extension is balanced.
SuiteReport suite_trace_oracle(std::uint64_t seed, std::size_t pairs = 50, std::size_t max_n = 12);
/// η > 0, t1 > 2, δ > 0 and the three exact matrix identities for p, q ≤ max_pq, m ≤ max_m.
SuiteReport suite_trace_identities(std::uint64_t seed, std::size_t pairs = 50, int max_pq = 4, int max_m = 3);
/// (AB, BA) is crossing and tr((AB)²) > tr(A²B²) for balanced pairs. Random crossing pairs
/// must classify as crossing; the class of their (AB, BA) is only tallied.
SuiteReport suite_crossing(std::uint64_t seed, std::size_t pairs = 50);
/// Concavity of the slope function over Farey brackets with q1 + q2 ≤ limit.
SuiteReport suite_concavity(std::uint64_t seed, std::size_t pairs = 20, std::uint64_t limit = 30);
/// Disguised normal forms recover their class; the mixed direction tests agree.
SuiteReport suite_roundtrip(std::uint64_t seed, std::size_t trials = 1000);
/// Mechanical, Christoffel and unbalanced-word properties.
SuiteReport suite_words();
/// Greedy amplification for (P1, P1ᵗ) and (0011)^∞ grows geometrically; ξ̂ > 1.
SuiteReport suite_amplification(std::size_t max_n = 5);
/// Cayley–Hamilton, power and commutator identities, Vieta, trace vs norm.
SuiteReport suite_matrix_identities(std::uint64_t seed);
/// tr[w] = tr[reverse w] on random pairs and trace tables.
SuiteReport suite_mirror(std::uint64_t seed);
/// jsr lower ≥ exp(χ(τ̂)) − 1e-9, upper ≥ lower.
SuiteReport suite_jsr(std::uint64_t seed, std::size_t pairs = 10);
/// Solver certificate against exhaustive search near τ̂, and endpoint behaviour of f.
SuiteReport suite_solver(std::uint64_t seed, std::size_t pairs = 10);
/// Monotonicity, symmetry and refinement of τ̂(t) on (P1, t·P1ᵗ).
SuiteReport suite_sweep(unsigned workers = 1);
/// Cone invariance under words of length ≤ 6 for disguised normal forms.
SuiteReport suite_cones(std::uint64_t seed, std::size_t pairs = 30);
/// Canonical JSON is stable under dump → parse → dump.
SuiteReport suite_serialization(std::uint64_t seed);

std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, unsigned workers);

/// (P1, P1ᵗ) = ([[1,0],[1,1]], [[1,1],[0,1]]).
MatrixPair golden_pair();

}  // namespace sturmian
