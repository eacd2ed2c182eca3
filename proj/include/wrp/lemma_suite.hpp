#pragma once

#include <string>
#include <vector>

namespace wrp {

struct LemmaCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The brute-force-vs-closed-form identity battery: Gauss sums, quadratic
// exponential sums, companion/Jacobsthal identities, the Jacobi-sum route,
// eta pair sums and the Galois action on G(eta). Everything is exact; each
// entry is one pass/fail line in the verify-lemmas report.
std::vector<LemmaCheck> run_lemma_suite();

bool all_pass(const std::vector<LemmaCheck>& checks);

}  // namespace wrp
