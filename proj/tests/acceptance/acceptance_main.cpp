// Acceptance gate: runs every suite at its contractual sample counts and
// wall-time budget, printing one line per criterion.  Exit 0 iff all hold.
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "oredil/checks/all.hpp"

using namespace oredil;

namespace {

int failures = 0;

void line(const std::string& what, const std::vector<VerificationReport>& rs,
          std::int64_t budget_ms) {
    std::int64_t cases = 0, millis = 0;
    bool ok = true;
    for (const auto& r : rs) {
        cases += r.cases;
        millis += r.millis;
        ok = ok && r.pass();
    }
    ok = ok && millis <= budget_ms;
    if (!ok)
        ++failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << ": " << cases << " cases, " << millis
              << " ms (budget " << budget_ms << " ms)\n";
    for (const auto& r : rs)
        for (const auto& f : r.failures)
            std::cout << "       " << r.suite << "/" << f.case_id << ": " << f.witness << "\n";
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 1;

    line("criterion 1: Ore pairs and fraction groups, 200 samples per instance",
         {check_ore(seed, 200), check_fractions(seed, 200)}, 10000);

    line("criterion 2: multiplier cocycles and extensions (500/200/200/50)",
         {check_cocycle(seed, CocycleCounts{})}, 10000);

    line("criterion 3: minimal unitary dilations, 100 samples per property",
         {check_dilation(seed, 100)}, 30000);

    line("criterion 4: direct-limit dynamics, 200 samples at n,N <= 12",
         {check_limit(seed, 200, 12, 12)}, 30000);

    line("criterion 5: twisted crossed product relations and product oracle",
         {check_crossprod(seed, CrossprodCounts{})}, 60000);

    line("criterion 6: full dilation equivalence at n,N <= 12",
         {verify_bc_dilation(seed, 12, 12, 64)}, 60000);

    line("criterion 7: perturbed instances are rejected with witnesses",
         {check_negative(seed)}, 10000);

    if (failures)
        std::cout << failures << " criterion(s) failed\n";
    else
        std::cout << "all criteria hold\n";
    return failures ? 1 : 0;
}
