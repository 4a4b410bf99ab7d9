#pragma once

#include <string>
#include <vector>

namespace meplsim {

struct CheckReport {
    std::string name;
    bool passed = true;
    std::vector<std::string> details;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckReport> checks;

    bool passed() const;
    std::string to_json() const;
};

// Named verification suites with fixed seeds. Everything the suites assert
// is pinned here, in code: tolerances, instance sizes, seeds, trend
// thresholds. The acceptance binary and the CLI `verify` command both drive
// these.
//
//   sandwich     C <= EPL <= 2C on 1000 random product triples
//   line4        exhaustive line local minima vs optimum (factor 4) and the
//                expected-rank bounds (two checks)
//   grid462      3x3 grid, C-rule with knight moves, factor 4.62 and the
//                sqrt-rank bounds; the C upper bound is reported per
//                instance, never asserted
//   badmin       the linear-arrangement trap: stable under adjacent moves,
//                escaped by knight moves
//   ring_cluster ring cluster closed forms, measured EPLs, interleaved
//                stability
//   monotone     500 C-rule runs end center-monotone
//   bounds       triangle-count and polygon lower bounds on a dense range
//   hardness     clique/tree reduction instance thresholds by brute force
//   trend        ring vs torus improvement-ratio sweep trends
//   hygiene      termination, strict potential decrease, trace determinism
SuiteReport run_suite(const std::string& suite);

const std::vector<std::string>& suite_names();

}  // namespace meplsim
