// Acceptance suite: one pass/fail line per criterion. Run with no arguments
// for all criteria or with --criterion N for a single one (criteria 2 and 3
// share the line suite and are computed together).

#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "meplsim/verify.hpp"

namespace {

struct Criterion {
    int id;
    std::string title;
    std::string suite;
    int check_index;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> table = {
        {1, "sandwich lemma on 1000 random triples", "sandwich", 0},
        {2, "line factor-4 for C-rule local minima", "line4", 0},
        {3, "line expected-rank bounds", "line4", 1},
        {4, "3x3 grid knight-move factor 4.62 and sqrt-rank bound", "grid462", 0},
        {5, "bad local minimum: linear arrangement on the 4x4 grid", "badmin", 0},
        {6, "ring clustered closed forms and interleaved stability", "ring_cluster", 0},
        {7, "center-monotone C-rule local minima (500 runs)", "monotone", 0},
        {8, "triangle-count and polygon lower bounds", "bounds", 0},
        {9, "hardness reduction instance thresholds", "hardness", 0},
        {10, "ring vs torus improvement-ratio trend", "trend", 0},
        {11, "dynamics hygiene: termination, monotonicity, determinism", "hygiene", 0},
    };
    return table;
}

void write_counterexample_artifact(const meplsim::CheckReport& check) {
    std::vector<std::string> rows;
    for (const auto& line : check.details)
        if (line.rfind("counterexample,", 0) == 0) rows.push_back(line);
    if (rows.empty()) return;
    std::ofstream out("grid462_counterexamples.csv", std::ios::binary);
    out << "tag,instance,c,bound,epl\n";
    for (const auto& row : rows) out << row << "\n";
    std::cerr << "wrote grid462_counterexamples.csv (" << rows.size() << " rows)\n";
}

bool run_criterion(const Criterion& criterion, const meplsim::CheckReport& check) {
    std::cout << "criterion " << criterion.id << " [" << check.name
              << "]: " << (check.passed ? "PASS" : "FAIL") << " - " << criterion.title << "\n";
    for (const auto& line : check.details) {
        if (line.rfind("counterexample,", 0) == 0) continue;  // artifact file
        std::cout << "    " << line << "\n";
    }
    if (check.name == "grid462") write_counterexample_artifact(check);
    return check.passed;
}

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            selected = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }

    bool all_passed = true;
    std::map<std::string, meplsim::SuiteReport> cache;
    for (const auto& criterion : criteria()) {
        if (selected != 0 && criterion.id != selected) continue;
        auto it = cache.find(criterion.suite);
        if (it == cache.end())
            it = cache.emplace(criterion.suite, meplsim::run_suite(criterion.suite)).first;
        const auto& checks = it->second.checks;
        if (criterion.check_index >= static_cast<int>(checks.size())) {
            std::cerr << "internal error: suite " << criterion.suite << " too small\n";
            return 2;
        }
        all_passed = run_criterion(criterion, checks[criterion.check_index]) && all_passed;
    }
    return all_passed ? 0 : 1;
}
