#pragma once

#include <string>
#include <vector>

#include "plumbcalc/lisca.hpp"

namespace plumbcalc {

/// One verification suite run: per-check lines plus an overall verdict.
struct CheckReport {
    std::string name;
    bool pass = true;
    std::size_t checks = 0;
    std::vector<std::string> lines;

    void note(const std::string& line) { lines.push_back(line); }
    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            pass = false;
            lines.push_back("FAIL " + what);
        }
    }
};

/// Exhaustive continued-fraction lemma suite: duality lemmas over all expansion
/// strings with length <= max_len and entries <= max_entry (including the
/// concatenation/splitting pair over all concatenations in range), and the
/// blowup/budding lemmas over all zero strings of length <= zero_len.
CheckReport lemma_suite(int max_len = 6, int max_entry = 6, int zero_len = 9);

/// Seed factorization checks: Euler characteristics, boundary H_1, and the
/// lantern-then-daisy reduction of the 9-twist system to the 6-twist system.
CheckReport palf_seed_suite();

/// Pairing and abelianization checks on the transcribed configuration data,
/// the cut-and-paste (chi, sigma) arithmetic, and the report-mode Gram block.
CheckReport section3_suite();

/// Casson-Harer equivalence sweep: minimal filling Euler characteristic 1 iff
/// p = n^2, q = nm - 1 with n, m coprime, for all lens spaces with p <= pmax.
CheckReport casson_harer_suite(int pmax = 400);

std::string render_theorem1_report(const Theorem1Report& r);

}  // namespace plumbcalc
