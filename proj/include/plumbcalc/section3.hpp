#pragma once

#include <string>
#include <vector>

#include "plumbcalc/plumbing.hpp"

namespace plumbcalc {

/// Homology data of the configuration C in CP^2 # 16 CP^2-bar: the eleven
/// sphere classes u_1..u_11, the wall-crossing class alpha, K = 3h - sum e_i,
/// and h itself. Transcribed as data so a transcription fix stays a data change.
struct Section3Data {
    int version = 1;
    int ambient = 16;
    std::vector<AmbientClass> u;  // u[0] = u_1, ..., u[10] = u_11
    AmbientClass alpha, k_class, h_class;
};

const Section3Data& section3_data();

/// Meridian presentation of the replacement's fundamental group, generalized in
/// n; n = 9 is the twelve-generator instance whose abelianization is Z/17.
/// Generators m_1..m_{n+3}; relators m_i m_{n+2} m_{n+3} (i < n),
/// m_n m_{n+1} m_{n+2} m_{n+3}, m_1..m_n, m_1..m_{n+2}, m_1..m_{n-1} m_{n+1},
/// m_1..m_{n+1} m_{n+3}.
Presentation meridian_presentation(int n);

/// Report-mode Gram computation on the transcribed classes. The class list as
/// printed gives u_1 . u_3 = -1, which no pair of distinct spheres in a plumbing
/// can satisfy, so determinant and class order are reported against their
/// expected values rather than asserted.
struct GramReport {
    std::vector<Int> diagonal;
    std::vector<Int> expected_diagonal;
    bool diagonal_matches = false;

    Int det;
    Int expected_det_abs;  // 1445
    bool det_matches = false;

    Int signature;
    Int expected_signature;  // -11
    bool signature_matches = false;

    std::vector<Int> k_pairings;  // (K . u_i)
    Int k_class_order;            // order of that vector in coker(Gram)
    Int expected_k_class_order;   // 85 = 1445 / gcd(782, 1445)
    bool order_matches = false;

    // off-diagonal Gram entries outside {0, 1}: (i, j, value), 1-based, i < j
    struct Offender {
        int i = 0, j = 0;
        Int value;
    };
    std::vector<Offender> offenders;

    bool all_match() const {
        return diagonal_matches && det_matches && signature_matches && order_matches &&
               offenders.empty();
    }
};

GramReport section3_gram_report();

/// Deterministic plain-text rendering, one line per checked quantity.
std::string render_gram_report(const GramReport& r);

}  // namespace plumbcalc
