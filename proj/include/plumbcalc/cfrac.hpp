#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "plumbcalc/rational.hpp"

namespace plumbcalc {

/// A Hirzebruch-Jung continued fraction [a_1,...,a_n], stored as its entries.
using CFString = std::vector<Int>;

/// Thrown when a partial value r_{i+1} vanishes during evaluation.
/// index is the 1-based position of the vanishing partial value.
struct not_admissible : std::runtime_error {
    explicit not_admissible(std::size_t idx)
        : std::runtime_error("continued fraction not admissible: partial value at index " +
                             std::to_string(idx) + " is zero"),
          index(idx) {}
    std::size_t index;
};

/// Evaluates right to left: r_n = a_n, r_i = a_i - 1/r_{i+1}.
/// Throws not_admissible if some r_{i+1} vanishes, std::invalid_argument on empty input.
Rational cf_eval(const CFString& s);

/// Non-throwing variant; on failure returns nullopt and stores the vanishing index.
std::optional<Rational> try_cf_eval(const CFString& s, std::size_t* fail_index = nullptr);

/// Entries positive (or the single string [0]) and every partial value nonzero where divided into.
bool is_admissible(const CFString& s);

/// Admissible and evaluates to exactly 0. Integer-only continuant check, no rational arithmetic.
/// Note: weaker than being a Lisca zero string (see zerostrings.hpp).
bool is_admissible_zero(const CFString& s);

/// All entries >= 2 (the unique-expansion regime), nonempty.
bool is_expansion_string(const CFString& s);

/// The unique expansion of r = p/q > 1 with all entries >= 2, via the ceiling recursion
/// a_1 = ceil(p/q), then q/(a_1 q - p). Rejects r <= 1.
CFString cf_expand(const Rational& r);

/// Dual expansion: if s expands p/q, the result expands p/(p-q).
/// Implements the three-step rewriting algorithm (equivalent to Riemenschneider's dot diagram).
/// Requires an expansion string.
CFString cf_dual(const CFString& s);

/// Reverses the sequence. If s expands p/q, the reversal expands p/qbar with q*qbar = 1 mod p.
CFString cf_reverse(const CFString& s);

/// The two dual expansions side by side: left expands p/q, right expands p/(p-q).
struct DualPair {
    CFString left, right;
    Int p, q;
};

/// Builds the pair from the expansion of p/q (entries >= 2, value > 1).
DualPair dual_pair(const CFString& expansion_of_p_over_q);

/// The unique qbar with 1 <= qbar < p and q*qbar = 1 (mod p). Requires gcd(p,q) = 1, 0 < q < p.
Int mod_inverse(const Int& q, const Int& p);

/// Continuants K(a_i..a_j) with K(empty) = 1: K(i..j) = a_i K(i+1..j) - K(i+2..j).
/// The value of an admissible string is K(1..n)/K(2..n), and the string is admissible
/// iff K(j..n) != 0 for all 2 <= j <= n.
/// prefix_continuants: P of size n+1, P[j] = K(1..j), P[0] = 1.
/// suffix_continuants: S of size n+3, S[i] = K(i..n) for 1 <= i <= n, S[n+1] = 1, S[n+2] = 0;
/// S[0] is unused and set to 0.
std::vector<Int> prefix_continuants(const CFString& s);
std::vector<Int> suffix_continuants(const CFString& s);

}  // namespace plumbcalc
