#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plumbcalc/intmatrix.hpp"

namespace plumbcalc {

/// Positive factorization on a planar page: a disk with `holes` holes and an
/// ordered word of right-handed Dehn twists, each along a convex curve
/// determined by the nonempty set of holes it encloses (1-based ids).
struct Factorization {
    int holes = 0;
    std::vector<std::vector<int>> twists;
};

/// Twists nonempty, sorted, duplicate-free, ids within 1..holes.
void validate_factorization(const Factorization& f);

/// (1 - holes) + #twists: one 0-handle, a 1-handle per hole, a 2-handle per twist.
int euler_char_palf(const Factorization& f);

/// Abelianized fundamental group of the total space: hole meridians modulo
/// sum_{i in S} m_i = 0 per twist S. Invariant factors, 1s dropped, 0 = free.
std::vector<Int> h1_total(const Factorization& f);

/// Linking matrix of the boundary surgery diagram: holes as 0-framed unknots,
/// twists as -1-framed curves meeting hole i once iff i is enclosed. Distinct
/// convex vanishing cycles sit on parallel pages and are unlinked.
IntMatrix boundary_linking_matrix(const Factorization& f);

/// H_1 of the boundary open book: cokernel invariants of the linking matrix
/// (1s dropped, 0 = free summand).
std::vector<Int> boundary_h1_palf(const Factorization& f);

/// Lantern substitution at the four twist positions (0-based) holding the
/// pairwise disjoint A, B, C and their union: replaced by A|B, A|C, B|C at the
/// leftmost removed position. Validates that boundary_h1_palf is unchanged.
Factorization lantern_substitute(const Factorization& f, std::size_t pos_a, std::size_t pos_b,
                                 std::size_t pos_c, std::size_t pos_full);

/// Daisy substitution: center A0 at the k-1 given positions, pairwise disjoint
/// petals P_1..P_k, and their full union; replaced by the k+1 twists
/// (A0|P_1), ..., (A0|P_k), (full - A0). Reduces to the lantern at k = 2.
/// Validates that boundary_h1_palf is unchanged.
Factorization daisy_substitute(const Factorization& f, const std::vector<std::size_t>& center_positions,
                               const std::vector<std::size_t>& petal_positions, std::size_t full_position);

enum class SplitAssign { left, right, both };

/// Splits hole j into (j, holes+1). reassign[t] says which child each twist t
/// containing j keeps; it must mention exactly those twists. appended twists
/// (over holes+1 holes) go to the end of the word. No validation beyond shape;
/// certify the resulting pair with key_pair_check.
Factorization split_hole(const Factorization& f, int hole,
                         const std::vector<std::pair<std::size_t, SplitAssign>>& reassign,
                         const std::vector<std::vector<int>>& appended);

/// Homological certificate for one inductive step: both sides must share the
/// page; reports Euler characteristics, boundary H_1 on both sides, and the
/// total-space H_1 of the replacement side.
struct KeyPairReport {
    int holes = 0;
    int euler_c = 0, euler_b = 0;
    std::vector<Int> boundary_c, boundary_b;
    bool boundary_equal = false;
    std::vector<Int> b_h1_total;
};
KeyPairReport key_pair_check(const Factorization& c_side, const Factorization& b_side);

/// Built-in systems. seed_x_system is the 9-twist word x0^2 x1 x2 x3 y x4 x5^2
/// on the 5-holed disk; seed_abcdef is its 6-twist reduction. thm2a_bside(n) is
/// the Euler characteristic 2 side of the n-parameter family (n >= 2); its
/// total-space H_1 is Z/(2n-1).
Factorization seed_x_system();
Factorization seed_abcdef();
Factorization thm2a_bside(int n);

/// Registry: "seed-x", "seed-abcdef", "thm2a-bside:<n>".
std::optional<Factorization> named_factorization(const std::string& name);

}  // namespace plumbcalc
