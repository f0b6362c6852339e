#pragma once

#include <cstdint>
#include <vector>

#include "plumbcalc/cfrac.hpp"

namespace plumbcalc {

/// A zero string is an admissible fraction equal to 0 that is reachable from [0]
/// by blowups. Reachability is not implied by the arithmetic alone: from length 6
/// onward there are admissible fractions equal to 0 (e.g. [2,1,1,1,1,2]) that admit
/// no blowdown at all. Only the reachable ones index Lisca fillings.
bool is_zero_string(const CFString& s);

/// Blowdown-backtracking test: can s be taken to `base` by a sequence of blowdowns?
/// Branches over every entry equal to 1; memoized internally.
bool is_blowup_of(const CFString& s, const CFString& base);

/// Blowup before a_i (1-based): [a_1,..,a_{i-1}+1, 1, a_i+1,..,a_n].
/// At i = 1 there is no left neighbor and only the right one increments.
CFString blowup_before(const CFString& s, std::size_t i);

/// Blowup after a_i: mirror of blowup_before; at i = n only the left neighbor increments.
CFString blowup_after(const CFString& s, std::size_t i);

/// Blowdown at a_i = 1: delete the entry and decrement the existing neighbors.
CFString blowdown_at(const CFString& s, std::size_t i);

/// All zero strings of length n, lexicographically sorted: the deduplicated blowup
/// closure of [0] at depth n-1. Guarded by kEnumerationCap (Catalan growth).
std::vector<CFString> enumerate_zero_strings(int n);

/// Same set in a flat compact form: row-major, stride n, rows sorted lexicographically.
/// Cached per n; entries of a length-n zero string never exceed n-1, so int is exact.
struct ZeroStringTable {
    int length = 0;
    std::size_t count = 0;
    std::vector<std::int32_t> flat;  // count * length entries
};
const ZeroStringTable& zero_string_table(int n);

inline constexpr int kEnumerationCap = 14;

int ones_count(const CFString& s);
std::vector<std::size_t> ones_positions(const CFString& s);  // 1-based

enum class BaseType {
    single_zero,        // [0]
    one_one,            // [1,1]
    blowup_of_121,      // reaches [1,2,1] by blowdowns
    blowup_of_212_only  // reaches [2,1,2] but not [1,2,1]
};

/// Classifies a zero string by its depth-2 blowup base.
BaseType base_type(const CFString& s);

/// For a blowup of [2,1,2] that is not a blowup of [1,2,1]: the value of
/// [a_1,...,a_n+1], which is always 1/2.
Rational plus_one_tail_value(const CFString& s);

}  // namespace plumbcalc
