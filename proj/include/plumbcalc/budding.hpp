#pragma once

#include <vector>

#include "plumbcalc/cfrac.hpp"

namespace plumbcalc {

/// Budding acts on any nonempty integer sequence; linear plumbings use it on
/// framing sequences (all entries >= 2), the zero-string calculus on fractions.
/// bud_left:  [a_1,..,a_n] -> [2, a_1,..,a_{n-1}, a_n+1]
/// bud_right: [a_1,..,a_n] -> [a_1+1, a_2,..,a_n, 2]
CFString bud_left(const CFString& s);
CFString bud_right(const CFString& s);

/// The reverse operations that are legal on s, in the order (left, right).
/// Left debudding needs a_1 = 2 and a_n > 1 and yields [a_2,..,a_n-1];
/// right debudding needs a_n = 2 and a_1 > 1 and yields [a_1-1,..,a_{n-1}].
/// May be empty, may hold both.
std::vector<CFString> debud(const CFString& s);

/// True iff some chain of debuddings takes s to base. Backtracking over both
/// debud branches with a visited set.
bool is_budding_of(const CFString& s, const CFString& base);

/// All sequences reachable from base by buddings with length <= max_len,
/// including base itself; sorted by (length, lexicographic).
std::vector<CFString> budding_closure(const CFString& base, int max_len);

/// Member of the budding closure of (4); equivalently the boundary lens space
/// bounds a rational homology ball. Requires all entries >= 2.
bool is_one_replaceable(const CFString& framings);

}  // namespace plumbcalc
