#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "plumbcalc/cfrac.hpp"
#include "plumbcalc/zerostrings.hpp"

namespace plumbcalc {

struct LensSpace {
    Int p, q;
    friend bool operator==(const LensSpace& a, const LensSpace& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator<(const LensSpace& a, const LensSpace& b) {
        return a.p != b.p ? a.p < b.p : a.q < b.q;
    }
};

/// Validated constructor: gcd(p,q) = 1, 0 < q < p.
LensSpace lens_space(const Int& p, const Int& q);

/// Boundary of the linear plumbing with framings (-m_1,..,-m_r): L(p,q) with
/// p/q = [m_1,..,m_r]. Requires all entries >= 2.
LensSpace boundary_of(const CFString& framings);

/// One minimal symplectic filling of (L(p,q), xi_st): a zero string dominated
/// entrywise by the dual string (the expansion of p/(p-q)), with Euler
/// characteristic the total entrywise deficit.
struct Filling {
    LensSpace lens;
    CFString dual_string;
    CFString zero_string;
    Int euler;
};

/// All fillings, sorted by euler then lexicographically by zero string.
/// Enumerates dominated zero strings through the blowup-closure tables, so the
/// dual length is capped at kEnumerationCap; throws std::length_error beyond.
std::vector<Filling> fillings(const LensSpace& lens);

/// Minimum Euler characteristic over all fillings. Always defined: for dual
/// length 1 the only filling is [0], and for length n >= 2 the string
/// [1,2,...,2,1] is dominated by every expansion string. Uses the closure tables
/// for short duals and a deficit-bounded candidate search beyond the cap.
Int min_filling_euler(const LensSpace& lens);

/// Exists a filling with Euler characteristic exactly k.
bool has_filling_with_euler(const LensSpace& lens, const Int& k);

/// The zero strings of the minimal-Euler-characteristic fillings, sorted
/// lexicographically; min_out (optional) receives the minimum. Works for any
/// dual length via the deficit-bounded search.
std::vector<CFString> minimal_fillings(const LensSpace& lens, Int* min_out = nullptr);

/// The linear plumbing is k-replaceable: its boundary lens space has a filling
/// of Euler characteristic k. Requires all framing entries >= 2.
bool is_k_replaceable(const CFString& framings, const Int& k);

/// An Euler characteristic 2 filling, classified by where the two bumps of the
/// dual string sit relative to the 1-entries of the zero string:
///   form 1: one bump on the single 1-entry, one on a non-1 entry,
///   form 2: both bumps on the single 1-entry ([0] with a double bump degenerates here),
///   form 3: one bump on each of two distinct 1-entries.
struct TwoReplaceableWitness {
    CFString zero_string;
    CFString difference;                      // dual minus zero string, entrywise
    std::vector<std::size_t> bump_positions;  // 1-based, ascending
    int form = 0;
};

std::vector<TwoReplaceableWitness> two_replaceable_witnesses(const LensSpace& lens);

/// Exists coprime n, m with p = n^2 and q = nm - 1.
bool casson_harer_predicate(const LensSpace& lens);

enum class FamilyTag { trivial, a, b, c, d };
const char* family_tag_name(FamilyTag t);

/// The candidate classification families, truncated to length <= max_len and
/// entries <= max_entry. Arms are buddings of (4):
///   trivial: (z), z >= 2
///   (a) (B-arm, z, C-arm), arms possibly empty, z >= 2
///   (b) budding closures of (B-arm, 2) and (2, B-arm)
///   (c) budding closure of (3, 3)
///   (d) budding closures of (2, B-arm, C-arm, 2), both arms nonempty
/// Members are keyed to the first family that produces them, in the order above.
std::map<CFString, FamilyTag> theorem1_families(int max_len, int max_entry);

struct Theorem1Report {
    int max_len = 0;
    int max_entry = 0;
    bool complete = true;          // false when the sequence budget was hit
    std::size_t searched = 0;      // framing sequences enumerated
    std::size_t replaceable = 0;   // 2-replaceable among them
    std::size_t family = 0;        // generated family members in range
    struct OracleOnly {            // 2-replaceable but in no family
        CFString framings;
        CFString dual_string;
        TwoReplaceableWitness witness;
    };
    struct FamilyOnly {            // generated but not 2-replaceable
        CFString framings;
        FamilyTag tag;
    };
    std::vector<OracleOnly> only_oracle;
    std::vector<FamilyOnly> only_family;
    bool success() const { return complete && only_oracle.empty() && only_family.empty(); }
};

/// Brute-force check of the classification: every minimal linear plumbing with
/// length <= max_len and entries <= max_entry is 2-replaceable iff it lies in
/// the generated families. budget caps the enumeration (partial result beyond).
Theorem1Report verify_theorem1(int max_len, int max_entry, std::size_t budget = 10'000'000);

}  // namespace plumbcalc
