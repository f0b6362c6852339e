#pragma once

#include <utility>
#include <vector>

#include "plumbcalc/cfrac.hpp"
#include "plumbcalc/intmatrix.hpp"

namespace plumbcalc {

/// Plumbing of D^2-bundles over S^2 along a tree.
struct PlumbingTree {
    struct Vertex {
        int id = 0;
        Int framing;
    };
    std::vector<Vertex> vertices;
    std::vector<std::pair<int, int>> edges;
};

/// Unique ids, edges over known ids, connected and acyclic. Throws on violation.
void validate_tree(const PlumbingTree& t);

/// Linear chain with framings (-m_1,...,-m_r) given by the positive entries m_i.
PlumbingTree linear_chain(const CFString& entries);

/// Framings on the diagonal, 1 for each edge; vertices ordered by id.
IntMatrix intersection_matrix(const PlumbingTree& t);

/// Invariant factors (trivial 1s dropped, 0 = free summand) of the cokernel of
/// the intersection matrix: H_1 of the boundary 3-manifold.
std::vector<Int> boundary_h1(const PlumbingTree& t);

/// Euler characteristic and signature of the plumbing 4-manifold.
Int plumbing_euler(const PlumbingTree& t);
Int plumbing_signature(const PlumbingTree& t);

/// Group presentation: generators 1..g, relators as words of signed indices
/// (+i for generator i, -i for its inverse).
struct Presentation {
    int generators = 0;
    std::vector<std::vector<int>> relators;
};

/// Invariant factors of the abelianization (SNF of the relator exponent-sum
/// matrix); trivial 1s dropped, 0 = free summand.
std::vector<Int> abelianization(const Presentation& p);

/// Class in H_2 of CP^2 # N CP^2-bar: coefficient of h plus coefficients of e_1..e_N.
/// The pairing is x_h y_h - sum_i x_i y_i.
struct AmbientClass {
    Int h;
    std::vector<Int> e;
};

Int pairing(const AmbientClass& x, const AmbientClass& y);
IntMatrix gram_matrix(const std::vector<AmbientClass>& classes);

/// Order of the image of v in coker(M), M square nonsingular symmetric.
Int boundary_class_order(const IntMatrix& m, const std::vector<Int>& v);

/// (chi, sigma) bookkeeping for cut-and-paste along a common boundary:
/// componentwise ambient - removed + glued.
struct ChiSigma {
    Int chi, sigma;
    friend bool operator==(const ChiSigma& a, const ChiSigma& b) {
        return a.chi == b.chi && a.sigma == b.sigma;
    }
};
ChiSigma glue_invariants(const ChiSigma& ambient, const ChiSigma& removed, const ChiSigma& glued);

}  // namespace plumbcalc
