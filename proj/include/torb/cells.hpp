#pragma once

#include <cstddef>
#include <vector>

#include "torb/int_matrix.hpp"
#include "torb/numeric.hpp"

namespace torb {

// Cup-product data of a model complex with n 2-spheres, a mod-m Moore piece,
// and one 4-cell: A records the integral products, b and c the mod-m ones.
// When m = 1 the mod-m part is trivial and b/c are dropped entirely.
struct CupTriple {
    std::size_t n;
    Int m;              // >= 1
    IntMatrix a;        // symmetric n x n
    std::vector<Int> b; // n residues in [0, m); empty when m == 1
    Int c;              // residue in [0, m); 0 when m == 1

    bool operator==(const CupTriple& other) const = default;
};

// Validates shapes, reduces b and c to canonical residues, and drops them
// when m = 1. Throws InputError on asymmetric A or length mismatches.
CupTriple make_triple(std::size_t n, const Int& m, IntMatrix a,
                      std::vector<Int> b = {}, Int c = 0);

// Induced-map data of a cellular map between two such complexes: W on the
// sphere part of H^2, y and z on the mod-m part. Not required to be
// invertible; equivalences are recognized by is_equivalence_rep.
struct CellMapRep {
    IntMatrix w;        // n x n
    std::vector<Int> y; // n residues mod m; ignored when m == 1
    Int z;

    bool operator==(const CellMapRep& other) const = default;
};

// Pullback of the cup-product data along a map with representation r:
//   A' = W^t A W,  b' = yAW + zbW (mod m),  c' = yAy^t + 2zyb^t + z^2 c (mod m).
CupTriple transform(const CupTriple& t, const CellMapRep& r);

// Componentwise sum (same n and m), residues reduced.
CupTriple add(const CupTriple& t1, const CupTriple& t2);

// Coefficients of the 4-cell's attaching map read off the cup products when
// m = 1: diag[i] is the Hopf coefficient of the i-th sphere and off holds the
// Whitehead coefficients a_jk for j < k in row-major order.
struct AttachingForm {
    std::size_t n;
    std::vector<Int> diag;
    std::vector<Int> off;

    bool operator==(const AttachingForm& other) const = default;
};

// Readoff A[i][i] -> diag, A[j][k] -> off; requires m = 1.
AttachingForm attaching_form(const CupTriple& t);

// Inverse of attaching_form: rebuilds the m = 1 triple.
CupTriple form_to_triple(const AttachingForm& f);

// True iff det W = +/-1 and gcd(z, m) = 1 (the z condition is vacuous when
// m = 1).
bool is_equivalence_rep(const CellMapRep& r, const Int& m);

}  // namespace torb
