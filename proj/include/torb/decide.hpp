#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torb/cells.hpp"
#include "torb/int_matrix.hpp"
#include "torb/numeric.hpp"

namespace torb {

// Congruence invariants of a symmetric integer matrix, all computed exactly:
// |det A|, the inertia triple by Descartes' rule on the integer
// characteristic polynomial, rank over Q, and parity of the quadratic form
// (even iff every diagonal entry is even). Each is unchanged under
// A -> W^t A W with det W = +/-1.
struct FormInvariants {
    Int abs_det;
    std::size_t n_plus;
    std::size_t n_zero;
    std::size_t n_minus;
    std::size_t rank;
    bool even;

    bool operator==(const FormInvariants& other) const = default;
};

FormInvariants form_invariants(const IntMatrix& a);

// Verdict of the odd-torsion wedge-splitting decision for a triple with
// m = 2^s q, q odd.
struct SplitVerdict {
    enum class Outcome { Splits, NoSplit, NoOddPart };
    Outcome outcome;
    unsigned s;
    Int q;
    // Populated only when outcome == Splits:
    std::vector<Int> y;               // solution of the mod-q system
    std::vector<Int> lift;            // mod-m vector, == y (mod q), == 0 (mod 2^s)
    std::optional<CupTriple> reduced; // what remains, over modulus 2^s
};

// The linear system whose solvability decides the splitting: rows A.y = -b
// and b.y = -c over Z_q, returned as ((n+1) x n matrix, rhs), entries
// reduced mod q. Requires q odd, q >= 1, and q dividing t.m.
std::pair<IntMatrix, std::vector<Int>> splitting_system(const CupTriple& t, const Int& q);

// Component i of the lift is == y_i (mod q) and == 0 (mod 2^s), built from
// Bezout coefficients 2^s a + q b = 1 as 2^s a y_i mod 2^s q.
std::vector<Int> lift_solution(const std::vector<Int>& y, unsigned s, const Int& q);

// Splits m as 2^s q; when q = 1 reports NoOddPart. Otherwise solves the
// splitting system modulo every maximal odd prime power of q, combines the
// solutions by CRT, lifts, transforms t by (identity, lift, 1), checks
// b' == c' == 0 (mod q), and returns the residual triple over modulus 2^s.
// Any unsolvable prime-power system yields NoSplit.
SplitVerdict decide_split(const CupTriple& t);

// Exhaustive check of the same mod-q system over all q^n candidate vectors,
// guarded by `budget`. Solutions are listed in lexicographic order.
struct BruteSplitResult {
    bool solvable;
    std::vector<std::vector<Int>> solutions;
};

BruteSplitResult brute_force_split(const CupTriple& t, const Int& q,
                                   const Int& budget = 1000000);

// Three-valued equivalence verdict. NotEquivalent is only ever issued on an
// invariant certificate (or differing m), never on search exhaustion, so a
// bounded search that finds nothing reports Inconclusive.
struct EquivVerdict {
    enum class Outcome { Equivalent, NotEquivalent, Inconclusive };
    Outcome outcome;
    std::optional<CellMapRep> witness; // Equivalent only; verifies exactly
    std::string reason;                // certificate or exhaustion note
    bool homotopy_conclusive;          // true iff the torsion order is odd
};

// Searches W over gl_enumerate(n, depth) for W^t A W = A' after the
// invariant fast-reject; first match in enumeration order wins.
EquivVerdict congruence_equiv(const IntMatrix& a, const IntMatrix& a2, unsigned depth);

// Full triple equivalence: invariant fast-rejects (differing m, then the
// form invariants of A vs A'), then a deterministic search with z ascending
// over units of Z_m, y lexicographic over (Z_m)^n, and W in gl_enumerate
// order; the first representation with transform(t, r) == t' is returned.
EquivVerdict ring_equiv(const CupTriple& t, const CupTriple& t2, unsigned depth);

// Oracle counterpart of ring_equiv: W ranges over all n x n matrices with
// entries in {-1, 0, 1} and det = +/-1 instead of a generator-word ball.
// Throws BudgetError when the candidate count exceeds `budget`.
EquivVerdict brute_force_equiv(const CupTriple& t, const CupTriple& t2,
                               const Int& budget = 1000000);

}  // namespace torb
