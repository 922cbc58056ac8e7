#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "torb/int_matrix.hpp"
#include "torb/numeric.hpp"

namespace torb {

using Vec2 = std::array<Int, 2>;

// Smith normal form U * M * V = D with U, V unimodular and D diagonal with
// d_1 | d_2 | ..., all d_i >= 0. The reduction pivots on the smallest nonzero
// |entry| (ties broken row-major), so the decomposition is reproducible.
struct SnfDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
};

SnfDecomposition smith_normal_form(const IntMatrix& m);

// Solution set of M*y = rhs (mod n): particular + integer combinations of
// kernel_basis, all entries reduced to [0, n).
struct ModSolution {
    std::vector<Int> particular;
    std::vector<std::vector<Int>> kernel_basis;
};

// Solves M*y = rhs (mod n) for n >= 2 via the Smith form of M, so n may be
// composite. Returns nullopt when the per-diagonal divisibility conditions
// certify that no solution exists.
std::optional<ModSolution> solve_linear_mod(const IntMatrix& m,
                                            const std::vector<Int>& rhs,
                                            const Int& n);

// The 2x2 matrix with det = +1 sending the primitive vector xi to (1,0)^t.
IntMatrix unimodular_completion(const Vec2& xi);

// Every product of at most `depth` generators of GL_n(Z), in deterministic
// discovery order with the identity first and no duplicates. Generator list:
// transvections E_ij(+1), E_ij(-1) for i != j (row-major), swaps of rows
// i < j, then diagonal matrices with a single -1 at position n-1 down to 0.
std::vector<IntMatrix> gl_enumerate(std::size_t n, unsigned depth);

}  // namespace torb
