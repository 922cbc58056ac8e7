#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torb/int_matrix.hpp"
#include "torb/numeric.hpp"
#include "torb/zlattice.hpp"

namespace torb {

// Characteristic data of a 4-dimensional toric orbifold over a polygon:
// one primitive integer 2-vector per edge, in cyclic order (indices wrap).
// Vertex i sits between edges i and i+1. Indices are 1-based throughout the
// public interface.
struct CharacteristicData {
    std::vector<Vec2> xi;

    std::size_t edges() const { return xi.size(); }
    std::size_t n() const { return xi.size() - 2; }
    // 1-based access with cyclic wrap-around.
    const Vec2& vec(std::size_t i) const { return xi[(i - 1) % xi.size()]; }
};

struct ValidationError {
    enum class Kind { TooFewEdges, NonPrimitive, AdjacentDependent };
    Kind kind;
    std::size_t index;  // 1-based offending vector (or pair start); 0 for TooFewEdges
    std::string message;
};

// First violated invariant, scanning primitivity of each vector before
// linear independence of each adjacent pair; nullopt when the data is valid.
std::optional<ValidationError> validate(const CharacteristicData& data);

// Throws InputError when validate() reports a problem.
void require_valid(const CharacteristicData& data);

// One vertex of the polygon together with the cyclic group it contributes:
// the boundary lens space at vertex i has fundamental group of this order,
// and kernel_generator holds the numerators of a generator (x/order, y/order)
// of that subgroup of (Q/Z)^2.
struct LensDescriptor {
    std::size_t vertex_index;
    Int order;
    Vec2 kernel_generator;
};

// Symmetric table with entry (i,j) = |det [xi_i^t xi_j^t]| (0-based storage,
// zero diagonal). Adjacent entries are positive for valid data; non-adjacent
// entries may vanish.
IntMatrix lens_orders(const CharacteristicData& data);

// m = gcd of all m_{i,j} over i < j, with gcd(x,0) = x, so m >= 1.
Int torsion_order(const CharacteristicData& data);

struct GroupDescriptor {
    std::size_t rank;  // free rank
    Int torsion;       // order of the cyclic torsion part; 1 means none
};

struct CohomologyTable {
    GroupDescriptor h0, h1, h2, h3, h4;
};

CohomologyTable cohomology(const CharacteristicData& data);

// The p-power p^r with p^r | t and p^{r+1} does not divide t (the power
// itself, not the exponent r). Requires t >= 1 and p prime.
Int nu_p(const Int& t, const Int& p);

// Smallest 1-based vertex index i with nu_p(m_{i,i+1}) = nu_p(m). Such a
// vertex always exists when p | m; a fruitless scan means a broken invariant
// and raises logic_error.
std::size_t vertex_for_prime(const CharacteristicData& data, const Int& p);

// Lens data at vertex i (1-based, wrap at n+2). The generator comes from the
// Smith form of the 2x2 matrix with columns xi_i^t and xi_{i+1}^t: order d_2
// and the numerators of the non-integral inverse column, reduced mod d_2 and
// scaled to the unique generator with second numerator 1 (orders > 1).
LensDescriptor vertex_kernel(const CharacteristicData& data, std::size_t i);

}  // namespace torb
