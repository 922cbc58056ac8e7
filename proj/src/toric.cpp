#include "torb/toric.hpp"

#include <sstream>
#include <stdexcept>

#include "torb/errors.hpp"

namespace torb {

namespace {

Int det2(const Vec2& a, const Vec2& b) {
    return a[0] * b[1] - a[1] * b[0];
}

}  // namespace

std::optional<ValidationError> validate(const CharacteristicData& data) {
    const std::size_t k = data.xi.size();
    if (k < 3)
        return ValidationError{ValidationError::Kind::TooFewEdges, 0,
                               "need at least 3 edge vectors"};
    for (std::size_t i = 1; i <= k; ++i) {
        const Vec2& v = data.vec(i);
        if (gcd(v[0], v[1]) != 1) {
            std::ostringstream os;
            os << "vector " << i << " is not primitive";
            return ValidationError{ValidationError::Kind::NonPrimitive, i, os.str()};
        }
    }
    for (std::size_t i = 1; i <= k; ++i) {
        if (det2(data.vec(i), data.vec(i + 1)) == 0) {
            std::ostringstream os;
            os << "adjacent vectors " << i << " and " << (i % k) + 1
               << " are linearly dependent";
            return ValidationError{ValidationError::Kind::AdjacentDependent, i, os.str()};
        }
    }
    return std::nullopt;
}

void require_valid(const CharacteristicData& data) {
    if (auto err = validate(data)) throw InputError(err->message);
}

IntMatrix lens_orders(const CharacteristicData& data) {
    require_valid(data);
    const std::size_t k = data.xi.size();
    IntMatrix t(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            Int m = abs(det2(data.xi[i], data.xi[j]));
            t.at(i, j) = m;
            t.at(j, i) = m;
        }
    return t;
}

Int torsion_order(const CharacteristicData& data) {
    IntMatrix t = lens_orders(data);
    Int m = 0;
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = i + 1; j < t.cols(); ++j)
            m = gcd(m, t.at(i, j));
    return m == 0 ? Int(1) : m;
}

CohomologyTable cohomology(const CharacteristicData& data) {
    require_valid(data);
    return CohomologyTable{
        {1, 1}, {0, 1}, {data.n(), 1}, {0, torsion_order(data)}, {1, 1}};
}

Int nu_p(const Int& t, const Int& p) {
    if (t < 1) throw InputError("nu_p: argument must be >= 1");
    if (!is_prime(p)) throw InputError("nu_p: modulus base must be prime");
    Int pow = 1;
    Int rest = t;
    while (rest % p == 0) {
        rest /= p;
        pow *= p;
    }
    return pow;
}

std::size_t vertex_for_prime(const CharacteristicData& data, const Int& p) {
    require_valid(data);
    Int m = torsion_order(data);
    if (!is_prime(p) || m % p != 0)
        throw InputError("vertex_for_prime: p must be a prime dividing the torsion order");
    Int target = nu_p(m, p);
    const std::size_t k = data.xi.size();
    for (std::size_t i = 1; i <= k; ++i) {
        Int adj = abs(det2(data.vec(i), data.vec(i + 1)));
        if (nu_p(adj, p) == target) return i;
    }
    throw std::logic_error("vertex_for_prime: no vertex attains nu_p(m)");
}

LensDescriptor vertex_kernel(const CharacteristicData& data, std::size_t i) {
    require_valid(data);
    if (i < 1 || i > data.xi.size())
        throw InputError("vertex_kernel: vertex index out of range");
    const Vec2& a = data.vec(i);
    const Vec2& b = data.vec(i + 1);
    // Columns of M are the two edge vectors; the kernel of the induced torus
    // map is M^{-1}Z^2 / Z^2, generated by the second column of V divided by
    // d_2 once U M V = diag(1, d_2).
    IntMatrix m{{a[0], b[0]}, {a[1], b[1]}};
    SnfDecomposition s = smith_normal_form(m);
    Int order = s.d.at(1, 1);
    Vec2 gen{mod_floor(s.v.at(0, 1), order), mod_floor(s.v.at(1, 1), order)};
    if (order > 1) {
        // Primitivity of xi_i makes the second-numerator projection of the
        // kernel a bijection onto Z_order, so exactly one generator has
        // second numerator 1. Normalizing to it keeps the output independent
        // of the reduction path and of any ambient GL_2(Z) change of basis.
        if (gcd(gen[1], order) != 1)
            throw std::logic_error("vertex_kernel: generator projection is not a unit");
        Int inv = mod_inverse(gen[1], order);
        gen = {mod_floor(gen[0] * inv, order), Int(1)};
    }
    return LensDescriptor{i, order, gen};
}

}  // namespace torb
