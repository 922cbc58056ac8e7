#include "torb/zlattice.hpp"

#include <algorithm>
#include <set>

#include "torb/errors.hpp"

namespace torb {

namespace {

// Smallest nonzero |entry| of d in the block [k, rows) x [k, cols), ties
// broken row-major. Returns false when the block is all zero.
bool find_pivot(const IntMatrix& d, std::size_t k, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = k; i < d.rows(); ++i)
        for (std::size_t j = k; j < d.cols(); ++j) {
            const Int& e = d.at(i, j);
            if (e == 0) continue;
            Int a = abs(e);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SnfDecomposition s{IntMatrix::identity(r), m, IntMatrix::identity(c)};
    IntMatrix& u = s.u;
    IntMatrix& d = s.d;
    IntMatrix& v = s.v;
    const std::size_t t = std::min(r, c);
    for (std::size_t k = 0; k < t; ++k) {
        std::size_t pi = 0, pj = 0;
        if (!find_pivot(d, k, pi, pj)) break;  // trailing block is zero
        for (;;) {
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);
            // Reduce column k and row k by the pivot. Truncated division
            // leaves remainders strictly smaller than |pivot|, so whenever a
            // remainder survives we re-pick and the pivot shrinks.
            bool dirty = false;
            for (std::size_t i = k + 1; i < r; ++i) {
                if (d.at(i, k) == 0) continue;
                Int q = d.at(i, k) / d.at(k, k);
                d.add_row(i, k, -q);
                u.add_row(i, k, -q);
                if (d.at(i, k) != 0) dirty = true;
            }
            for (std::size_t j = k + 1; j < c; ++j) {
                if (d.at(k, j) == 0) continue;
                Int q = d.at(k, j) / d.at(k, k);
                d.add_col(j, k, -q);
                v.add_col(j, k, -q);
                if (d.at(k, j) != 0) dirty = true;
            }
            if (dirty) {
                find_pivot(d, k, pi, pj);
                continue;
            }
            // Pivot must divide the whole trailing block for the chain
            // d_k | d_{k+1} | ... ; pull a bad row up and reduce again.
            std::size_t bi = r;
            for (std::size_t i = k + 1; i < r && bi == r; ++i)
                for (std::size_t j = k + 1; j < c; ++j)
                    if (d.at(i, j) % d.at(k, k) != 0) {
                        bi = i;
                        break;
                    }
            if (bi == r) break;
            d.add_row(k, bi, 1);
            u.add_row(k, bi, 1);
            pi = k;
            pj = k;
        }
    }
    for (std::size_t k = 0; k < t; ++k)
        if (d.at(k, k) < 0) {
            d.negate_row(k);
            u.negate_row(k);
        }
    return s;
}

std::optional<ModSolution> solve_linear_mod(const IntMatrix& m,
                                            const std::vector<Int>& rhs,
                                            const Int& n) {
    if (n < 2) throw InputError("solve_linear_mod: modulus must be >= 2");
    if (rhs.size() != m.rows())
        throw InputError("solve_linear_mod: rhs length does not match row count");
    const std::size_t r = m.rows(), k = m.cols(), t = std::min(r, k);
    SnfDecomposition s = smith_normal_form(m);
    // M y = rhs (mod n) becomes D z = U rhs (mod n) with y = V z; each row of
    // the diagonal system is solvable iff gcd(d_i, n) divides its target.
    std::vector<Int> c = mat_vec(s.u, rhs);
    std::vector<Int> z(k);
    for (std::size_t i = 0; i < r; ++i) {
        Int ci = mod_floor(c[i], n);
        Int di = i < t ? s.d.at(i, i) : Int(0);
        Int g = gcd(di, n);
        if (g == 0) g = n;  // d_i = 0 row: constraint is n | c_i
        if (ci % g != 0) return std::nullopt;
        if (i < t) {
            Int nn = n / g;
            if (nn > 1) z[i] = mod_floor((ci / g) * mod_inverse(di / g, nn), nn);
        }
    }
    ModSolution out;
    out.particular.resize(k);
    std::vector<Int> y = mat_vec(s.v, z);
    for (std::size_t j = 0; j < k; ++j) out.particular[j] = mod_floor(y[j], n);
    for (std::size_t j = 0; j < k; ++j) {
        Int dj = j < t ? s.d.at(j, j) : Int(0);
        Int g = gcd(dj, n);
        if (g == 0) g = n;
        if (g == 1) continue;  // homogeneous part at this coordinate is trivial
        Int step = n / g;
        std::vector<Int> gen(k);
        for (std::size_t i = 0; i < k; ++i) gen[i] = mod_floor(step * s.v.at(i, j), n);
        out.kernel_basis.push_back(std::move(gen));
    }
    return out;
}

IntMatrix unimodular_completion(const Vec2& xi) {
    ExtGcd e = ext_gcd(xi[0], xi[1]);
    if (e.g != 1) throw InputError("unimodular_completion: vector is not primitive");
    return IntMatrix{{e.x, e.y}, {-xi[1], xi[0]}};
}

std::vector<IntMatrix> gl_enumerate(std::size_t n, unsigned depth) {
    if (n < 1) throw InputError("gl_enumerate: dimension must be >= 1");
    std::vector<IntMatrix> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int sgn : {1, -1}) {
                IntMatrix e = IntMatrix::identity(n);
                e.at(i, j) = sgn;
                gens.push_back(e);
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            IntMatrix p = IntMatrix::identity(n);
            p.swap_rows(i, j);
            gens.push_back(p);
        }
    for (std::size_t i = n; i-- > 0;) {
        IntMatrix f = IntMatrix::identity(n);
        f.at(i, i) = -1;
        gens.push_back(f);
    }

    std::vector<IntMatrix> out{IntMatrix::identity(n)};
    std::set<std::vector<Int>> seen{out.front().entries()};
    std::size_t lo = 0;
    for (unsigned level = 0; level < depth; ++level) {
        const std::size_t hi = out.size();
        for (std::size_t idx = lo; idx < hi; ++idx)
            for (const auto& g : gens) {
                IntMatrix p = out[idx] * g;
                if (seen.insert(p.entries()).second) out.push_back(p);
            }
        lo = hi;
        if (lo == out.size()) break;
    }
    return out;
}

}  // namespace torb
