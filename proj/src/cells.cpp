#include "torb/cells.hpp"

#include "torb/errors.hpp"

namespace torb {

CupTriple make_triple(std::size_t n, const Int& m, IntMatrix a,
                      std::vector<Int> b, Int c) {
    if (n < 1) throw InputError("make_triple: n must be >= 1");
    if (m < 1) throw InputError("make_triple: m must be >= 1");
    if (a.rows() != n || a.cols() != n)
        throw InputError("make_triple: A must be n x n");
    if (!a.is_symmetric()) throw InputError("make_triple: A must be symmetric");
    if (m == 1) return CupTriple{n, m, std::move(a), {}, 0};
    if (b.size() != n)
        throw InputError("make_triple: b must have length n when m > 1");
    for (Int& e : b) e = mod_floor(e, m);
    return CupTriple{n, m, std::move(a), std::move(b), mod_floor(c, m)};
}

CupTriple transform(const CupTriple& t, const CellMapRep& r) {
    if (r.w.rows() != t.n || r.w.cols() != t.n)
        throw InputError("transform: W must be n x n");
    IntMatrix a2 = r.w.transposed() * t.a * r.w;
    if (t.m == 1) return make_triple(t.n, t.m, std::move(a2));
    if (r.y.size() != t.n)
        throw InputError("transform: y must have length n when m > 1");
    std::vector<Int> ya = vec_mat(r.y, t.a);
    std::vector<Int> b2 = vec_mat(ya, r.w);
    std::vector<Int> bw = vec_mat(t.b, r.w);
    for (std::size_t i = 0; i < t.n; ++i) b2[i] += r.z * bw[i];
    Int c2 = dot(ya, r.y) + 2 * r.z * dot(r.y, t.b) + r.z * r.z * t.c;
    return make_triple(t.n, t.m, std::move(a2), std::move(b2), c2);
}

CupTriple add(const CupTriple& t1, const CupTriple& t2) {
    if (t1.n != t2.n) throw InputError("add: triples have different n");
    if (t1.m != t2.m) throw InputError("add: triples have different m");
    IntMatrix a = t1.a + t2.a;
    if (t1.m == 1) return make_triple(t1.n, t1.m, std::move(a));
    std::vector<Int> b(t1.n);
    for (std::size_t i = 0; i < t1.n; ++i) b[i] = t1.b[i] + t2.b[i];
    return make_triple(t1.n, t1.m, std::move(a), std::move(b), t1.c + t2.c);
}

AttachingForm attaching_form(const CupTriple& t) {
    if (t.m != 1) throw InputError("attaching_form: requires m = 1");
    AttachingForm f{t.n, {}, {}};
    f.diag.reserve(t.n);
    for (std::size_t i = 0; i < t.n; ++i) f.diag.push_back(t.a.at(i, i));
    for (std::size_t j = 0; j < t.n; ++j)
        for (std::size_t k = j + 1; k < t.n; ++k) f.off.push_back(t.a.at(j, k));
    return f;
}

CupTriple form_to_triple(const AttachingForm& f) {
    if (f.diag.size() != f.n || f.off.size() != f.n * (f.n - 1) / 2)
        throw InputError("form_to_triple: coefficient counts do not match n");
    IntMatrix a(f.n, f.n);
    for (std::size_t i = 0; i < f.n; ++i) a.at(i, i) = f.diag[i];
    std::size_t idx = 0;
    for (std::size_t j = 0; j < f.n; ++j)
        for (std::size_t k = j + 1; k < f.n; ++k) {
            a.at(j, k) = f.off[idx];
            a.at(k, j) = f.off[idx];
            ++idx;
        }
    return make_triple(f.n, 1, std::move(a));
}

bool is_equivalence_rep(const CellMapRep& r, const Int& m) {
    if (!r.w.is_square()) return false;
    Int d = r.w.det();
    if (d != 1 && d != -1) return false;
    return gcd(r.z, m) == 1;
}

}  // namespace torb
