#include "torb/decide.hpp"

#include <sstream>
#include <stdexcept>

#include "torb/errors.hpp"
#include "torb/zlattice.hpp"

namespace torb {

namespace {

// Coefficients c[0..n] of det(lambda I - A) = sum c[k] lambda^(n-k), c[0] = 1,
// by the Faddeev-LeVerrier recurrence. All divisions are exact.
std::vector<Int> char_poly(const IntMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<Int> c{1};
    c.reserve(n + 1);
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix am = a * m;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am.at(i, i);
        if (tr % Int(k) != 0)
            throw std::logic_error("char_poly: recurrence produced a non-integer");
        Int ck = -tr / Int(k);
        c.push_back(ck);
        for (std::size_t i = 0; i < n; ++i) am.at(i, i) += ck;
        m = std::move(am);
    }
    return c;
}

// Descartes count of sign alternations; exact root count for polynomials
// with only real roots, which characteristic polynomials of symmetric
// matrices are.
std::size_t sign_changes(const std::vector<Int>& coeffs) {
    int prev = 0;
    std::size_t changes = 0;
    for (const Int& c : coeffs) {
        if (c == 0) continue;
        int s = c > 0 ? 1 : -1;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

std::string signature_string(const FormInvariants& f) {
    std::ostringstream os;
    os << '(' << f.n_plus << ',' << f.n_zero << ',' << f.n_minus << ')';
    return os.str();
}

// First differing congruence invariant, in the fixed order |det|, signature,
// rank, parity; nullopt when all agree.
std::optional<std::string> invariant_reject(const IntMatrix& a, const IntMatrix& a2) {
    FormInvariants f1 = form_invariants(a);
    FormInvariants f2 = form_invariants(a2);
    std::ostringstream os;
    if (f1.abs_det != f2.abs_det) {
        os << "|det| differs: " << f1.abs_det << " vs " << f2.abs_det;
        return os.str();
    }
    if (f1.n_plus != f2.n_plus || f1.n_zero != f2.n_zero || f1.n_minus != f2.n_minus) {
        os << "signature differs: " << signature_string(f1) << " vs " << signature_string(f2);
        return os.str();
    }
    if (f1.rank != f2.rank) {
        os << "rank differs: " << f1.rank << " vs " << f2.rank;
        return os.str();
    }
    if (f1.even != f2.even) {
        os << "parity differs: " << (f1.even ? "even" : "odd") << " vs "
           << (f2.even ? "even" : "odd");
        return os.str();
    }
    return std::nullopt;
}

// Candidate W's satisfying W^t A W = A', kept in the order of `pool` so the
// z/y/W search below returns the same witness as the unfiltered nesting.
std::vector<IntMatrix> filter_congruent(const std::vector<IntMatrix>& pool,
                                        const IntMatrix& a, const IntMatrix& a2) {
    std::vector<IntMatrix> out;
    for (const IntMatrix& w : pool)
        if (w.transposed() * a * w == a2) out.push_back(w);
    return out;
}

// Deterministic witness search over z (ascending units of Z_m), y
// (lexicographic in (Z_m)^n), and W (order of `ws`, all already satisfying
// the A equation). Returns the first representation taking t to t2.
std::optional<CellMapRep> search_witness(const CupTriple& t, const CupTriple& t2,
                                         const std::vector<IntMatrix>& ws) {
    if (ws.empty()) return std::nullopt;
    const Int& m = t.m;
    if (m == 1) return CellMapRep{ws.front(), {}, 1};
    std::vector<std::vector<Int>> bw;
    bw.reserve(ws.size());
    for (const IntMatrix& w : ws) bw.push_back(vec_mat(t.b, w));
    const std::size_t n = t.n;
    for (Int z = 1; z < m; ++z) {
        if (gcd(z, m) != 1) continue;
        std::vector<Int> y(n, 0);
        for (;;) {
            std::vector<Int> ya = vec_mat(y, t.a);
            // c' does not involve W, so a mismatch skips the whole W loop.
            Int c2 = mod_floor(dot(ya, y) + 2 * z * dot(y, t.b) + z * z * t.c, m);
            if (c2 == t2.c) {
                for (std::size_t wi = 0; wi < ws.size(); ++wi) {
                    std::vector<Int> b2 = vec_mat(ya, ws[wi]);
                    bool hit = true;
                    for (std::size_t i = 0; i < n && hit; ++i)
                        if (mod_floor(b2[i] + z * bw[wi][i], m) != t2.b[i]) hit = false;
                    if (hit) return CellMapRep{ws[wi], y, z};
                }
            }
            std::size_t pos = n;
            bool done = true;
            while (pos-- > 0) {
                if (++y[pos] < m) {
                    done = false;
                    break;
                }
                y[pos] = 0;
            }
            if (done) break;
        }
    }
    return std::nullopt;
}

// The incremental search must agree with the reference transform; a witness
// that fails this re-check is an internal fault, not a verdict.
void check_witness(const CupTriple& t, const CupTriple& t2, const CellMapRep& r) {
    if (!is_equivalence_rep(r, t.m) || !(transform(t, r) == t2))
        throw std::logic_error("equivalence search produced a non-verifying witness");
}

bool odd(const Int& m) { return m % 2 != 0; }

}  // namespace

FormInvariants form_invariants(const IntMatrix& a) {
    if (!a.is_symmetric())
        throw InputError("form_invariants: matrix must be symmetric");
    const std::size_t n = a.rows();
    std::vector<Int> c = char_poly(a);
    std::size_t n_zero = 0;
    while (n_zero < n && c[n - n_zero] == 0) ++n_zero;
    std::size_t n_plus = sign_changes(c);
    std::vector<Int> cneg = c;
    for (std::size_t i = 0; i < cneg.size(); ++i)
        if ((n - i) % 2 == 1) cneg[i] = -cneg[i];
    std::size_t n_minus = sign_changes(cneg);
    bool even = true;
    for (std::size_t i = 0; i < n; ++i)
        if (a.at(i, i) % 2 != 0) even = false;
    return FormInvariants{abs(a.det()), n_plus, n_zero, n_minus, n_plus + n_minus, even};
}

std::pair<IntMatrix, std::vector<Int>> splitting_system(const CupTriple& t, const Int& q) {
    if (q < 1 || q % 2 == 0)
        throw InputError("splitting_system: q must be odd and >= 1");
    if (t.m % q != 0) throw InputError("splitting_system: q must divide m");
    const std::size_t n = t.n;
    IntMatrix sys(n + 1, n);
    std::vector<Int> rhs(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) sys.at(i, j) = mod_floor(t.a.at(i, j), q);
        rhs[i] = mod_floor(t.m == 1 ? Int(0) : -t.b[i], q);
    }
    for (std::size_t j = 0; j < n; ++j)
        sys.at(n, j) = mod_floor(t.m == 1 ? Int(0) : t.b[j], q);
    rhs[n] = mod_floor(-t.c, q);
    return {std::move(sys), std::move(rhs)};
}

std::vector<Int> lift_solution(const std::vector<Int>& y, unsigned s, const Int& q) {
    Int two_s = Int(1) << s;
    ExtGcd e = ext_gcd(two_s, q);
    if (e.g != 1) throw InputError("lift_solution: 2^s and q must be coprime");
    Int mod = two_s * q;
    // 2^s a + q b = 1 makes 2^s a congruent to 1 mod q and to 0 mod 2^s.
    Int factor = mod_floor(two_s * e.x, mod);
    std::vector<Int> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = mod_floor(factor * y[i], mod);
    return out;
}

SplitVerdict decide_split(const CupTriple& t) {
    auto [s, q] = split_two_part(t.m);
    SplitVerdict v;
    v.s = s;
    v.q = q;
    if (q == 1) {
        v.outcome = SplitVerdict::Outcome::NoOddPart;
        return v;
    }
    auto [sys, rhs] = splitting_system(t, q);
    std::vector<std::vector<std::pair<Int, Int>>> percoord(t.n);
    for (const auto& [p, e] : factorize(q)) {
        Int pr = boost::multiprecision::pow(p, e);
        auto sol = solve_linear_mod(sys, rhs, pr);
        if (!sol) {
            v.outcome = SplitVerdict::Outcome::NoSplit;
            return v;
        }
        for (std::size_t i = 0; i < t.n; ++i)
            percoord[i].emplace_back(sol->particular[i], pr);
    }
    v.y.resize(t.n);
    for (std::size_t i = 0; i < t.n; ++i) v.y[i] = crt_combine(percoord[i]).first;
    v.lift = lift_solution(v.y, s, q);
    CupTriple moved = transform(t, CellMapRep{IntMatrix::identity(t.n), v.lift, 1});
    for (const Int& bi : moved.b)
        if (bi % q != 0)
            throw std::logic_error("decide_split: lift fails b' == 0 (mod q)");
    if (moved.c % q != 0)
        throw std::logic_error("decide_split: lift fails c' == 0 (mod q)");
    v.reduced = make_triple(t.n, Int(1) << s, moved.a, moved.b, moved.c);
    v.outcome = SplitVerdict::Outcome::Splits;
    return v;
}

BruteSplitResult brute_force_split(const CupTriple& t, const Int& q, const Int& budget) {
    auto [sys, rhs] = splitting_system(t, q);
    Int total = 1;
    for (std::size_t i = 0; i < t.n; ++i) {
        total *= q;
        if (total > budget)
            throw BudgetError("brute_force_split: q^n exceeds the candidate budget");
    }
    BruteSplitResult res{false, {}};
    std::vector<Int> y(t.n, 0);
    for (;;) {
        bool ok = true;
        for (std::size_t i = 0; i <= t.n && ok; ++i) {
            Int row = -rhs[i];
            for (std::size_t j = 0; j < t.n; ++j) row += sys.at(i, j) * y[j];
            if (row % q != 0) ok = false;
        }
        if (ok) res.solutions.push_back(y);
        std::size_t pos = t.n;
        bool done = true;
        while (pos-- > 0) {
            if (++y[pos] < q) {
                done = false;
                break;
            }
            y[pos] = 0;
        }
        if (done) break;
    }
    res.solvable = !res.solutions.empty();
    return res;
}

EquivVerdict congruence_equiv(const IntMatrix& a, const IntMatrix& a2, unsigned depth) {
    if (a.rows() != a2.rows() || a.cols() != a2.cols())
        throw InputError("congruence_equiv: shapes differ");
    if (!a.is_symmetric() || !a2.is_symmetric())
        throw InputError("congruence_equiv: matrices must be symmetric");
    if (auto r = invariant_reject(a, a2))
        return EquivVerdict{EquivVerdict::Outcome::NotEquivalent, std::nullopt, *r, true};
    for (const IntMatrix& w : gl_enumerate(a.rows(), depth))
        if (w.transposed() * a * w == a2)
            return EquivVerdict{EquivVerdict::Outcome::Equivalent,
                                CellMapRep{w, {}, 1}, "", true};
    return EquivVerdict{EquivVerdict::Outcome::Inconclusive, std::nullopt,
                        "search exhausted at depth " + std::to_string(depth), true};
}

EquivVerdict ring_equiv(const CupTriple& t, const CupTriple& t2, unsigned depth) {
    if (t.n != t2.n) throw InputError("ring_equiv: triples have different n");
    const bool conclusive = odd(t.m) && odd(t2.m);
    if (t.m != t2.m) {
        std::ostringstream os;
        os << "m differs: " << t.m << " vs " << t2.m;
        return EquivVerdict{EquivVerdict::Outcome::NotEquivalent, std::nullopt,
                            os.str(), conclusive};
    }
    if (auto r = invariant_reject(t.a, t2.a))
        return EquivVerdict{EquivVerdict::Outcome::NotEquivalent, std::nullopt, *r,
                            conclusive};
    std::vector<IntMatrix> ws = filter_congruent(gl_enumerate(t.n, depth), t.a, t2.a);
    if (auto w = search_witness(t, t2, ws)) {
        check_witness(t, t2, *w);
        return EquivVerdict{EquivVerdict::Outcome::Equivalent, std::move(w), "",
                            conclusive};
    }
    return EquivVerdict{EquivVerdict::Outcome::Inconclusive, std::nullopt,
                        "search exhausted at depth " + std::to_string(depth),
                        conclusive};
}

EquivVerdict brute_force_equiv(const CupTriple& t, const CupTriple& t2,
                               const Int& budget) {
    if (t.n != t2.n) throw InputError("brute_force_equiv: triples have different n");
    const bool conclusive = odd(t.m) && odd(t2.m);
    if (t.m != t2.m) {
        std::ostringstream os;
        os << "m differs: " << t.m << " vs " << t2.m;
        return EquivVerdict{EquivVerdict::Outcome::NotEquivalent, std::nullopt,
                            os.str(), conclusive};
    }
    if (auto r = invariant_reject(t.a, t2.a))
        return EquivVerdict{EquivVerdict::Outcome::NotEquivalent, std::nullopt, *r,
                            conclusive};
    const std::size_t cells_count = t.n * t.n;
    Int box_total = 1;
    for (std::size_t i = 0; i < cells_count; ++i) {
        box_total *= 3;
        if (box_total > budget)
            throw BudgetError("brute_force_equiv: W box exceeds the candidate budget");
    }
    // W candidates: every matrix with entries in {-1, 0, 1} and det +/-1,
    // enumerated lexicographically over the entry vector.
    std::vector<IntMatrix> box;
    std::vector<int> ent(cells_count, -1);
    for (;;) {
        IntMatrix w(t.n, t.n);
        for (std::size_t i = 0; i < cells_count; ++i)
            w.at(i / t.n, i % t.n) = ent[i];
        Int d = w.det();
        if (d == 1 || d == -1) box.push_back(std::move(w));
        std::size_t pos = cells_count;
        bool done = true;
        while (pos-- > 0) {
            if (++ent[pos] <= 1) {
                done = false;
                break;
            }
            ent[pos] = -1;
        }
        if (done) break;
    }
    Int units = 0;
    if (t.m == 1) {
        units = 1;
    } else {
        for (Int z = 1; z < t.m; ++z)
            if (gcd(z, t.m) == 1) ++units;
    }
    Int yspace = 1;
    for (std::size_t i = 0; i < t.n; ++i) yspace *= t.m;
    if (units * yspace * Int(box.size()) > budget)
        throw BudgetError("brute_force_equiv: candidate count exceeds the budget");
    std::vector<IntMatrix> ws = filter_congruent(box, t.a, t2.a);
    if (auto w = search_witness(t, t2, ws)) {
        check_witness(t, t2, *w);
        return EquivVerdict{EquivVerdict::Outcome::Equivalent, std::move(w), "",
                            conclusive};
    }
    return EquivVerdict{EquivVerdict::Outcome::Inconclusive, std::nullopt,
                        "W box exhausted", conclusive};
}

}  // namespace torb
