#include "torb/cli.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "torb/cells.hpp"
#include "torb/decide.hpp"
#include "torb/errors.hpp"
#include "torb/io.hpp"

namespace torb::cli {

namespace {

using nlohmann::json;

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

int emit_error(std::ostream& out, std::ostream& err, const Options& opt,
               const std::string& kind, const std::string& message, int code) {
    if (opt.format == "text") {
        err << "error (" << kind << "): " << message << "\n";
    } else {
        json doc;
        doc["error"] = {{"kind", kind}, {"message", message}};
        emit(out, doc);
    }
    return code;
}

const char* kind_name(ValidationError::Kind k) {
    switch (k) {
        case ValidationError::Kind::TooFewEdges: return "TooFewEdges";
        case ValidationError::Kind::NonPrimitive: return "NonPrimitive";
        case ValidationError::Kind::AdjacentDependent: return "AdjacentDependent";
    }
    return "Unknown";
}

const char* split_outcome_name(SplitVerdict::Outcome o) {
    switch (o) {
        case SplitVerdict::Outcome::Splits: return "Splits";
        case SplitVerdict::Outcome::NoSplit: return "NoSplit";
        case SplitVerdict::Outcome::NoOddPart: return "NoOddPart";
    }
    return "Unknown";
}

const char* equiv_outcome_name(EquivVerdict::Outcome o) {
    switch (o) {
        case EquivVerdict::Outcome::Equivalent: return "Equivalent";
        case EquivVerdict::Outcome::NotEquivalent: return "NotEquivalent";
        case EquivVerdict::Outcome::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

std::string group_text(const GroupDescriptor& g) {
    std::string s;
    if (g.rank == 1) {
        s = "Z";
    } else if (g.rank > 1) {
        s = "Z^" + std::to_string(g.rank);
    }
    if (g.torsion > 1) {
        if (!s.empty()) s += " + ";
        s += "Z_" + g.torsion.str();
    }
    if (s.empty()) s = "0";
    return s;
}

std::string vec_text(const std::vector<Int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

std::string triple_text(const CupTriple& t) {
    std::string s = "n=" + std::to_string(t.n) + " m=" + t.m.str() +
                    " A=" + t.a.to_string();
    if (t.m > 1) {
        s += " b=" + vec_text(t.b) + " c=" + t.c.str();
    }
    return s;
}

std::string rep_text(const CellMapRep& r, const Int& m) {
    std::string s = "W=" + r.w.to_string();
    if (m > 1) {
        s += " y=" + vec_text(r.y) + " z=" + r.z.str();
    }
    return s;
}

void render_split_text(std::ostream& out, const SplitVerdict& v) {
    out << "outcome: " << split_outcome_name(v.outcome) << "\n";
    out << "s: " << v.s << "\n";
    out << "q: " << v.q.str() << "\n";
    if (v.outcome == SplitVerdict::Outcome::Splits) {
        out << "summand: P^3(" << v.q.str() << ")\n";
        out << "y: " << vec_text(v.y) << "\n";
        out << "lift: " << vec_text(v.lift) << "\n";
        out << "reduced: " << triple_text(*v.reduced) << "\n";
    }
}

void render_equiv_text(std::ostream& out, const EquivVerdict& v, const Int& m) {
    out << "outcome: " << equiv_outcome_name(v.outcome) << "\n";
    out << "homotopy_conclusive: " << (v.homotopy_conclusive ? "true" : "false")
        << "\n";
    if (v.outcome == EquivVerdict::Outcome::Equivalent) {
        out << "witness: " << rep_text(*v.witness, m) << "\n";
    } else {
        out << "reason: " << v.reason << "\n";
    }
}

int equiv_exit(EquivVerdict::Outcome o) {
    switch (o) {
        case EquivVerdict::Outcome::Equivalent: return 0;
        case EquivVerdict::Outcome::NotEquivalent: return 1;
        case EquivVerdict::Outcome::Inconclusive: return 4;
    }
    return 4;
}

EquivVerdict n_differs_verdict(const CupTriple& ta, const CupTriple& tb) {
    EquivVerdict v;
    v.outcome = EquivVerdict::Outcome::NotEquivalent;
    v.reason =
        "n differs: " + std::to_string(ta.n) + " vs " + std::to_string(tb.n);
    v.homotopy_conclusive = (ta.m % 2 != 0) && (tb.m % 2 != 0);
    return v;
}

// Packages an oracle-found solution exactly the way decide_split packages
// its own: lift, transform by (I, lift, 1), and reduce to modulus 2^s.
SplitVerdict assemble_split(const CupTriple& t, unsigned s, const Int& q,
                            std::vector<Int> y) {
    SplitVerdict v;
    v.outcome = SplitVerdict::Outcome::Splits;
    v.s = s;
    v.q = q;
    v.lift = lift_solution(y, s, q);
    v.y = std::move(y);
    CupTriple moved = transform(t, CellMapRep{IntMatrix::identity(t.n), v.lift, 1});
    for (const Int& e : moved.b) {
        if (e % q != 0) throw std::logic_error("assemble_split: b' not divisible by q");
    }
    if (moved.c % q != 0) throw std::logic_error("assemble_split: c' not divisible by q");
    v.reduced = make_triple(t.n, Int(1) << s, std::move(moved.a), std::move(moved.b),
                            moved.c);
    return v;
}

// One guarded body for every command, mapping the library's exception
// taxonomy onto the documented exit codes.
template <typename Fn>
int run_command(const Options& opt, std::ostream& out, std::ostream& err, Fn fn) {
    try {
        return fn();
    } catch (const InputError& e) {
        return emit_error(out, err, opt, "input", e.what(), 2);
    } catch (const IoError& e) {
        return emit_error(out, err, opt, "io", e.what(), 3);
    } catch (const BudgetError& e) {
        return emit_error(out, err, opt, "budget", e.what(), 5);
    }
}

}  // namespace

AnalysisReport build_analysis_report(const CharacteristicData& data) {
    AnalysisReport r;
    r.edges = data.edges();
    r.n = data.n();
    r.m_ij = lens_orders(data);
    r.m = torsion_order(data);
    auto [s, q] = split_two_part(r.m);
    r.s = s;
    r.q = q;
    r.cohomology = cohomology(data);
    if (r.m > 1) {
        for (const auto& [p, e] : factorize(r.m)) {
            r.primes.push_back({p, nu_p(r.m, p), vertex_for_prime(data, p)});
        }
    }
    for (std::size_t i = 1; i <= r.edges; ++i) {
        r.vertices.push_back(vertex_kernel(data, i));
    }
    return r;
}

nlohmann::json report_json(const AnalysisReport& r) {
    json doc;
    doc["edges"] = r.edges;
    doc["n"] = r.n;
    doc["m"] = io::int_json(r.m);
    doc["s"] = r.s;
    doc["q"] = io::int_json(r.q);
    doc["m_ij"] = io::matrix_json(r.m_ij);
    json coh;
    const GroupDescriptor* groups[] = {&r.cohomology.h0, &r.cohomology.h1,
                                       &r.cohomology.h2, &r.cohomology.h3,
                                       &r.cohomology.h4};
    for (std::size_t d = 0; d < 5; ++d) {
        coh["h" + std::to_string(d)] = {
            {"rank", groups[d]->rank},
            {"torsion", io::int_json(groups[d]->torsion)},
        };
    }
    doc["cohomology"] = coh;
    json primes = json::array();
    for (const auto& pv : r.primes) {
        primes.push_back({{"p", io::int_json(pv.p)},
                          {"nu_p", io::int_json(pv.nu_p)},
                          {"vertex", pv.vertex}});
    }
    doc["primes"] = primes;
    json vertices = json::array();
    for (const auto& lens : r.vertices) {
        vertices.push_back(
            {{"index", lens.vertex_index},
             {"order", io::int_json(lens.order)},
             {"kernel_generator",
              json::array({io::int_json(lens.kernel_generator[0]),
                           io::int_json(lens.kernel_generator[1])})}});
    }
    doc["vertices"] = vertices;
    return doc;
}

std::string report_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "edges: " << r.edges << "\n";
    out << "n: " << r.n << "\n";
    out << "m: " << r.m.str() << "  (s=" << r.s << ", q=" << r.q.str() << ")\n";
    out << "m_ij: " << r.m_ij.to_string() << "\n";
    const char* names[] = {"H^0", "H^1", "H^2", "H^3", "H^4"};
    const GroupDescriptor* groups[] = {&r.cohomology.h0, &r.cohomology.h1,
                                       &r.cohomology.h2, &r.cohomology.h3,
                                       &r.cohomology.h4};
    for (std::size_t d = 0; d < 5; ++d) {
        out << names[d] << ": " << group_text(*groups[d]) << "\n";
    }
    for (const auto& pv : r.primes) {
        out << "p=" << pv.p.str() << ": nu_p=" << pv.nu_p.str()
            << " vertex=" << pv.vertex << "\n";
    }
    for (const auto& lens : r.vertices) {
        out << "vertex " << lens.vertex_index << ": order " << lens.order.str();
        if (lens.order > 1) {
            out << ", kernel generator (" << lens.kernel_generator[0].str()
                << ", " << lens.kernel_generator[1].str() << ")";
        }
        out << "\n";
    }
    return out.str();
}

int cmd_analyze(const std::string& fan_path, const Options& opt,
                std::ostream& out, std::ostream& err) {
    return run_command(opt, out, err, [&]() {
        CharacteristicData data = io::parse_fan(io::load_json_file(fan_path));
        if (auto verr = validate(data)) {
            if (opt.format == "text") {
                err << "error (validation): " << verr->message << "\n";
            } else {
                json doc;
                doc["error"] = {{"kind", "validation"},
                                {"reason", kind_name(verr->kind)},
                                {"index", verr->index},
                                {"message", verr->message}};
                emit(out, doc);
            }
            return 2;
        }
        AnalysisReport r = build_analysis_report(data);
        if (opt.format == "text") {
            out << report_text(r);
        } else {
            emit(out, report_json(r));
        }
        return 0;
    });
}

int cmd_split(const std::string& triple_path, const Options& opt,
              std::ostream& out, std::ostream& err) {
    return run_command(opt, out, err, [&]() {
        CupTriple t = io::parse_triple(io::load_json_file(triple_path));
        SplitVerdict v = decide_split(t);
        if (opt.format == "text") {
            render_split_text(out, v);
        } else {
            emit(out, io::split_verdict_json(v));
        }
        return v.outcome == SplitVerdict::Outcome::NoSplit ? 1 : 0;
    });
}

int cmd_equiv(const std::string& path_a, const std::string& path_b,
              const Options& opt, std::ostream& out, std::ostream& err) {
    return run_command(opt, out, err, [&]() {
        CupTriple ta = io::parse_triple(io::load_json_file(path_a));
        CupTriple tb = io::parse_triple(io::load_json_file(path_b));
        EquivVerdict v = ta.n != tb.n ? n_differs_verdict(ta, tb)
                                      : ring_equiv(ta, tb, opt.depth);
        if (opt.format == "text") {
            render_equiv_text(out, v, ta.m);
        } else {
            emit(out, io::equiv_verdict_json(v, ta.m));
        }
        return equiv_exit(v.outcome);
    });
}

int cmd_oracle(const std::string& kind, const std::vector<std::string>& files,
               const Options& opt, std::ostream& out, std::ostream& err) {
    return run_command(opt, out, err, [&]() {
        if (kind == "split") {
            if (files.size() != 1) {
                throw InputError("oracle split expects exactly one triple file");
            }
            CupTriple t = io::parse_triple(io::load_json_file(files[0]));
            auto [s, q] = split_two_part(t.m);
            SplitVerdict v;
            std::vector<std::vector<Int>> solutions;
            if (q == 1) {
                v.outcome = SplitVerdict::Outcome::NoOddPart;
                v.s = s;
                v.q = q;
            } else {
                BruteSplitResult res = brute_force_split(t, q, opt.budget);
                solutions = std::move(res.solutions);
                if (res.solvable) {
                    v = assemble_split(t, s, q, solutions.front());
                } else {
                    v.outcome = SplitVerdict::Outcome::NoSplit;
                    v.s = s;
                    v.q = q;
                }
            }
            if (opt.format == "text") {
                render_split_text(out, v);
                out << "solutions: " << solutions.size() << "\n";
                for (const auto& y : solutions) out << "  " << vec_text(y) << "\n";
            } else {
                json doc = io::split_verdict_json(v);
                json sols = json::array();
                for (const auto& y : solutions) sols.push_back(io::vector_json(y));
                doc["solutions"] = sols;
                emit(out, doc);
            }
            return v.outcome == SplitVerdict::Outcome::NoSplit ? 1 : 0;
        }
        if (kind == "equiv") {
            if (files.size() != 2) {
                throw InputError("oracle equiv expects exactly two triple files");
            }
            CupTriple ta = io::parse_triple(io::load_json_file(files[0]));
            CupTriple tb = io::parse_triple(io::load_json_file(files[1]));
            EquivVerdict v = ta.n != tb.n ? n_differs_verdict(ta, tb)
                                          : brute_force_equiv(ta, tb, opt.budget);
            if (opt.format == "text") {
                render_equiv_text(out, v, ta.m);
            } else {
                emit(out, io::equiv_verdict_json(v, ta.m));
            }
            return equiv_exit(v.outcome);
        }
        throw InputError("unknown oracle kind: " + kind);
    });
}

}  // namespace torb::cli
