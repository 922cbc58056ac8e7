#include "torb/io.hpp"

#include <fstream>
#include <sstream>

#include "torb/errors.hpp"

namespace torb::io {

namespace {

const Int kJsonSafe = Int(1) << 53;

std::size_t parse_count(const json& j, const std::string& what) {
    Int v = parse_int(j, what);
    if (v < 0 || v > 1000000) throw InputError(what + " out of range");
    return static_cast<std::size_t>(v);
}

}  // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

json int_json(const Int& v) {
    if (v <= kJsonSafe && v >= -kJsonSafe) return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

Int parse_int(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw InputError(what + ": not a decimal integer string");
        }
    }
    throw InputError(what + ": expected an integer or decimal string");
}

CharacteristicData parse_fan(const json& j) {
    if (!j.is_object() || !j.contains("xi"))
        throw InputError("fan document must be an object with an \"xi\" array");
    const json& xi = j.at("xi");
    if (!xi.is_array()) throw InputError("\"xi\" must be an array of 2-vectors");
    CharacteristicData data;
    data.xi.reserve(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) {
        const json& v = xi.at(i);
        std::ostringstream what;
        what << "xi[" << i << "]";
        if (!v.is_array() || v.size() != 2)
            throw InputError(what.str() + ": expected [a, b]");
        data.xi.push_back(Vec2{parse_int(v.at(0), what.str() + "[0]"),
                               parse_int(v.at(1), what.str() + "[1]")});
    }
    return data;
}

CupTriple parse_triple(const json& j) {
    if (!j.is_object()) throw InputError("triple document must be a JSON object");
    for (const char* key : {"n", "m", "A"})
        if (!j.contains(key))
            throw InputError(std::string("triple document lacks \"") + key + "\"");
    std::size_t n = parse_count(j.at("n"), "n");
    Int m = parse_int(j.at("m"), "m");
    const json& ja = j.at("A");
    if (!ja.is_array() || ja.size() != n)
        throw InputError("\"A\" must be an n x n array of rows");
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = ja.at(i);
        if (!row.is_array() || row.size() != n)
            throw InputError("\"A\" must be an n x n array of rows");
        for (std::size_t k = 0; k < n; ++k) {
            std::ostringstream what;
            what << "A[" << i << "][" << k << "]";
            a.at(i, k) = parse_int(row.at(k), what.str());
        }
    }
    std::vector<Int> b;
    Int c = 0;
    if (m > 1) {
        if (!j.contains("b") || !j.contains("c"))
            throw InputError("triple with m > 1 requires \"b\" and \"c\"");
        const json& jb = j.at("b");
        if (!jb.is_array() || jb.size() != n)
            throw InputError("\"b\" must be an array of length n");
        for (std::size_t i = 0; i < n; ++i) {
            std::ostringstream what;
            what << "b[" << i << "]";
            b.push_back(parse_int(jb.at(i), what.str()));
        }
        c = parse_int(j.at("c"), "c");
    }
    return make_triple(n, m, std::move(a), std::move(b), c);
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(int_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_json(const std::vector<Int>& v) {
    json out = json::array();
    for (const Int& e : v) out.push_back(int_json(e));
    return out;
}

json triple_json(const CupTriple& t) {
    json out;
    out["n"] = t.n;
    out["m"] = int_json(t.m);
    out["A"] = matrix_json(t.a);
    if (t.m > 1) {
        out["b"] = vector_json(t.b);
        out["c"] = int_json(t.c);
    }
    return out;
}

json rep_json(const CellMapRep& r, const Int& m) {
    json out;
    out["W"] = matrix_json(r.w);
    if (m > 1) {
        out["y"] = vector_json(r.y);
        out["z"] = int_json(r.z);
    }
    return out;
}

json invariants_json(const FormInvariants& f) {
    json out;
    out["abs_det"] = int_json(f.abs_det);
    out["signature"] = json::array({f.n_plus, f.n_zero, f.n_minus});
    out["rank"] = f.rank;
    out["parity"] = f.even ? "even" : "odd";
    return out;
}

json split_verdict_json(const SplitVerdict& v) {
    json out;
    out["s"] = v.s;
    out["q"] = int_json(v.q);
    switch (v.outcome) {
        case SplitVerdict::Outcome::Splits: {
            out["outcome"] = "Splits";
            out["y"] = vector_json(v.y);
            out["lift"] = vector_json(v.lift);
            out["reduced"] = triple_json(*v.reduced);
            std::ostringstream summand;
            summand << "P^3(" << v.q << ")";
            out["summand"] = summand.str();
            out["note"] = "the odd-torsion Moore summand splits off the complex";
            break;
        }
        case SplitVerdict::Outcome::NoSplit:
            out["outcome"] = "NoSplit";
            out["note"] =
                "cup-product data arising from a 4-dimensional toric orbifold always "
                "admits this splitting, so NoSplit certifies that the input triple is "
                "not realized by one";
            break;
        case SplitVerdict::Outcome::NoOddPart:
            out["outcome"] = "NoOddPart";
            out["note"] = "m has no odd part; there is no Moore summand to split off";
            break;
    }
    return out;
}

json equiv_verdict_json(const EquivVerdict& v, const Int& m) {
    json out;
    out["homotopy_conclusive"] = v.homotopy_conclusive;
    switch (v.outcome) {
        case EquivVerdict::Outcome::Equivalent:
            out["outcome"] = "Equivalent";
            out["witness"] = rep_json(*v.witness, m);
            break;
        case EquivVerdict::Outcome::NotEquivalent:
            out["outcome"] = "NotEquivalent";
            out["reason"] = v.reason;
            break;
        case EquivVerdict::Outcome::Inconclusive:
            out["outcome"] = "Inconclusive";
            out["reason"] = v.reason;
            break;
    }
    return out;
}

}  // namespace torb::io
