#pragma once

#include <string>

#include <json.hpp>

#include "torb/cells.hpp"
#include "torb/decide.hpp"
#include "torb/toric.hpp"

namespace torb::io {

using json = nlohmann::json;

// Reads and parses a JSON document. Unreadable file -> IoError; syntactically
// bad JSON -> InputError.
json load_json_file(const std::string& path);

// Integers with |v| <= 2^53 are emitted as JSON numbers, larger ones as
// decimal strings so downstream consumers never see silent rounding.
json int_json(const Int& v);

// Accepts an integral JSON number or a decimal string; anything else throws
// InputError mentioning `what`.
Int parse_int(const json& j, const std::string& what);

// Fan document {"xi": [[a,b], ...]}; list order is the cyclic order.
CharacteristicData parse_fan(const json& j);

// Triple document {"n":., "m":., "A":[[..]], "b":[..], "c":.}; b and c are
// omitted exactly when m = 1 and are required otherwise.
CupTriple parse_triple(const json& j);

json matrix_json(const IntMatrix& m);
json vector_json(const std::vector<Int>& v);

json triple_json(const CupTriple& t);

// Witness serialization; y and z are suppressed when m = 1.
json rep_json(const CellMapRep& r, const Int& m);

json invariants_json(const FormInvariants& f);

json split_verdict_json(const SplitVerdict& v);
json equiv_verdict_json(const EquivVerdict& v, const Int& m);

}  // namespace torb::io
