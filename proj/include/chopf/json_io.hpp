#pragma once

// JSON serialization. All output is deterministic: object keys are emitted
// in insertion order (nlohmann::ordered_json), terms follow the ring's
// graded-lex term order, rationals are exact strings, never floats.

#include <string>

#include "json.hpp"

#include "chopf/checks.hpp"
#include "chopf/pairing.hpp"

namespace chopf {

using OrderedJson = nlohmann::ordered_json;

OrderedJson poly_to_json(const LaurentPoly& p);
OrderedJson matrix_to_json(const RingMatrix& m);
OrderedJson tag_to_json(const ColourTag& t);
OrderedJson word_to_json(const Word& w);
OrderedJson elem_to_json(const FreeElem& e);
OrderedJson relations_to_json(const RelationSet& rs);
OrderedJson report_to_json(const CheckReport& r);
OrderedJson gram_to_json(const GramTable& g);
OrderedJson model_to_json(const ModelSpec& m);

// Single-line dump with a trailing newline; the byte format used for report
// streams and golden files.
std::string dump_line(const OrderedJson& j);

}  // namespace chopf
