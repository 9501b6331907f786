#pragma once

#include "delaycode/codetuple.hpp"
#include "delaycode/rct.hpp"
#include "delaycode/reduce.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace delaycode {

using Json = nlohmann::ordered_json;

/// Parses JSON text; ParseError with line and column on malformed input.
Json parse_json(std::string_view text);
Json load_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// "rct" when the tables carry an "A" field, otherwise "codetuple".
/// An explicit "kind" member wins.
std::string document_kind(const Json& doc);

struct CodeTupleDoc {
  CodeTuple F;
  std::optional<SourceDist> mu;
};

struct RctDoc {
  Rct rct;
  std::optional<SourceDist> mu;
};

/// {"k", "alphabet", "mu"?, "tables": [{"id", "f": {sym: bits}, "tau": {sym: id}}]}
/// An id is a list of k-bit strings (a subset of C^k) or a label (string or
/// integer). Codewords are bit strings, "" or "λ" for the empty one.
CodeTupleDoc codetuple_from_json(const Json& doc);
Json codetuple_to_json(const CodeTuple& F, const std::optional<SourceDist>& mu = std::nullopt);

/// {"k", "alphabet", "mu"?, "tables": [{"A": [...], "f": {...}, "tau": {sym: [...]},
/// "psi"?: {sym: "010"}}]}. Structural problems are ParseError; a
/// well-formed document that breaks the RCT rules is InvalidRctError.
RctDoc rct_from_json(const Json& doc);
Json rct_to_json(const Rct& F, const std::optional<SourceDist>& mu = std::nullopt);

Json trace_to_json(const ReductionTrace& trace);

/// Probabilities as exact fractions: {sym: [n, d]}, {sym: "n/d"} or {sym: n}.
SourceDist mu_from_json(const Alphabet& alphabet, const Json& j);
Json mu_to_json(const Alphabet& alphabet, const SourceDist& mu);
/// "1/2,1/4,1/4" in alphabet order.
SourceDist parse_mu_text(const Alphabet& alphabet, std::string_view text);

/// `["00","01","10","11"]|000` or `00,01,10,11|000`.
ExpandedIndex parse_seed(int k, std::string_view text);
std::string format_seed(const ExpandedIndex& seed);

/// Encoded stream: `k=<int> start=<seed>` on the first line, then the bits.
struct Stream {
  int k = 0;
  ExpandedIndex start;
  BitString bits;
};
std::string format_stream(const Stream& s);
Stream parse_stream(std::string_view text);

}  // namespace delaycode
