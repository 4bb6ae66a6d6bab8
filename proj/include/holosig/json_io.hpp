#ifndef HOLOSIG_JSON_IO_HPP
#define HOLOSIG_JSON_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "holosig/holonomy.hpp"
#include "holosig/lyndon.hpp"
#include "holosig/path.hpp"
#include "holosig/signature.hpp"
#include "holosig/tensor_series.hpp"

namespace holosig {

using nlohmann::json;

// { "n": int, "m": int, "levels": [[floats]...] }, level p in lexicographic
// word order; doubles round-trip bit-exactly
void to_json(json& j, const TensorSeries& s);
TensorSeries tensor_series_from_json(const json& j,
                                     std::size_t cap = TensorSeries::default_cap);

// { "dimension": n, "points": [[x1..xn], ...] }
void to_json(json& j, const PlPath& p);
void from_json(const json& j, PlPath& p);

// { "exponents": [ints], "factor": float, "direction": int }
void to_json(json& j, const MonomialOneForm& f);
void from_json(const json& j, MonomialOneForm& f);

// { "d": int, "dimension": int, "entries": [[[form...]...]...] }
void to_json(json& j, const MatrixConnection& c);
void from_json(const json& j, MatrixConnection& c);

// { "n", "m", "coords": [{"word","value"}...], "residual" }
void to_json(json& j, const LogSignature& s);

void to_json(json& j, const TruncatedHolonomy& h);
void to_json(json& j, const MatrixHolonomy& h);
void to_json(json& j, const XiNormRow& r);

// one point per row, n columns, optional header line
PlPath path_from_csv(std::istream& in);

// reads "-" from stdin; sniffs JSON against CSV by the first non-space byte
PlPath read_path_file(const std::string& filename);

// whole-file helper used by the CLI and tests
std::string read_stream_or_file(const std::string& filename);

} // namespace holosig

#endif
