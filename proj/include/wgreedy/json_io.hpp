#pragma once

// JSON forms of vectors and reports. Indices are decimal strings, keys keep
// insertion order, non-finite numbers are the strings "inf", "-inf", "nan".

#include "wgreedy/constants.hpp"
#include "wgreedy/core.hpp"
#include "wgreedy/oracles.hpp"
#include "wgreedy/tga.hpp"
#include "wgreedy/theorems.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace wgreedy {

using Json = nlohmann::ordered_json;

Json number_json(double v);
Json to_json(const Index& n);
Json to_json(const IndexSet& s);
/// {"entries": [["index", coefficient], ...]}
Json to_json(const SparseVector& x);
/// Throws std::invalid_argument on anything but strictly increasing decimal
/// indices >= 1 with finite numeric coefficients.
SparseVector vector_from_json(const Json& j);
SparseVector parse_vector(std::string_view text);

Json to_json(const GreedySelection& g);
Json to_json(const ChebyshevResult& c);
Json to_json(const OracleResult& r);
Json to_json(const CertifiedValue& v);
Json to_json(const ConstantEstimate& e);
Json to_json(const SuiteReport& r);

/// Stable text form: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace wgreedy
