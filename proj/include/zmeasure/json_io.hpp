#pragma once

// JSON shapes of the library objects. Doubles are written in shortest
// round-trip form; every top-level document carries a "schema" tag.

#include <string>

#include <json.hpp>

#include "zmeasure/kernel.hpp"
#include "zmeasure/params.hpp"
#include "zmeasure/partition.hpp"
#include "zmeasure/sample.hpp"
#include "zmeasure/verify.hpp"

namespace zmeasure::io {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "zmeasure.report/1";
inline constexpr const char* kMeasureSchema = "zmeasure.measure/1";
inline constexpr const char* kKernelSchema = "zmeasure.kernel/1";
inline constexpr const char* kSampleSchema = "zmeasure.sample/1";

Json to_json(Complex v);  // {"re": .., "im": ..}
Json to_json(const ZParams& zp);
Json to_json(const GrandParams& gp);
Json to_json(const YoungDiagram& lambda);  // array of parts
Json frobenius_json(const YoungDiagram& lambda);
Json to_json(const Configuration& x);  // array of "k/2" strings
Json to_json(const VerificationReport& report);

YoungDiagram diagram_from_json(const Json& j);
Configuration configuration_from_json(const Json& j);

Json kernel_block_json(const KernelBlock& block, const GrandParams& gp);
// Header row "k,0,1,...", then one row per k.
std::string kernel_block_csv(const KernelBlock& block);

Json sample_header_json(const SampleBatch& batch);
Json sample_line_json(std::size_t index, const YoungDiagram& lambda);

// Shortest decimal that parses back to the same double.
std::string format_double(double v);

}  // namespace zmeasure::io
