#ifndef SSNC_REPORT_HPP
#define SSNC_REPORT_HPP

#include <string>
#include <string_view>

#include "json.hpp"

#include "ssnc/digraph.hpp"
#include "ssnc/generators.hpp"
#include "ssnc/properties.hpp"
#include "ssnc/prover.hpp"
#include "ssnc/seymour.hpp"

namespace ssnc {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::string_view kToolName = "ssnc";
inline constexpr std::string_view kToolVersion = "1.0.0";

Json to_json(const VertexSet& s);
Json to_json(const Path& p);
Json to_json(const PathWitness& w);
Json to_json(const Ratio& r);
Json graph_summary(const Digraph& d);
Json to_json(const ClassProfile& p);
Json to_json(const SeymourReport& r);
Json to_json(const LambdaCheck& c);
Json to_json(const ProofTrace& t);
Json to_json(const TraceError& e);
Json to_json(const GenSpec& s);
Json to_json(const HuntReport& r);

/// Envelope shared by every command: schema_version, tool, command, then the
/// command fields, then timing last.
Json make_report(std::string_view command);
void set_timing(Json& report, double elapsed_ms);

/// Report with the timing field removed, for comparisons.
Json without_timing(Json report);

std::string dump_report(const Json& report);

}  // namespace ssnc

#endif  // SSNC_REPORT_HPP
