#ifndef SSTK_REPORT_IO_HPP
#define SSTK_REPORT_IO_HPP

#include "sstk/classify.hpp"

#include <json.hpp>

namespace sstk {

using Json = nlohmann::ordered_json;

Json report_to_json(const SingularityReport& rep);
SingularityReport report_from_json(const Json& j);
std::string report_to_text(const SingularityReport& rep);

// Structural comparison used by the golden checks: verdict, m and the
// per-surface orders must match; sample coordinates are not compared.
bool reports_equivalent(const SingularityReport& a, const SingularityReport& b,
                        std::string* why = nullptr);

} // namespace sstk

#endif
