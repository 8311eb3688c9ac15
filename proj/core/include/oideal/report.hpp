#ifndef OIDEAL_REPORT_HPP
#define OIDEAL_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "oideal/ring.hpp"

namespace oideal {

// Structured verdict of one conjecture-level check. The witness payload is
// self-contained (it embeds the ring) so recheck_report can re-derive the
// verdict from it without the original in-memory objects.
struct CheckReport {
    std::string claim_id;
    std::string instance_id;
    bool verdict = false;
    nlohmann::json witness;
    std::vector<std::string> justification;
};

nlohmann::json report_to_json(const CheckReport& r);
CheckReport report_from_json(const nlohmann::json& j);

// Independent re-check: reproduces the verdict from the witness payload.
// Returns false when the witness does not force the recorded verdict.
bool recheck_report(const CheckReport& r);

nlohmann::json ring_to_json(const RingPtr& ring);
RingPtr ring_from_json(const nlohmann::json& j);

}  // namespace oideal

#endif
