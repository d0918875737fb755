#pragma once

#include <string>

#include "freearr/classes.hpp"
#include "freearr/derivations.hpp"

namespace freearr {

Json free_certificate_json(const FreeCertificate& cert);
FreeCertificate free_certificate_from_json(const Json& j);

Json freeness_verdict_json(const FreenessVerdict& v);
Json class_verdict_json(const ClassVerdict& v);

struct CertReport {
    bool ok = false;
    std::string kind;
    std::string reason;
};

// Replays any certificate or refutation kind against the arrangement:
// "free", "inductive-chain", "induction-table", "free-chain",
// "divisional-flag", "stair-steps", "refutation".
CertReport verify_certificate(const Arrangement& a, const Json& cert, long long budget = 0);

}  // namespace freearr
