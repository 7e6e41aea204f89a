#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ttskit/workbench/document.hpp"

namespace ttskit::workbench {

struct ClaimInfo {
    std::string id;
    std::string statement;
    int default_n;
    int max_n;
};

// XI_TAU_TRANSITIVE, XI_UPSILON_TRANSITIVE, SIGMA_LAMBDA_IS_TTS, SIGMA_P_COMPATIBLE,
// SECOND_ASSOC_IFF, CHAIN_INCLUSIONS, CONVER_EQUALS_LAMBDA, DERIVE_ROUNDTRIP,
// SIGMA_TAU_CONVER, XI_UPSILON_SEPARATED, XI_INFO_LOSS
const std::vector<ClaimInfo>& claims();

struct AuditReport {
    std::string claim;
    std::string statement;
    std::string bounds;
    std::size_t instances = 0;
    std::size_t holds = 0;
    std::size_t fails = 0;
    // First few counterexamples, with the checker line that fails.
    std::vector<Structure> witnesses;
    std::vector<std::string> reasons;
    std::string note;
};

// n = 0 selects the claim's default bound. CHAIN_26 is accepted for CHAIN_INCLUSIONS.
// Throws InputError for unknown claims and CapExceeded beyond max_n.
AuditReport claim_audit(const std::string& claim, int n = 0, std::uint64_t seed = 1, std::size_t samples = 2000);

std::string render_text(const AuditReport& r);
Json audit_json(const AuditReport& r);

}  // namespace ttskit::workbench
