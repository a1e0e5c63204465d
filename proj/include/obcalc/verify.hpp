#pragma once

#include <string>
#include <vector>

namespace obcalc {

struct Claim {
    std::string id;        // stable across releases
    std::string location;  // e.g. "S4"
    bool passed = false;
    bool skipped = false;
    std::string details;
};

struct VerificationReport {
    std::vector<Claim> claims;
    bool all_passed() const;
    std::string table() const;
    std::string json() const;
};

/// Runs every claim of the verification suite; `only` filters by location
/// substring (empty = all, filtered-out claims are reported as skipped).
VerificationReport verify_paper(const std::string& only = "");

}  // namespace obcalc
