#pragma once

#include "ehrhart/ehrhart_profile.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ehrhart {

class NotDimension2 : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One inequality verdict. For inequalities, slack is (satisfied side
/// minus required side), nonnegative exactly when the inequality holds;
/// for the one equality check (PICK_BOUNDARY) the slack is the negated
/// absolute defect, so slack >= 0 iff holds stays true there as well.
struct AuditEntry {
    std::string id;
    bool holds = false;
    Rat slack;
    std::string note;
};

struct AuditReport {
    std::vector<AuditEntry> entries;

    /// All entries hold; when exempt_exceptional_scott is set, a failing
    /// SCOTT entry carrying the exceptional-triangle fingerprint note is
    /// permitted (the one exception Scott's theorem allows).
    bool all_hold(bool exempt_exceptional_scott = true) const;
    const AuditEntry* find(const std::string& id) const;
};

/// Exact right-hand side of the Betke-McMullen inequality
/// c_r <= (-1)^{d-r} s(d,r) c_d + (-1)^{d-r-1} s(d,r+1)/(d-1)!,
/// for 1 <= r <= d-1.
Rat betke_mcmullen_rhs(int d, int r, const Rat& c_d);

/// Evaluates the full inequality catalog against a profile, exactly.
/// Violations are verdicts, never errors. Dimension-2 profiles also get
/// the Scott and Pick entries.
AuditReport audit(const EhrhartProfile& profile);

/// The dimension-2 audit; throws NotDimension2 when profile.d != 2.
AuditReport audit_dim2(const EhrhartProfile& profile);

}  // namespace ehrhart
