#pragma once

#include <string>

#include "herlat/reduction.hpp"

namespace herlat {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }
};

// Exact zero/nonzero pattern test for a psi-Gram (pairs for type I,
// diagonal for type II), including the nondegeneracy entries.
bool check_pattern(const Algebra& a, const std::vector<std::vector<AlgElem>>& d_gram);

// Re-derives everything from the instance and the certificate's basis alone
// (form, order, discriminants, index, bounds) and compares against the
// certificate. Never trusts certificate fields; returns a report.
Report verify_certificate(const Instance& inst, const ReductionCertificate& cert);

// Brute-force oracles at desk scale: factorial Hall matching, the twisted
// trace Gram determinant identity, complement index bounds on random
// sublattices, and the dual lattice index identity.
Report oracle_suite(const Instance& inst);

}  // namespace herlat
