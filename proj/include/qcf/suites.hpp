/**
 * @file suites.hpp
 * @brief Named verification suites shared by the CLI and the test binaries.
 *
 * Every suite is a list of independent cases; a case failure never aborts
 * the run. Exceptions raised by a case are reported as failures with the
 * exception text as detail.
 */
#pragma once

#include <string>
#include <vector>

#include "qcf/json_io.hpp"

namespace qcf {

struct CaseResult {
    std::string id;
    bool pass = false;
    std::string detail; // empty on success
};

struct RunReport {
    std::string suite;
    std::vector<CaseResult> cases;
    long long elapsed_ms = 0;
    bool pass = false;
};

/// tourio, qsec, jtp, theoS, genocchi, funeq, congruence, hankel, cube, all.
const std::vector<std::string>& suite_names();

/// Runs one suite (or every suite for "all"); DomainError for unknown names.
RunReport run_suite(const std::string& name);

Json report_to_json(const RunReport& report);

} // namespace qcf
