/**
 * @file cli.hpp
 * @brief Testable command-line entry point.
 *
 * Subcommands: compute, verify, enumerate, bijection, funeq, matrix. All
 * output is canonical single-line JSON on the output stream. Exit codes:
 * 0 success (and every check passed), 1 a verification failed, 2 usage or
 * input error.
 */
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcf {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qcf
