#ifndef HOMDS_RUNNER_HPP
#define HOMDS_RUNNER_HPP

#include <cstdint>
#include <string>

#include "homds/json_io.hpp"

namespace homds {

/// Exit-code contract shared by every subcommand: 0 the property holds,
/// 1 it fails (witness attached), 2 refused (cap or budget), 3 malformed
/// input or violated precondition.
enum ExitCode : int {
    kExitHolds = 0,
    kExitFails = 1,
    kExitRefused = 2,
    kExitBadInput = 3,
};

struct RunOptions {
    std::uint64_t seed = 0;
    bool seed_given = false;
    Budget budget;
    int ell = 2;
    int jobs = 1;
    bool strict = false;
    std::string mode = "maximal_only";  // mdsb_ell scan mode
    // equiv-suite shape
    int trials = 100;
    int nmax = 8;
    int kmax = 4;
    std::vector<std::uint64_t> fields = {5, 7, 8, 2147483647ULL};
    bool inject_bug = false;
};

struct RunRecord {
    json doc;
    int exit_code = kExitHolds;
};

std::string digest_hex(const std::string& bytes);

/// check <property> on a code input document.
RunRecord run_check(const json& input, const std::string& input_bytes, const std::string& property,
                    const RunOptions& opt);

/// solve: find evaluation points attaining a zero pattern.
RunRecord run_solve(const json& pattern_doc, const json& spec_doc, const std::string& input_bytes,
                    const RunOptions& opt);

/// equiv: sample random codes and compare every checker route.
RunRecord run_equiv(const RunOptions& opt);

/// conjecture: random puncturing exploration of a mother code.
RunRecord run_conjecture(const json& code_doc, const std::string& input_bytes,
                         std::uint32_t n_target, const RunOptions& opt);

}  // namespace homds

#endif
