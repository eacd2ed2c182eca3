#pragma once

#include <iosfwd>

#include "wrp/config.hpp"
#include "wrp/report.hpp"
#include "wrp/search.hpp"

namespace wrp {

struct RunOutcome {
    int exit_code = 0;  // 0 ok, 2 mismatch, 3 config error
    Json reports;       // task name -> report payload
};

// Executes the configured tasks in dependency order (classify feeds build,
// build feeds the distribution tasks). When both enumerate and predict run,
// their distributions are cross-checked and a difference exits with code 2
// and a diff in the report. One report file per task lands at
// <out>.<task>.<ext> when an output stem is configured.
RunOutcome run_config(const RunConfig& rc, std::ostream& log);

// BY_CLASS spot check: `samples` random message pairs re-weighed directly
// against their class representative weight.
bool spot_check_classes(const FieldSpec& spec, std::span<const Column> cols, const PlateauedProfile& pf,
                        const PlateauedProfile& pg, int samples, std::uint64_t seed, std::string* fail_detail);

RunOutcome run_search_command(const RunConfig& rc, std::ostream& log);
RunOutcome run_verify_lemmas(const RunConfig* rc, std::ostream& log);

}  // namespace wrp
