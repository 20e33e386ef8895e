#pragma once

namespace laas::cli {

// Full command-line front end: synth, analyze, cohort, plot.
// Exit codes: 0 success (warnings allowed), 1 usage error, 2 data error.
int run(int argc, const char* const* argv);

}  // namespace laas::cli
