#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "delib/analytics.hpp"

namespace delib {

// Full report as JSON (fields mirror DistortionReport).
std::string report_to_json(const DistortionReport& report);

// Per-step table: "step,mean,q1,q3" (1-based step index).
void write_report_csv(std::ostream& out, const DistortionReport& report);

// Flat table: "run,step,distortion".
void write_distortion_csv(std::ostream& out,
                          const std::vector<std::vector<double>>& per_run_step);

}  // namespace delib
