#include "delib/io.hpp"

#include <cmath>
#include <ostream>

#include "json.hpp"

namespace delib {

namespace {

nlohmann::json finite_or_string(double v) {
    if (std::isfinite(v)) return v;
    return "inf";
}

nlohmann::json to_json_array(const std::vector<double>& values) {
    nlohmann::json arr = nlohmann::json::array();
    for (double v : values) arr.push_back(finite_or_string(v));
    return arr;
}

}  // namespace

std::string report_to_json(const DistortionReport& report) {
    nlohmann::json j;
    j["mean"] = report.mean;
    j["q1"] = report.q1;
    j["q3"] = report.q3;
    j["second_moment"] = report.second_moment;
    j["infinite_count"] = report.infinite_count;
    j["per_step_mean"] = to_json_array(report.per_step_mean);
    j["per_step_q1"] = to_json_array(report.per_step_q1);
    j["per_step_q3"] = to_json_array(report.per_step_q3);
    j["per_run_final"] = to_json_array(report.per_run_final);
    return j.dump(2);
}

void write_report_csv(std::ostream& out, const DistortionReport& report) {
    out << "step,mean,q1,q3\n";
    char buf[128];
    for (std::size_t t = 0; t < report.per_step_mean.size(); ++t) {
        std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g,%.12g\n", t + 1,
                      report.per_step_mean[t], report.per_step_q1[t],
                      report.per_step_q3[t]);
        out << buf;
    }
}

void write_distortion_csv(std::ostream& out,
                          const std::vector<std::vector<double>>& per_run_step) {
    out << "run,step,distortion\n";
    char buf[80];
    for (std::size_t r = 0; r < per_run_step.size(); ++r) {
        for (std::size_t t = 0; t < per_run_step[r].size(); ++t) {
            std::snprintf(buf, sizeof buf, "%zu,%zu,%.12g\n", r, t + 1,
                          per_run_step[r][t]);
            out << buf;
        }
    }
}

}  // namespace delib
