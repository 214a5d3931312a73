#ifndef CBARG_IO_HPP
#define CBARG_IO_HPP

// File formats consumed by tests and plotting pipelines: CSV for sampled
// disk grids (17 significant digits, '.' decimal separator, LF endings)
// and JSON for verification reports, mirroring the report fields exactly.

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "transforms.hpp"
#include "verify.hpp"

namespace cbarg {

namespace detail {

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace detail

inline void write_grid_csv(std::ostream& os, const DiskGrid& grid) {
    os << "re_z,im_z,re_value,im_value,abs_value\n";
    for (size_t i = 0; i < grid.points.size(); ++i) {
        os << detail::fmt17(grid.points[i].real()) << ',' << detail::fmt17(grid.points[i].imag())
           << ',' << detail::fmt17(grid.values[i].real()) << ','
           << detail::fmt17(grid.values[i].imag()) << ','
           << detail::fmt17(std::abs(grid.values[i])) << '\n';
    }
}

/// Reads back what write_grid_csv produced; %.17g round-trips doubles
/// exactly, so values survive bit for bit.
inline DiskGrid read_grid_csv(std::istream& is) {
    DiskGrid grid;
    std::string line;
    if (!std::getline(is, line) || line != "re_z,im_z,re_value,im_value,abs_value")
        throw std::runtime_error("read_grid_csv: missing or malformed header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        double re_z, im_z, re_v, im_v, abs_v;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &re_z, &im_z, &re_v, &im_v,
                        &abs_v) != 5)
            throw std::runtime_error("read_grid_csv: malformed row: " + line);
        grid.points.emplace_back(re_z, im_z);
        grid.values.emplace_back(re_v, im_v);
    }
    return grid;
}

inline void write_grid_json(std::ostream& os, const DiskGrid& grid) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (size_t i = 0; i < grid.points.size(); ++i) {
        rows.push_back({{"re_z", grid.points[i].real()},
                        {"im_z", grid.points[i].imag()},
                        {"re_value", grid.values[i].real()},
                        {"im_value", grid.values[i].imag()},
                        {"abs_value", std::abs(grid.values[i])}});
    }
    os << rows.dump(2) << '\n';
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& rep) {
    return {{"identity_name", rep.identity_name},
            {"params", {{"gamma", rep.params.gamma}, {"m", rep.params.m}}},
            {"settings", rep.settings},
            {"max_defect", rep.max_defect},
            {"tolerance", rep.tolerance},
            {"passed", rep.passed},
            {"n_samples", rep.n_samples},
            {"runtime_ms", rep.runtime_ms}};
}

inline void write_reports_json(std::ostream& os, const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rep : reports)
        arr.push_back(report_to_json(rep));
    os << arr.dump(2) << '\n';
}

inline void write_reports_csv(std::ostream& os, const std::vector<VerificationReport>& reports) {
    os << "identity_name,gamma,m,settings,max_defect,tolerance,passed,n_samples,runtime_ms\n";
    for (const auto& rep : reports) {
        os << rep.identity_name << ',' << detail::fmt17(rep.params.gamma) << ',' << rep.params.m
           << ',' << rep.settings << ',' << detail::fmt17(rep.max_defect) << ','
           << detail::fmt17(rep.tolerance) << ',' << (rep.passed ? "true" : "false") << ','
           << rep.n_samples << ',' << rep.runtime_ms << '\n';
    }
}

} // namespace cbarg

#endif // CBARG_IO_HPP
