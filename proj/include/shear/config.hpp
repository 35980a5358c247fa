#pragma once

#include <map>
#include <string>
#include <vector>

namespace shear {
namespace config {

/// Reproducible run configuration; flags override file values, file values
/// override these defaults.
struct RunConfig {
    double a = 0.5;
    double xi_lo = -40.0;
    double xi_hi = 40.0;
    int grid_n = 2048;
    double eps_final = 1e-13;
    double damping = 0.5;
    double solve_tol = 1e-10;
    int max_iter = 4000;
    std::string out_dir = ".";
    int threads = 1;
    bool use_phi_identity = true;
    bool sharp_cutoff = false;
    unsigned long seed = 20260810UL;
    std::map<std::string, double> tolerances;

    double tol(const std::string& check_name, double fallback) const;
    void validate() const;
};

RunConfig from_json_file(const std::string& path, const RunConfig& base = {});
std::string to_json_string(const RunConfig& cfg);

}  // namespace config
}  // namespace shear
