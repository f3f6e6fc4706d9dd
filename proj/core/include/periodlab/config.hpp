#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace periodlab {

/// Structured precondition violation; what() names the violated inequality.
class domain_violation : public std::runtime_error {
public:
    explicit domain_violation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace periodlab

namespace periodlab::hyperlog {

using cplx = std::complex<double>;

struct PathPolicy {
    double detour_radius = 0.0; // 0 = auto: 0.3 * min pairwise distance
    bool upper_half_plane = true;
};

/// Marked points sigma_0 = 0, sigma_1..sigma_n, with branch choices and the
/// path policy for detours around intermediate singularities.
struct Configuration {
    std::vector<cplx> points;     // points[0] == 0
    std::vector<int> log_branches; // per i = 1..n; only 0 (no winding) supported
    PathPolicy path;
    double tolerance = 1e-11;
    std::map<int, std::vector<cplx>> explicit_paths; // target -> interior waypoints

    static Configuration real_points(std::vector<double> sigmas_1_to_n);

    int n() const { return int(points.size()) - 1; }
    double min_pairwise_distance() const;
    double detour_radius() const;
    bool is_real() const;
    Configuration conjugated() const;
    void validate() const;
};

struct AdmissiblePath {
    int target = 0;
    std::vector<cplx> waypoints; // from 0 to sigma_target inclusive
};

/// Straight path with detours in the chosen half-plane around singularities
/// near the segment; honors cfg.explicit_paths when present.
AdmissiblePath admissible_path(const Configuration& cfg, int i);

/// Key-value config file with [points], [branches], [quadrature] sections.
Configuration parse_config(const std::string& text);
Configuration load_config_file(const std::string& filename);

} // namespace periodlab::hyperlog
