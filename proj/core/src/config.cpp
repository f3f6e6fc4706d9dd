#include "periodlab/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace periodlab::hyperlog {

Configuration Configuration::real_points(std::vector<double> sigmas) {
    Configuration cfg;
    cfg.points.push_back(cplx(0.0));
    for (double s : sigmas) cfg.points.push_back(cplx(s));
    cfg.log_branches.assign(sigmas.size(), 0);
    cfg.validate();
    return cfg;
}

double Configuration::min_pairwise_distance() const {
    double d = std::numeric_limits<double>::infinity();
    for (size_t a = 0; a < points.size(); ++a)
        for (size_t b = a + 1; b < points.size(); ++b)
            d = std::min(d, std::abs(points[a] - points[b]));
    return d;
}

double Configuration::detour_radius() const {
    if (path.detour_radius > 0.0) return path.detour_radius;
    return 0.3 * min_pairwise_distance();
}

bool Configuration::is_real() const {
    for (auto& p : points)
        if (p.imag() != 0.0) return false;
    return true;
}

Configuration Configuration::conjugated() const {
    Configuration c = *this;
    for (auto& p : c.points) p = std::conj(p);
    c.path.upper_half_plane = !path.upper_half_plane;
    for (auto& [i, wps] : c.explicit_paths)
        for (auto& w : wps) w = std::conj(w);
    return c;
}

void Configuration::validate() const {
    if (points.empty() || points[0] != cplx(0.0))
        throw domain_violation("Configuration: sigma_0 = 0 violated");
    for (size_t a = 0; a < points.size(); ++a)
        for (size_t b = a + 1; b < points.size(); ++b)
            if (points[a] == points[b])
                throw domain_violation("Configuration: points pairwise distinct violated");
    for (int b : log_branches)
        if (b != 0)
            throw domain_violation(
                "Configuration: nonzero log branch needs a winding (non-admissible) path, unsupported");
    if (path.detour_radius > 0.0 && !(path.detour_radius < 0.5 * min_pairwise_distance()))
        throw domain_violation("Configuration: detour radius < (1/2) min pairwise distance violated");
}

AdmissiblePath admissible_path(const Configuration& cfg, int i) {
    if (i < 1 || i > cfg.n()) throw std::invalid_argument("admissible_path: index out of range");
    AdmissiblePath p;
    p.target = i;
    if (auto it = cfg.explicit_paths.find(i); it != cfg.explicit_paths.end()) {
        p.waypoints.push_back(cplx(0.0));
        for (auto& w : it->second) p.waypoints.push_back(w);
        p.waypoints.push_back(cfg.points[size_t(i)]);
        return p;
    }
    const cplx target = cfg.points[size_t(i)];
    const double len = std::abs(target);
    const cplx dir = target / len;
    const double r = cfg.detour_radius();
    const cplx normal = dir * cplx(0.0, cfg.path.upper_half_plane ? 1.0 : -1.0);

    // singularities that sit close to the open segment (0, sigma_i) get a detour
    struct Obstacle {
        double t;
        cplx point;
    };
    std::vector<Obstacle> obstacles;
    for (int k = 1; k <= cfg.n(); ++k) {
        if (k == i) continue;
        cplx q = cfg.points[size_t(k)];
        double t = (q / dir).real(); // arclength of projection onto the ray
        double dist = std::abs(q - t * dir);
        if (dist < r && t > 0.0 && t < len) {
            if (t < r || t > len - r)
                throw domain_violation("admissible_path: singularity too close to an endpoint");
            obstacles.push_back({t, q});
        } else if (std::abs(q) < r || std::abs(q - target) < r) {
            throw domain_violation("admissible_path: singularity within detour radius of an endpoint");
        }
    }
    if (!obstacles.empty() && !cfg.is_real())
        throw domain_violation(
            "admissible_path: non-real configuration with obstacles needs an explicit path");
    std::sort(obstacles.begin(), obstacles.end(), [](auto& a, auto& b) { return a.t < b.t; });

    p.waypoints.push_back(cplx(0.0));
    for (auto& ob : obstacles) {
        cplx center = ob.point;
        p.waypoints.push_back(center - r * dir);
        p.waypoints.push_back(center + r * normal);
        p.waypoints.push_back(center + r * dir);
    }
    p.waypoints.push_back(target);
    return p;
}

namespace {
std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}
} // namespace

Configuration parse_config(const std::string& text) {
    Configuration cfg;
    cfg.points.push_back(cplx(0.0));
    std::map<int, cplx> pts;
    std::map<int, int> branches;
    std::istringstream in(text);
    std::string line, section;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("config: expected key = value: " + line);
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (section == "points") {
            if (key.rfind("sigma", 0) != 0) throw std::runtime_error("config: unknown point key " + key);
            int idx = std::stoi(key.substr(5));
            std::istringstream vs(val);
            double re = 0.0, im = 0.0;
            vs >> re;
            vs >> im; // absent imag part stays 0
            pts[idx] = cplx(re, im);
        } else if (section == "branches") {
            if (key.rfind("log", 0) != 0) throw std::runtime_error("config: unknown branch key " + key);
            branches[std::stoi(key.substr(3))] = std::stoi(val);
        } else if (section == "quadrature") {
            if (key == "detour_radius")
                cfg.path.detour_radius = std::stod(val);
            else if (key == "half_plane")
                cfg.path.upper_half_plane = (val == "upper");
            else if (key == "tol")
                cfg.tolerance = std::stod(val);
            else
                throw std::runtime_error("config: unknown quadrature key " + key);
        } else {
            throw std::runtime_error("config: unknown section '" + section + "'");
        }
    }
    for (int i = 1; i <= int(pts.size()); ++i) {
        auto it = pts.find(i);
        if (it == pts.end()) throw std::runtime_error("config: point indices must be sigma1..sigmaN");
        cfg.points.push_back(it->second);
    }
    cfg.log_branches.assign(pts.size(), 0);
    for (auto& [i, b] : branches) {
        if (i < 1 || i > int(pts.size())) throw std::runtime_error("config: branch index out of range");
        cfg.log_branches[size_t(i - 1)] = b;
    }
    cfg.validate();
    return cfg;
}

Configuration load_config_file(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) throw std::runtime_error("cannot open config file: " + filename);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace periodlab::hyperlog
