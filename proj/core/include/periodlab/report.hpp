#pragma once

#include <string>
#include <vector>

#include "periodlab/hyp2f1.hpp"
#include "periodlab/lauricella.hpp"
#include "periodlab/suites.hpp"

namespace periodlab::report {

using hyperlog::Configuration;
using hyperlog::cplx;

/// All emitters produce schema-versioned JSON with a fixed key order, so the
/// same inputs yield byte-identical output. Wall time is deliberately not
/// part of the payload.

std::string matrix_json(const std::string& command, const Configuration& cfg,
                        const std::vector<cplx>& s, const lauricella::SquareMatrix<cplx>& m,
                        lauricella::Realization realization);

std::string series_matrix_json(const std::string& command, const Configuration& cfg,
                               const std::vector<lauricella::CMulti>& entries, int n, int max_degree,
                               lauricella::Realization realization);

std::string series_json(const std::string& command, const lauricella::CMulti& series,
                        const std::vector<std::string>& var_names);

std::string verify_json(const std::string& suite, const std::vector<suites::CriterionResult>& results);

std::string hyp2f1_json(const std::string& command, const hyp2f1::HypParams& p,
                        const std::vector<std::pair<std::string, cplx>>& values,
                        const std::vector<std::pair<std::string, double>>& residuals);

std::string error_json(const std::string& command, const std::string& message);

} // namespace periodlab::report
