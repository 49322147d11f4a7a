#pragma once

#include "orbitforms/report.hpp"

#include <string>
#include <vector>

namespace orbit {

struct UnknownSuite : ConfigError {
  using ConfigError::ConfigError;
};

const std::vector<std::string>& suite_names();  // flags, algebra, pi, gauge, cartesian, ttw, all

// Parameters used when the config leaves them unset.
ModelSpec default_parameters();
// Models a suite covers when no model is configured.
std::vector<ModelSpec> default_models(const std::string& suite, const ModelSpec& params);
std::string model_tag(const ModelSpec& s);

VerificationReport flags_checks(const ModelBundle& model, int nmax);
VerificationReport algebra_checks(const ModelBundle& model);
VerificationReport pi_checks(const ModelBundle& model, int nmax);
VerificationReport gauge_checks(const ModelBundle& model, Formula which);
VerificationReport cartesian_checks(const ModelBundle& model, const RunConfig& cfg);
VerificationReport ttw_checks(const RunConfig& cfg);

VerificationReport run_suite(const RunConfig& cfg);

}  // namespace orbit
