// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "locapprox/audit.hpp"
#include "locapprox/distribution.hpp"
#include "locapprox/interpret.hpp"
#include "locapprox/synthesizer.hpp"

// Reports are `key: value` lines; tables follow as prefixed rows
// (`deficient <tau> <tau'> <count>`, `stat <id> <num>/<den>`, ...).
namespace locapprox {

std::string format_residual_report(const ResidualReport& rep, const SimpleAdmResult& simple);
std::string format_synthesis_report(const SynthesisReport& rep);
std::string format_audit_report(const AuditReport& rep);
std::string format_stat_table(const StatTable& st);
std::string format_local_distance(const LocalDistance& ld);
std::string format_perturbation(const PerturbationResult& p);
std::string format_validation(const SchemeValidation& v);
std::string format_pipeline_report(const PipelineReport& rep);

}  // namespace locapprox
