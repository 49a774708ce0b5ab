#pragma once

#include "instmod/hilbert.hpp"
#include "instmod/monad.hpp"
#include "instmod/poly.hpp"
#include "instmod/restriction.hpp"
#include "instmod/stable_maps.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace instmod {

/// {"gens":[{"name":...,"deg":...}],"terms":[{"exps":[...],"coef":"..."}]}
/// Coefficients travel as decimal strings; they are arbitrary precision.
nlohmann::json poly_to_json(const GradedPolynomial& p);
GradedPolynomial poly_from_json(const nlohmann::json& j);

nlohmann::json kernel_report_to_json(const KernelReport& report);
nlohmann::json hilbert_report_to_json(const HilbertReport& report);
nlohmann::json surjectivity_report_to_json(const SurjectivityReport& report);

nlohmann::json monad_config_to_json(const MonadConfig& cfg);
/// Accepts either explicit matrices {"k","r","a1","a2","d","b","c"} with
/// entries [re, im], or {"mode":"random_m0","k":...,"r":...,"seed":...}.
MonadConfig monad_config_from_json(const nlohmann::json& j);

}  // namespace instmod
