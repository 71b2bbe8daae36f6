#ifndef POLSYZ_ANALYZE_HPP
#define POLSYZ_ANALYZE_HPP

#include "polsyz/ejk.hpp"
#include "polsyz/input.hpp"

namespace polsyz {

struct AnalyzeOptions {
    bool skip_ejk = false;
    bool skip_reflexivity = false;
    bool skip_symbolic = false; // also disables reflexivity, which needs P^(2)
    bool skip_omega = false;
    int stage_timeout_seconds = 300;
};

struct ModuleSummary {
    std::vector<std::string> generators;
    std::vector<int> degrees; // of minimal generators; empty when ungraded
    int mu = 0;
    int rank = 0;
};

struct AnalysisReport {
    InputDoc input;
    bool homogeneous = false;
    bool same_degree = false;

    std::vector<std::string> P_generators;
    std::vector<int> P_degrees;
    int mu_P = 0, ht_P = 0, dim_A = 0;
    int ecodim = 0;
    bool ecodim_valid = false;
    bool is_CI = false, is_ACI = false, is_CM = false;
    int pd_quotient = 0;
    bool P2_equals_symbolic = false;
    bool symbolic_skipped = false;

    std::vector<std::string> JR_generators;
    bool jacobian_trivial = false;

    ModuleSummary polar, z;

    bool polarizable = false, route_direct = false, route_jacobian = false;

    std::vector<std::string> conductor_generators;
    bool conductor_is_unit = false;
    int conductor_ht = 0;
    bool codim1_equal = false;

    bool omega_torsionfree = false;
    bool contracted = false;
    bool contracted_from_extension = false;
    bool conormal_reflexive = false;
    bool reflexivity_skipped = false;
    bool omega_skipped = false;

    int pd_D = 0;

    bool ejk_verified = false;
    bool ejk_skipped = false;

    std::vector<std::pair<std::string, double>> stage_ms;

    bool failed = false;
    std::string failure;
};

AnalysisReport analyze(const InputDoc& doc, const AnalyzeOptions& opt = {});

std::string report_json(const AnalysisReport& r);
std::string report_text(const AnalysisReport& r);

} // namespace polsyz

#endif
