#include "polsyz/analyze.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace polsyz {

namespace {

std::vector<std::string> T_names(int m) {
    std::vector<std::string> names;
    for (int j = 1; j <= m; ++j) names.push_back("T" + std::to_string(j));
    return names;
}

std::string elem_str(const FreeElem& v, const std::vector<std::string>& names) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str(names);
    }
    os << ")";
    return os.str();
}

int elem_top_degree(const FreeElem& v) {
    int d = -1;
    for (const auto& p : v) d = std::max(d, p.total_degree());
    return d;
}

ModuleSummary summarize(const Submodule& m, const std::vector<std::string>& names,
                        bool graded) {
    ModuleSummary s;
    std::vector<FreeElem> gens = graded ? min_generators(m) : m.gens;
    for (const auto& g : gens) {
        s.generators.push_back(elem_str(g, names));
        if (graded) s.degrees.push_back(elem_top_degree(g));
    }
    s.mu = static_cast<int>(gens.size());
    s.rank = m.gens.empty() ? 0 : submodule_rank(m);
    return s;
}

} // namespace

AnalysisReport analyze(const InputDoc& doc, const AnalyzeOptions& opt) {
    AnalysisReport r;
    r.input = doc;

    auto timed = [&](const char* name, auto&& fn) {
        ScopedDeadline guard(std::chrono::seconds(opt.stage_timeout_seconds));
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        r.stage_ms.emplace_back(name, std::chrono::duration<double, std::milli>(t1 - t0).count());
    };

    const auto Tn = T_names(static_cast<int>(doc.forms.size()));

    try {
        Presentation pres;
        timed("implicitize", [&] { pres = implicitize(doc.forms); });
        r.homogeneous = pres.homogeneous;
        r.same_degree = pres.same_degree;
        for (const auto& g : pres.P_min_gens) r.P_generators.push_back(g.str(Tn));
        r.P_degrees = pres.P_gen_degrees;
        r.ht_P = pres.ht_P;
        r.dim_A = pres.dim_A;

        JacobianIdealData jac;
        timed("jacobian_ideal", [&] { jac = jacobian_ideal(pres); });
        r.jacobian_trivial = jac.trivial;
        for (const auto& g : jac.JR.gens) r.JR_generators.push_back(g[0].str(doc.vars));

        SymbolicSquare sq;
        if (!opt.skip_symbolic) {
            timed("symbolic_square", [&] {
                sq = symbolic_square(pres, jac);
                r.P2_equals_symbolic = sq.equals_square;
            });
        } else {
            r.symbolic_skipped = true;
        }

        timed("ci_cm_flags", [&] {
            CiCmFlags f = ci_cm_flags(pres);
            r.mu_P = f.mu_P;
            r.is_CI = f.is_complete_intersection;
            r.is_ACI = f.is_almost_ci;
            r.is_CM = f.is_cohen_macaulay;
            r.pd_quotient = f.pd_quotient;
            r.ecodim = f.ecodim;
            r.ecodim_valid = f.ecodim_valid;
        });

        JacobianPair jp;
        PolarData pd;
        timed("polar_modules", [&] {
            jp = transposed_jacobian(doc.forms);
            pd = polar_data(pres, jp);
            r.polar = summarize(pd.P_mod, doc.vars, pres.homogeneous);
            r.z = summarize(pd.Z_mod, doc.vars, pres.homogeneous);
        });

        timed("is_polarizable", [&] {
            PolarVerdict v = is_polarizable(pd, jac);
            r.polarizable = v.verdict;
            r.route_direct = v.route_direct;
            r.route_jacobian = v.route_jacobian;
        });

        timed("conductor", [&] {
            ConductorData c = conductor_height(pd);
            for (const auto& g : c.conductor.gens)
                r.conductor_generators.push_back(g[0].str(doc.vars));
            r.conductor_is_unit = !c.conductor.gens.empty() && dimension(c.conductor) == -1;
            r.conductor_ht = c.height;
            r.codim1_equal = c.codim1_equal;
        });

        const bool with_reflexivity = !opt.skip_reflexivity && !opt.skip_symbolic;
        r.reflexivity_skipped = !with_reflexivity;
        if (!opt.skip_omega) {
            timed("omega", [&] {
                OmegaData om = omega_diagnostics(pres, jac, pd, sq, with_reflexivity);
                r.omega_torsionfree = om.omega_torsionfree;
                r.contracted = om.contracted;
                r.contracted_from_extension = om.contracted_from_extension;
                r.conormal_reflexive = om.conormal_reflexive;
            });
        } else {
            r.omega_skipped = true;
            r.reflexivity_skipped = true;
        }

        timed("resolution_D", [&] { r.pd_D = free_resolution(jp.theta_t_module).pd(); });

        if (!opt.skip_ejk && pres.homogeneous) {
            timed("ejk", [&] {
                EjkData e = ejk_build(pres, jp);
                r.ejk_verified = ejk_verify(e, pd.Z_mod);
            });
        } else {
            r.ejk_skipped = true;
        }
    } catch (const ConsistencyError& err) {
        r.failed = true;
        r.failure = err.what();
    }
    return r;
}

std::string report_json(const AnalysisReport& r) {
    using json = nlohmann::ordered_json;
    json j;
    j["input"]["vars"] = r.input.vars;
    j["input"]["forms"] = r.input.form_texts;
    j["homogeneous"] = r.homogeneous;
    j["same_degree"] = r.same_degree;
    j["P"]["generators"] = r.P_generators;
    j["P"]["degrees"] = r.P_degrees;
    j["P"]["mu"] = r.mu_P;
    j["P"]["height"] = r.ht_P;
    j["dim_A"] = r.dim_A;
    j["ecodim"] = r.ecodim;
    j["ecodim_valid"] = r.ecodim_valid;
    j["flags"]["is_CI"] = r.is_CI;
    j["flags"]["is_ACI"] = r.is_ACI;
    j["flags"]["is_CM"] = r.is_CM;
    j["flags"]["pd_quotient"] = r.pd_quotient;
    if (r.symbolic_skipped)
        j["flags"]["P2_equals_symbolic"] = nullptr;
    else
        j["flags"]["P2_equals_symbolic"] = r.P2_equals_symbolic;
    j["JR"]["trivial"] = r.jacobian_trivial;
    j["JR"]["generators"] = r.JR_generators;
    j["polar"]["generators"] = r.polar.generators;
    j["polar"]["degrees"] = r.polar.degrees;
    j["polar"]["mu"] = r.polar.mu;
    j["polar"]["rank"] = r.polar.rank;
    j["z"]["generators"] = r.z.generators;
    j["z"]["degrees"] = r.z.degrees;
    j["z"]["mu"] = r.z.mu;
    j["z"]["rank"] = r.z.rank;
    j["verdict"]["polarizable"] = r.polarizable;
    j["verdict"]["route_direct"] = r.route_direct;
    j["verdict"]["route_jacobian"] = r.route_jacobian;
    j["conductor"]["generators"] = r.conductor_generators;
    j["conductor"]["is_unit"] = r.conductor_is_unit;
    j["conductor"]["height"] = r.conductor_ht;
    j["conductor"]["codim1_equal"] = r.codim1_equal;
    if (r.omega_skipped) {
        j["omega"]["torsionfree"] = nullptr;
        j["omega"]["contracted"] = nullptr;
        j["omega"]["contracted_from_extension"] = nullptr;
    } else {
        j["omega"]["torsionfree"] = r.omega_torsionfree;
        j["omega"]["contracted"] = r.contracted;
        j["omega"]["contracted_from_extension"] = r.contracted_from_extension;
    }
    if (r.reflexivity_skipped)
        j["omega"]["conormal_reflexive"] = nullptr;
    else
        j["omega"]["conormal_reflexive"] = r.conormal_reflexive;
    j["pd_D"] = r.pd_D;
    if (r.ejk_skipped)
        j["ejk"]["verified"] = nullptr;
    else
        j["ejk"]["verified"] = r.ejk_verified;
    json t = json::object();
    for (const auto& [name, ms] : r.stage_ms) t[name] = ms;
    j["timings_ms"] = t;
    j["status"] = r.failed ? ("FAILED: " + r.failure) : "ok";
    return j.dump(2) + "\n";
}

std::string report_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "forms (" << r.input.forms.size() << "):";
    for (const auto& f : r.input.form_texts) os << " " << f << ";";
    os << "\n";
    os << "P: mu=" << r.mu_P << " ht=" << r.ht_P << " dim A=" << r.dim_A;
    if (r.ecodim_valid) os << " ecodim=" << r.ecodim;
    os << "\n";
    for (size_t i = 0; i < r.P_generators.size(); ++i)
        os << "  " << r.P_generators[i] << "  (degree " << r.P_degrees[i] << ")\n";
    os << "flags: CI=" << r.is_CI << " ACI=" << r.is_ACI << " CM=" << r.is_CM
       << " pd(k[T]/P)=" << r.pd_quotient << " P2=P(2): ";
    if (r.symbolic_skipped)
        os << "skipped";
    else
        os << r.P2_equals_symbolic;
    os << "\n";
    os << "polar module: mu=" << r.polar.mu << " rank=" << r.polar.rank << "\n";
    for (const auto& g : r.polar.generators) os << "  " << g << "\n";
    os << "z: mu=" << r.z.mu << " rank=" << r.z.rank << "\n";
    for (const auto& g : r.z.generators) os << "  " << g << "\n";
    os << "POLARIZABLE: " << (r.polarizable ? "yes" : "NO") << "  (direct=" << r.route_direct
       << ", jacobian colon=" << r.route_jacobian << ")\n";
    os << "conductor: " << (r.conductor_is_unit ? "(1)" : "proper")
       << " height=" << r.conductor_ht << " equal in codim 1: " << r.codim1_equal << "\n";
    if (r.omega_skipped) {
        os << "omega: skipped\n";
    } else {
        os << "omega: torsionfree=" << r.omega_torsionfree << " contracted=" << r.contracted
           << " contracted_from_extension=" << r.contracted_from_extension;
        if (!r.reflexivity_skipped) os << " conormal_reflexive=" << r.conormal_reflexive;
        os << "\n";
    }
    os << "pd(D(f)) = " << r.pd_D << "\n";
    if (!r.ejk_skipped) os << "EJK sequence verified: " << r.ejk_verified << "\n";
    if (r.failed) os << "STATUS: FAILED: " << r.failure << "\n";
    return os.str();
}

} // namespace polsyz
