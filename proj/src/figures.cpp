#include "polarsim/figures.hpp"

#include "polarsim/config.hpp"
#include "polarsim/version.hpp"
#include "polarsim/writers.hpp"

namespace polarsim {

namespace {

const std::vector<double> kMGrid{0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};

// Common identification lines go first; figure-specific parameter comments
// pushed by the builders stay below them.
void stamp_common(FigureData& fig, const FigureRequest& req) {
    std::vector<std::string> head;
    head.push_back(std::string("# tool: ") + kToolName + " " + kToolVersion);
    head.push_back("# figure: " + fig.name);
    head.push_back(std::string("# generator: ") + kGeneratorName);
    if (fig.simulated) {
        head.push_back("# base_seed: " + std::to_string(req.base_seed));
        head.push_back("# config: " + canonical_config_line(fig.spec));
    }
    fig.comments.insert(fig.comments.begin(), head.begin(), head.end());
}

FigureData fig1(const FigureRequest& req) {
    FigureData fig;
    fig.name = "fig1";
    fig.simulated = false;
    fig.header = "d,weight_ignore_linear,weight_anti_linear";
    const TrustPolicy ignore{TrustKind::IgnoreLinear, 2.0};
    const TrustPolicy anti{TrustKind::AntiLinear, 2.0};
    const double p_i_e = 0.75;
    for (int i = 0; i <= 100; ++i) {
        const double d = static_cast<double>(i) / 100.0;
        fig.rows.push_back(format_shortest(d) + "," +
                           format_shortest(trust_weight(ignore, d, p_i_e)) + "," +
                           format_shortest(trust_weight(anti, d, p_i_e)));
    }
    fig.comments.push_back("# m: 2");
    fig.comments.push_back("# p_i_e: 0.75");
    stamp_common(fig, req);
    return fig;
}

SweepSpec base_spec(const FigureRequest& req, int default_trials) {
    SweepSpec spec;
    spec.trials_per_cell = req.trials_override > 0 ? req.trials_override : default_trials;
    spec.base_seed = req.base_seed;
    return spec;
}

FigureData fig2(const FigureRequest& req) {
    FigureData fig;
    fig.name = "fig2";
    fig.simulated = true;
    fig.spec = base_spec(req, 1000);
    fig.spec.k_values = {6, 10, 20};
    fig.spec.p_b_values = {0.7};
    fig.spec.n_values = {50};
    fig.spec.m_values = kMGrid;
    fig.spec.policies = {TrustKind::IgnoreLinear};
    fig.header = "k,m,freq_polarized,se_polarized,trials";
    const SweepResult res = run_sweep(fig.spec, req.jobs);
    for (const auto& s : res.stats) {
        fig.rows.push_back(std::to_string(s.cell.k) + "," + format_shortest(s.cell.m) +
                           "," + format_fixed6(s.freq_polarized) + "," +
                           format_fixed6(s.se_polarized) + "," + std::to_string(s.trials));
    }
    stamp_common(fig, req);
    return fig;
}

FigureData fig3(const FigureRequest& req) {
    FigureData fig;
    fig.name = "fig3";
    fig.simulated = true;
    fig.spec = base_spec(req, 1000);
    fig.spec.k_values = {10};
    fig.spec.p_b_values = {0.55, 0.6, 0.65, 0.7, 0.75, 0.8};
    fig.spec.n_values = {20};
    fig.spec.m_values = kMGrid;
    fig.spec.policies = {TrustKind::IgnoreLinear};
    fig.header = "p_b,m,freq_polarized,se_polarized,trials";
    const SweepResult res = run_sweep(fig.spec, req.jobs);
    for (const auto& s : res.stats) {
        fig.rows.push_back(format_shortest(s.cell.p_b) + "," + format_shortest(s.cell.m) +
                           "," + format_fixed6(s.freq_polarized) + "," +
                           format_fixed6(s.se_polarized) + "," + std::to_string(s.trials));
    }
    stamp_common(fig, req);
    return fig;
}

FigureData fig4(const FigureRequest& req) {
    FigureData fig;
    fig.name = "fig4";
    fig.simulated = true;
    fig.spec = base_spec(req, 1000);
    fig.spec.k_values = {6};
    fig.spec.p_b_values = {0.55};
    fig.spec.n_values = {5, 10, 20, 50, 100};
    fig.spec.m_values = {0.0, 1.0};
    fig.spec.policies = {TrustKind::IgnoreLinear};
    fig.header = "n,m,mean_rounds_consensus,se_mean_rounds_consensus,consensus_trials,trials";
    const SweepResult res = run_sweep(fig.spec, req.jobs);
    for (const auto& s : res.stats) {
        fig.rows.push_back(std::to_string(s.cell.n) + "," + format_shortest(s.cell.m) +
                           "," + format_fixed6(s.mean_rounds_consensus) + "," +
                           format_fixed6(s.se_mean_rounds_consensus) + "," +
                           std::to_string(s.n_true + s.n_false) + "," +
                           std::to_string(s.trials));
    }
    stamp_common(fig, req);
    return fig;
}

FigureData fig5(const FigureRequest& req) {
    FigureData fig;
    fig.name = "fig5";
    fig.simulated = true;
    fig.spec = base_spec(req, 300);
    fig.spec.k_values = {6, 10, 20};
    fig.spec.p_b_values = {0.55, 0.6, 0.7, 0.8};
    fig.spec.n_values = {10, 50};
    fig.spec.m_values = kMGrid;
    fig.spec.policies = {TrustKind::IgnoreLinear};
    fig.header = "k,p_b,n,m,mean_false_fraction,se_mean_false_fraction,trials";
    const SweepResult res = run_sweep(fig.spec, req.jobs);
    for (const auto& s : res.stats) {
        fig.rows.push_back(std::to_string(s.cell.k) + "," + format_shortest(s.cell.p_b) +
                           "," + std::to_string(s.cell.n) + "," +
                           format_shortest(s.cell.m) + "," +
                           format_fixed6(s.mean_false_fraction) + "," +
                           format_fixed6(s.se_mean_false_fraction) + "," +
                           std::to_string(s.trials));
    }
    stamp_common(fig, req);
    return fig;
}

FigureData fig6(const FigureRequest& req) {
    FigureData fig;
    fig.name = "fig6";
    fig.simulated = true;
    fig.spec = base_spec(req, 1000);
    fig.spec.k_values = {20};
    fig.spec.p_b_values = {0.7};
    fig.spec.n_values = {10};
    fig.spec.m_values = kMGrid;
    fig.spec.policies = {TrustKind::IgnoreLinear, TrustKind::AntiLinear};
    fig.header = "m,policy,mean_false_fraction,se_mean_false_fraction,trials";
    const SweepResult res = run_sweep(fig.spec, req.jobs);
    for (const auto& s : res.stats) {
        fig.rows.push_back(format_shortest(s.cell.m) + "," + to_string(s.cell.policy) +
                           "," + format_fixed6(s.mean_false_fraction) + "," +
                           format_fixed6(s.se_mean_false_fraction) + "," +
                           std::to_string(s.trials));
    }
    stamp_common(fig, req);
    return fig;
}

}  // namespace

std::vector<std::string> figure_names() {
    return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"};
}

FigureData make_figure(const FigureRequest& req) {
    if (req.which == "fig1") return fig1(req);
    if (req.which == "fig2") return fig2(req);
    if (req.which == "fig3") return fig3(req);
    if (req.which == "fig4") return fig4(req);
    if (req.which == "fig5") return fig5(req);
    if (req.which == "fig6") return fig6(req);
    throw ConfigError("figure must be one of fig1..fig6, got \"" + req.which + "\"");
}

}  // namespace polarsim
