#include "d2d/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace d2d {

using nlohmann::json;

namespace {

json mat_to_json(const Mat& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["data"] = m.data();
    return j;
}

Mat mat_from_json(const json& j) {
    Mat m(j.at("rows").get<int>(), j.at("cols").get<int>());
    m.data() = j.at("data").get<std::vector<double>>();
    if (m.data().size() != static_cast<size_t>(m.rows()) * m.cols())
        throw std::invalid_argument("matrix data size mismatch");
    return m;
}

json interval_to_json(const Interval& iv) { return json{{"lo", iv.lo}, {"hi", iv.hi}}; }
Interval interval_from_json(const json& j) {
    return {j.at("lo").get<double>(), j.at("hi").get<double>()};
}

json vec2s_to_json(const std::vector<Vec2>& v) {
    json j = json::array();
    for (const Vec2& p : v) j.push_back(json::array({p.x, p.y}));
    return j;
}

std::vector<Vec2> vec2s_from_json(const json& j) {
    std::vector<Vec2> v;
    for (const auto& e : j) v.push_back({e.at(0).get<double>(), e.at(1).get<double>()});
    return v;
}

json genparams_json(const GenParams& p) {
    json j;
    j["n_cues"] = p.n_cues;
    j["m_d2d"] = p.m_d2d;
    j["cell_radius_m"] = p.cell_radius_m;
    j["bs_exclusion_m"] = p.bs_exclusion_m;
    j["pl_const_db"] = p.pl_const_db;
    j["pl_exp_coeff_db"] = p.pl_exp_coeff_db;
    j["shadow_std_db"] = p.shadow_std_db;
    j["noise_dbm"] = p.noise_dbm;
    j["p_c_max_dbm"] = p.p_c_max_dbm;
    j["p_d_max_dbm"] = p.p_d_max_dbm;
    j["cue_qos_db"] = interval_to_json(p.cue_qos_db);
    j["d2d_qos_db"] = interval_to_json(p.d2d_qos_db);
    j["cluster_radius_m"] = interval_to_json(p.cluster_radius_m);
    j["rng_seed"] = p.rng_seed;
    return j;
}

GenParams genparams_from(const json& j) {
    GenParams p;
    p.n_cues = j.value("n_cues", p.n_cues);
    p.m_d2d = j.value("m_d2d", p.m_d2d);
    p.cell_radius_m = j.value("cell_radius_m", p.cell_radius_m);
    p.bs_exclusion_m = j.value("bs_exclusion_m", p.bs_exclusion_m);
    p.pl_const_db = j.value("pl_const_db", p.pl_const_db);
    p.pl_exp_coeff_db = j.value("pl_exp_coeff_db", p.pl_exp_coeff_db);
    p.shadow_std_db = j.value("shadow_std_db", p.shadow_std_db);
    p.noise_dbm = j.value("noise_dbm", p.noise_dbm);
    p.p_c_max_dbm = j.value("p_c_max_dbm", p.p_c_max_dbm);
    p.p_d_max_dbm = j.value("p_d_max_dbm", p.p_d_max_dbm);
    if (j.contains("cue_qos_db")) p.cue_qos_db = interval_from_json(j.at("cue_qos_db"));
    if (j.contains("d2d_qos_db")) p.d2d_qos_db = interval_from_json(j.at("d2d_qos_db"));
    if (j.contains("cluster_radius_m"))
        p.cluster_radius_m = interval_from_json(j.at("cluster_radius_m"));
    p.rng_seed = j.value("rng_seed", p.rng_seed);
    return p;
}

json pricing_json(const PricingParams& p) {
    json j;
    j["lambda_up"] = p.lambda_up;
    j["lambda_down"] = p.lambda_down;
    j["slack"] = p.slack;
    j["theta_init"] = p.theta_init;
    j["d2d_relax_on_cue_rate"] = p.d2d_relax_on_cue_rate;
    return j;
}

PricingParams pricing_from(const json& j) {
    PricingParams p;
    p.lambda_up = j.value("lambda_up", p.lambda_up);
    p.lambda_down = j.value("lambda_down", p.lambda_down);
    p.slack = j.value("slack", p.slack);
    p.theta_init = j.value("theta_init", p.theta_init);
    p.d2d_relax_on_cue_rate = j.value("d2d_relax_on_cue_rate", p.d2d_relax_on_cue_rate);
    return p;
}

json config_json(const DseraConfig& c) {
    json j;
    j["pricing"] = pricing_json(c.pricing);
    j["price_scheme"] = c.price_scheme == PriceScheme::kStepByStep ? "step_by_step" : "whole";
    j["alpha_cost"] = c.alpha_cost;
    j["epsilon_rel"] = c.epsilon_rel;
    j["max_inner_sweeps"] = c.max_inner_sweeps;
    j["max_outer_passes"] = c.max_outer_passes;
    j["inner_plateau_window"] = c.inner_plateau_window;
    j["skip_satisfied_channels"] = c.skip_satisfied_channels;
    j["detect_stall"] = c.detect_stall;
    if (!c.trace_path.empty()) j["trace_path"] = c.trace_path;
    return j;
}

DseraConfig config_from(const json& j) {
    DseraConfig c;
    if (j.contains("pricing")) c.pricing = pricing_from(j.at("pricing"));
    if (j.contains("price_scheme")) {
        const std::string s = j.at("price_scheme").get<std::string>();
        if (s == "step_by_step")
            c.price_scheme = PriceScheme::kStepByStep;
        else if (s == "whole")
            c.price_scheme = PriceScheme::kWhole;
        else
            throw std::invalid_argument("price_scheme must be step_by_step or whole");
    }
    c.alpha_cost = j.value("alpha_cost", c.alpha_cost);
    c.epsilon_rel = j.value("epsilon_rel", c.epsilon_rel);
    c.max_inner_sweeps = j.value("max_inner_sweeps", c.max_inner_sweeps);
    c.max_outer_passes = j.value("max_outer_passes", c.max_outer_passes);
    c.inner_plateau_window = j.value("inner_plateau_window", c.inner_plateau_window);
    c.skip_satisfied_channels = j.value("skip_satisfied_channels", c.skip_satisfied_channels);
    c.detect_stall = j.value("detect_stall", c.detect_stall);
    c.trace_path = j.value("trace_path", c.trace_path);
    return c;
}

}  // namespace

std::string genparams_to_json(const GenParams& p) { return genparams_json(p).dump(2) + "\n"; }

GenParams genparams_from_json(const std::string& text) {
    return genparams_from(json::parse(text));
}

std::string instance_to_json(const NetworkInstance& inst) {
    json j;
    j["schema"] = "d2d-instance-v1";
    j["params"] = genparams_json(inst.params);
    j["cue_pos"] = vec2s_to_json(inst.cue_pos);
    j["d2d_tx_pos"] = vec2s_to_json(inst.d2d_tx_pos);
    j["d2d_rx_pos"] = vec2s_to_json(inst.d2d_rx_pos);
    j["dist_cue_bs"] = inst.dist_cue_bs;
    j["dist_d2d"] = inst.dist_d2d;
    j["dist_d2d_bs"] = inst.dist_d2d_bs;
    j["dist_cue_d2d"] = mat_to_json(inst.dist_cue_d2d);
    j["dist_d2d_d2d"] = mat_to_json(inst.dist_d2d_d2d);
    j["gain_cue"] = inst.gain_cue;
    j["gain_d2d"] = inst.gain_d2d;
    j["gain_d2d_bs"] = inst.gain_d2d_bs;
    j["gain_cue_d2d"] = mat_to_json(inst.gain_cue_d2d);
    j["gain_d2d_d2d"] = mat_to_json(inst.gain_d2d_d2d);
    j["noise_w"] = inst.noise_w;
    j["cue_p_max"] = inst.cue_p_max;
    j["d2d_p_max"] = inst.d2d_p_max;
    j["cue_sinr_min"] = inst.cue_sinr_min;
    j["d2d_sinr_min"] = inst.d2d_sinr_min;
    j["cue_rate_min"] = inst.cue_rate_min;
    j["d2d_rate_min"] = inst.d2d_rate_min;
    return j.dump(2) + "\n";
}

NetworkInstance instance_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.value("schema", "") != "d2d-instance-v1")
        throw std::invalid_argument("unrecognized instance schema");
    NetworkInstance inst;
    inst.params = genparams_from(j.at("params"));
    inst.cue_pos = vec2s_from_json(j.at("cue_pos"));
    inst.d2d_tx_pos = vec2s_from_json(j.at("d2d_tx_pos"));
    inst.d2d_rx_pos = vec2s_from_json(j.at("d2d_rx_pos"));
    inst.dist_cue_bs = j.at("dist_cue_bs").get<std::vector<double>>();
    inst.dist_d2d = j.at("dist_d2d").get<std::vector<double>>();
    inst.dist_d2d_bs = j.at("dist_d2d_bs").get<std::vector<double>>();
    inst.dist_cue_d2d = mat_from_json(j.at("dist_cue_d2d"));
    inst.dist_d2d_d2d = mat_from_json(j.at("dist_d2d_d2d"));
    inst.gain_cue = j.at("gain_cue").get<std::vector<double>>();
    inst.gain_d2d = j.at("gain_d2d").get<std::vector<double>>();
    inst.gain_d2d_bs = j.at("gain_d2d_bs").get<std::vector<double>>();
    inst.gain_cue_d2d = mat_from_json(j.at("gain_cue_d2d"));
    inst.gain_d2d_d2d = mat_from_json(j.at("gain_d2d_d2d"));
    inst.noise_w = j.at("noise_w").get<double>();
    inst.cue_p_max = j.at("cue_p_max").get<std::vector<double>>();
    inst.d2d_p_max = j.at("d2d_p_max").get<std::vector<double>>();
    inst.cue_sinr_min = j.at("cue_sinr_min").get<std::vector<double>>();
    inst.d2d_sinr_min = j.at("d2d_sinr_min").get<std::vector<double>>();
    inst.cue_rate_min = j.at("cue_rate_min").get<std::vector<double>>();
    inst.d2d_rate_min = j.at("d2d_rate_min").get<std::vector<double>>();
    return inst;
}

std::string allocation_to_json(const Allocation& a) {
    json j;
    j["schema"] = "d2d-allocation-v1";
    j["n_channels"] = a.n_channels;
    j["cue_power"] = a.cue_power;
    j["d2d_power"] = a.d2d_power;
    j["channel_of"] = a.channel_of;
    return j.dump(2) + "\n";
}

Allocation allocation_from_json(const std::string& text) {
    const json j = json::parse(text);
    Allocation a;
    a.n_channels = j.at("n_channels").get<int>();
    a.cue_power = j.at("cue_power").get<std::vector<double>>();
    a.d2d_power = j.at("d2d_power").get<std::vector<double>>();
    a.channel_of = j.at("channel_of").get<std::vector<int>>();
    return a;
}

std::string config_to_json(const DseraConfig& c) { return config_json(c).dump(2) + "\n"; }

DseraConfig config_from_json(const std::string& text) { return config_from(json::parse(text)); }

std::string outcome_to_json(const RunOutcome& o) {
    json j;
    j["schema"] = "d2d-outcome-v1";
    j["qos_satisfied"] = o.qos_satisfied;
    j["converged"] = o.converged;
    j["structurally_infeasible"] = o.structurally_infeasible;
    j["stalled"] = o.stalled;
    j["pass_budget_exhausted"] = o.pass_budget_exhausted;
    j["outer_passes"] = o.outer_passes;
    j["inner_sweeps"] = o.inner_sweeps;
    j["admitted"] = o.admitted;
    j["sum_rate"] = o.sum_rate;
    j["wall_ms"] = o.wall_ms;
    j["cue_rates"] = o.cue_rates;
    j["d2d_rates"] = o.d2d_rates;
    j["cue_power"] = o.alloc.cue_power;
    j["d2d_power"] = o.alloc.d2d_power;
    j["channel_of"] = o.alloc.channel_of;
    j["n_channels"] = o.alloc.n_channels;
    return j.dump(2) + "\n";
}

namespace {

const char* axis_name(SweepAxis a) { return a == SweepAxis::kNCues ? "n_cues" : "density"; }

}  // namespace

std::string experiment_to_json(const ExperimentSpec& s) {
    json j;
    j["schema"] = "d2d-experiment-v1";
    j["name"] = s.name;
    j["axis"] = axis_name(s.axis);
    j["axis_values"] = s.axis_values;
    j["m_over_n"] = s.m_over_n;
    j["drops"] = s.drops;
    j["base_seed"] = s.base_seed;
    j["base_params"] = genparams_json(s.base_params);
    j["config"] = config_json(s.config);
    json algs = json::array();
    for (Algorithm a : s.algorithms) algs.push_back(algorithm_name(a));
    j["algorithms"] = algs;
    j["avg_rate_over_all"] = s.avg_rate_over_all;
    j["threads"] = s.threads;
    return j.dump(2) + "\n";
}

ExperimentSpec experiment_from_json(const std::string& text) {
    const json j = json::parse(text);
    ExperimentSpec s;
    s.name = j.value("name", s.name);
    if (j.contains("axis")) {
        const std::string a = j.at("axis").get<std::string>();
        if (a == "n_cues")
            s.axis = SweepAxis::kNCues;
        else if (a == "density")
            s.axis = SweepAxis::kDensity;
        else
            throw std::invalid_argument("axis must be n_cues or density");
    }
    s.axis_values = j.at("axis_values").get<std::vector<int>>();
    s.m_over_n = j.value("m_over_n", s.m_over_n);
    s.drops = j.value("drops", s.drops);
    s.base_seed = j.value("base_seed", s.base_seed);
    if (j.contains("base_params")) s.base_params = genparams_from(j.at("base_params"));
    if (j.contains("config")) s.config = config_from(j.at("config"));
    if (j.contains("algorithms"))
        for (const auto& e : j.at("algorithms"))
            s.algorithms.push_back(algorithm_from_name(e.get<std::string>()));
    s.avg_rate_over_all = j.value("avg_rate_over_all", s.avg_rate_over_all);
    s.threads = j.value("threads", s.threads);
    return s;
}

std::string report_to_json(const RunReport& r, const std::string& metric) {
    json j;
    j["schema"] = "d2d-report-v1";
    j["metric"] = metric;
    j["methodology"] = {
        {"drops_per_point", r.spec.drops},
        {"seed_rule", "derive_seed(base_seed, point_index, drop_index), splitmix64 mixing"},
        {"base_seed", r.spec.base_seed},
        {"paired_across_algorithms", true},
    };
    j["spec"] = json::parse(experiment_to_json(r.spec));
    json stats = json::array();
    for (const auto& [key, s] : r.stats) {
        stats.push_back({
            {"axis", key.first},
            {"algorithm", algorithm_name(key.second)},
            {"mean_sum_rate", s.mean_sum_rate},
            {"std_sum_rate", s.std_sum_rate},
            {"mean_avg_rate", s.mean_avg_rate},
            {"std_avg_rate", s.std_avg_rate},
            {"admitted_fraction", s.admitted_fraction},
            {"mean_outer_passes", s.mean_outer_passes},
            {"mean_inner_sweeps", s.mean_inner_sweeps},
            {"mean_wall_ms", s.mean_wall_ms},
            {"n", s.n},
        });
    }
    j["stats"] = stats;
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

}  // namespace d2d
