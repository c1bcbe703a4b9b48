#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gibbsflow/errors.hpp"
#include "gibbsflow/flow.hpp"
#include "gibbsflow/gibbs.hpp"
#include "gibbsflow/io.hpp"
#include "gibbsflow/stats.hpp"
#include "gibbsflow/weyl.hpp"

namespace gibbsflow::cli {
namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kCommands{"simulate", "sample",    "invariance", "cauchy-rate",
                                         "weyl",     "normalize", "replay"};

// Every settable key with its default; "auto" is resolved per command or model.
const Settings& defaults() {
    static const Settings d{
        {"model", "halfwave"},    {"cutoff", "16"},        {"kappa", "auto"},       {"profile", "indicator"},
        {"power", "3"},           {"time", "1"},           {"dt", "0.001"},         {"sigma", "0.25"},
        {"samples", "1000"},      {"seed", "1"},           {"output", "-"},         {"format", "auto"},
        {"functional", "auto"},   {"m-list", "auto"},      {"nmax", "100000"},      {"input", ""},
        {"permutations", "1000"}, {"coupling", "1"},       {"monitor-every", "100"}, {"rejection", "false"}};
    return d;
}

std::string trim(std::string s) {
    auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
    return s;
}

std::string normalize_key(std::string k) {
    std::replace(k.begin(), k.end(), '_', '-');
    return k;
}

long long to_int(const Settings& s, const std::string& key, long long lo) {
    const std::string& v = s.at(key);
    std::size_t pos = 0;
    long long x = 0;
    try {
        x = std::stoll(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError(key + " must be an integer, got '" + v + "'");
    }
    if (pos != v.size()) throw ConfigError(key + " must be an integer, got '" + v + "'");
    if (x < lo) throw ConfigError(key + " must be >= " + std::to_string(lo));
    return x;
}

std::uint64_t to_seed(const Settings& s) {
    const std::string& v = s.at("seed");
    std::size_t pos = 0;
    try {
        if (!v.empty() && v[0] != '-') {
            auto x = std::stoull(v, &pos);
            if (pos == v.size()) return x;
        }
    } catch (const std::exception&) {
    }
    throw ConfigError("seed must be a non-negative integer, got '" + v + "'");
}

double to_real(const Settings& s, const std::string& key) {
    const std::string& v = s.at(key);
    std::size_t pos = 0;
    double x = 0;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError(key + " must be a number, got '" + v + "'");
    }
    if (pos != v.size() || !std::isfinite(x)) throw ConfigError(key + " must be a finite number, got '" + v + "'");
    return x;
}

bool to_bool(const Settings& s, const std::string& key) {
    const std::string& v = s.at(key);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError(key + " must be true or false, got '" + v + "'");
}

std::vector<int> to_int_list(const Settings& s, const std::string& key) {
    std::vector<int> out;
    std::stringstream ss(s.at(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
        Settings one{{key, trim(item)}};
        out.push_back(static_cast<int>(to_int(one, key, 0)));
    }
    if (out.empty()) throw ConfigError(key + " is empty");
    return out;
}

Model model_of(const Settings& s) {
    try {
        return parse_model(s.at("model"));
    } catch (const std::exception&) {
        throw ConfigError("unknown model '" + s.at("model") + "'");
    }
}

// Fills in every "auto" so the echoed config is complete.
void resolve(Settings& s, const std::string& command) {
    const Model model = model_of(s);
    const int cutoff = static_cast<int>(to_int(s, "cutoff", 0));
    if (s["kappa"] == "auto") s["kappa"] = format_number(GibbsConfig::defaults(model, std::max(cutoff, 1)).kappa);
    if (s["format"] == "auto") {
        if (command == "simulate" || command == "cauchy-rate" || command == "weyl") s["format"] = "csv";
        else if (command == "sample") s["format"] = "ensemble-binary";
        else s["format"] = "json";
    }
    if (s["functional"] == "auto") {
        FunctionalId id = FunctionalId::quartic_hw;
        switch (model) {
            case Model::benjamin_ono: id = FunctionalId::bo_square; break;
            case Model::dnls: id = FunctionalId::dnls_current; break;
            case Model::torus_nls: id = FunctionalId::quartic_torus; break;
            case Model::zonal_nls: id = FunctionalId::mass_recentered; break;
            default: break;
        }
        s["functional"] = std::string(functional_name(id));
    }
    if (s["m-list"] == "auto") {
        std::string list;
        for (int m = 1; m * 2 <= cutoff; m *= 2) list += (list.empty() ? "" : ",") + std::to_string(m);
        s["m-list"] = list.empty() ? "1" : list;
    }
}

std::string resolved_text(const Settings& s, const std::string& command) {
    std::string out = "command=" + command;
    for (const auto& [k, v] : s)
        if (k != "output") out += ";" + k + "=" + v;
    return out;
}

std::vector<std::string> header_comments(const Settings& s, const std::string& command) {
    return {"config: " + resolved_text(s, command), "version: " + std::string(version_string())};
}

void require_format(const Settings& s, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (s.at("format") == f) return;
    throw ConfigError("format '" + s.at("format") + "' is not available for this command");
}

GibbsConfig gibbs_config(const Settings& s) {
    GibbsConfig g = GibbsConfig::defaults(model_of(s), static_cast<int>(to_int(s, "cutoff", 1)));
    g.kappa = to_real(s, "kappa");
    try {
        g.profile = parse_profile(s.at("profile"));
    } catch (const std::exception&) {
        throw ConfigError("unknown profile '" + s.at("profile") + "'");
    }
    g.power = to_real(s, "power");
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return g;
}

FlowConfig flow_config(const Settings& s) {
    FlowConfig f;
    f.model = model_of(s);
    f.cutoff = static_cast<int>(to_int(s, "cutoff", 1));
    f.dt = to_real(s, "dt");
    f.horizon = to_real(s, "time");
    f.monitor_every = static_cast<int>(to_int(s, "monitor-every", 1));
    f.coupling = to_real(s, "coupling");
    f.power = to_real(s, "power");
    try {
        f.validate(Basis(f.model, f.cutoff));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return f;
}

void emit(const Settings& s, std::string_view contents, std::ostream& out) {
    const std::string& path = s.at("output");
    if (path == "-") {
        out << contents;
        out.flush();
        if (!out) throw IoError("write to standard output failed");
    } else {
        try {
            write_file_atomic(path, contents);
        } catch (const std::exception& e) {
            throw IoError(e.what());
        }
    }
}

std::string cmd_simulate(const Settings& s, const std::string& command) {
    require_format(s, {"csv"});
    const FlowConfig f = flow_config(s);
    const Basis basis(f.model, f.cutoff);
    const auto u0 = sample_mu(basis, RngStream{to_seed(s), 0});
    const auto traj = evolve(f, u0);
    std::vector<ModeIndex> modes;
    for (std::size_t i = 0; i < basis.mode_count(); ++i)
        if (basis.rank(i) <= 2) modes.push_back(basis.mode(i));
    return trajectory_csv(traj, modes, header_comments(s, command));
}

std::string cmd_sample(const Settings& s, const std::string& command) {
    require_format(s, {"ensemble-binary", "csv"});
    const GibbsConfig g = gibbs_config(s);
    const auto mode = to_bool(s, "rejection") ? SamplingMode::rejection : SamplingMode::importance;
    const auto count = static_cast<std::size_t>(to_int(s, "samples", 1));
    WeightedEnsemble ens;
    try {
        ens = sample_rho(g, count, RngStream{to_seed(s), 0}, mode);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (s.at("format") == "ensemble-binary") {
        std::ostringstream os(std::ios::binary);
        write_ensemble(ens, os);
        return os.str();
    }
    std::string csv;
    for (const auto& c : header_comments(s, command)) csv += "# " + c + "\n";
    csv += "# ess=" + format_number(ens.ess) + "\nindex,rng_index,weight,l2\n";
    for (std::size_t i = 0; i < ens.samples.size(); ++i) {
        const auto& w = ens.samples[i];
        csv += std::to_string(i) + "," + std::to_string(w.rng_index) + "," + format_number(w.weight) + "," +
               format_number(std::sqrt(w.field.norm_squared())) + "\n";
    }
    return csv;
}

std::string cmd_invariance(const Settings& s, const std::string& command) {
    require_format(s, {"json"});
    const GibbsConfig g = gibbs_config(s);
    const FlowConfig f = flow_config(s);
    InvarianceOptions opt;
    opt.permutations = static_cast<std::size_t>(to_int(s, "permutations", 500));
    const auto rep = invariance_report(g, f, default_observables(g.model, g.cutoff),
                                       static_cast<std::size_t>(to_int(s, "samples", 1)), RngStream{to_seed(s), 0}, opt);
    return report_json(rep, resolved_text(s, command)) + "\n";
}

std::string cmd_cauchy_rate(const Settings& s, const std::string& command) {
    require_format(s, {"csv", "json"});
    const Model model = model_of(s);
    FunctionalId id;
    try {
        id = parse_functional(s.at("functional"));
    } catch (const std::exception&) {
        throw ConfigError("unknown functional '" + s.at("functional") + "'");
    }
    RateReport rep;
    try {
        rep = cauchy_rate(model, id, static_cast<int>(to_int(s, "cutoff", 1)), to_int_list(s, "m-list"),
                          to_real(s, "sigma"), static_cast<std::size_t>(to_int(s, "samples", 2)),
                          RngStream{to_seed(s), 0});
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (s.at("format") == "csv") return rate_csv(rep, header_comments(s, command));
    nlohmann::ordered_json j;
    j["model"] = std::string(model_name(model));
    j["functional"] = std::string(functional_name(id));
    j["N"] = rep.reference;
    j["sigma"] = rep.sigma;
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["points"] = nlohmann::ordered_json::array();
    for (const auto& p : rep.points) {
        nlohmann::ordered_json pj;
        pj["m"] = p.m;
        pj["estimate"] = p.estimate;
        pj["standard_error"] = p.standard_error;
        pj["exact"] = p.exact ? nlohmann::ordered_json(*p.exact) : nlohmann::ordered_json(nullptr);
        j["points"].push_back(pj);
    }
    j["slope"] = rep.fit.slope;
    j["slope_ci"] = {rep.fit.ci_low, rep.fit.ci_high};
    j["monotone"] = rep.monotone();
    j["config"] = resolved_text(s, command);
    j["version"] = version_string();
    return j.dump(2) + "\n";
}

std::string cmd_weyl(const Settings& s, const std::string& command) {
    require_format(s, {"csv"});
    const auto nmax = static_cast<std::size_t>(to_int(s, "nmax", 1));
    auto comments = header_comments(s, command);
    if (nmax >= 1000) comments.push_back("alpha_slope=" + format_number(alpha_asymptotics(nmax).slope));
    return weyl_csv(nmax, comments);
}

std::string cmd_normalize(const Settings& s, const std::string& command) {
    require_format(s, {"json"});
    GibbsConfig g = gibbs_config(s);
    NormalizationEstimate est;
    try {
        est = estimate_normalization(g, static_cast<std::size_t>(to_int(s, "samples", 1)), RngStream{to_seed(s), 0});
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    nlohmann::ordered_json j;
    j["model"] = std::string(model_name(g.model));
    j["N"] = g.cutoff;
    j["beta"] = est.beta;
    j["standard_error"] = est.standard_error;
    j["gibbs"] = g.canonical();
    j["config"] = resolved_text(s, command);
    j["version"] = version_string();
    return j.dump(2) + "\n";
}

std::string cmd_replay(const Settings& s, const std::string& command) {
    require_format(s, {"json"});
    const std::string& path = s.at("input");
    if (path.empty()) throw ConfigError("replay needs --input");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open input '" + path + "'");
    const GibbsConfig g = gibbs_config(s);
    const auto ens = read_ensemble(in, g.fingerprint());
    nlohmann::ordered_json j;
    j["model"] = std::string(model_name(ens.config.model));
    j["N"] = ens.config.cutoff;
    j["seed"] = ens.seed;
    j["count"] = ens.samples.size();
    j["ess"] = ens.ess;
    j["fingerprint"] = ens.fingerprint();
    j["gibbs"] = ens.config.canonical();
    j["config"] = resolved_text(s, command);
    j["version"] = version_string();
    return j.dump(2) + "\n";
}

std::string quote(std::string m) {
    std::replace(m.begin(), m.end(), '\n', ' ');
    std::string out;
    for (char c : m) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return "\"" + out + "\"";
}

int fail(std::ostream& err, const std::string& kind, const std::string& message, const std::string& extra = {}) {
    err << "error: kind=" << kind << extra << " message=" << quote(message) << "\n";
    return 2;
}

}  // namespace

Settings parse_config_text(const std::string& text) {
    Settings out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + " has no '='");
        std::string key = normalize_key(trim(line.substr(0, eq)));
        if (!defaults().contains(key))
            throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        out[key] = trim(line.substr(eq + 1));
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Truncated Gibbs measures and their Hamiltonian flows", "gibbsflow"};
    std::string command, config_path;
    std::map<std::string, std::string> given;
    bool rejection = false, version = false;
    app.add_option("command", command, "simulate | sample | invariance | cauchy-rate | weyl | normalize | replay");
    app.add_option("--config", config_path, "key = value file; command-line flags win");
    for (const auto& [key, value] : defaults()) {
        if (key == "rejection") continue;
        app.add_option("--" + key, given[key]);
    }
    app.add_flag("--rejection", rejection, "rejection sampling (zonal only)");
    app.add_flag("--version", version, "print the version and exit");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        return fail(err, "usage", e.what());
    }
    if (version) {
        out << version_string() << "\n";
        return 0;
    }

    try {
        if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
            throw ConfigError(command.empty() ? "missing command" : "unknown command '" + command + "'");
        Settings s = defaults();
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw ConfigError("cannot open config file '" + config_path + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            for (auto& [k, v] : parse_config_text(buf.str())) s[k] = v;
        }
        for (const auto& [key, value] : given)
            if (app.count("--" + key) > 0) s[key] = value;
        if (rejection) s["rejection"] = "true";
        resolve(s, command);

        std::string contents;
        if (command == "simulate") contents = cmd_simulate(s, command);
        else if (command == "sample") contents = cmd_sample(s, command);
        else if (command == "invariance") contents = cmd_invariance(s, command);
        else if (command == "cauchy-rate") contents = cmd_cauchy_rate(s, command);
        else if (command == "weyl") contents = cmd_weyl(s, command);
        else if (command == "normalize") contents = cmd_normalize(s, command);
        else contents = cmd_replay(s, command);
        emit(s, contents, out);
        return 0;
    } catch (const ConfigError& e) {
        return fail(err, "config", e.what());
    } catch (const IoError& e) {
        return fail(err, "io", e.what());
    } catch (const FingerprintMismatch& e) {
        return fail(err, "fingerprint", e.what(),
                    " expected=" + std::to_string(e.expected) + " found=" + std::to_string(e.found));
    } catch (const FormatError& e) {
        return fail(err, "format", e.what(), " offset=" + std::to_string(e.offset));
    } catch (const BlowUpError& e) {
        return fail(err, "blowup", e.what(), " last_good_time=" + format_number(e.last_good_time));
    } catch (const ResourceError& e) {
        return fail(err, "resource", e.what());
    } catch (const DegenerateDensityError& e) {
        return fail(err, "degenerate", e.what());
    } catch (const UnsupportedOperation& e) {
        return fail(err, "unsupported", e.what());
    } catch (const std::invalid_argument& e) {
        return fail(err, "config", e.what());
    } catch (const std::exception& e) {
        return fail(err, "internal", e.what());
    }
}

}  // namespace gibbsflow::cli
