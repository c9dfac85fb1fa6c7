#include "switchsynth/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ssyn/parser.hpp"
#include "ssyn/synthesis.hpp"
#include "ssyn/tnc.hpp"
#include "switchsynth/region_json.hpp"
#include "switchsynth/svg.hpp"

namespace ssyn::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

struct LoadedModel {
    HybridAutomaton automaton;
    std::optional<SpecSet> spec;
};

// Parses and validates; prints diagnostics. Returns nullopt on any error.
std::optional<LoadedModel> load_model(const std::string& path) {
    ParsedModel pm = parse_model(read_file(path));
    bool bad = false;
    for (const auto& d : validate(pm.automaton)) {
        std::cerr << (d.severity == Diagnostic::Severity::Error ? "error: " : "warning: ")
                  << d.message << "\n";
        if (d.severity == Diagnostic::Severity::Error) bad = true;
    }
    if (bad) return std::nullopt;
    return LoadedModel{std::move(pm.automaton), std::move(pm.spec)};
}

PlotSpec make_plot_spec(const RunConfig& cfg) {
    PlotSpec spec;
    if (!cfg.plot_vars) throw std::runtime_error("plot: missing --plot vx,vy");
    spec.var_x = cfg.plot_vars->first;
    spec.var_y = cfg.plot_vars->second;
    if (spec.var_x == spec.var_y) throw std::runtime_error("plot: need two distinct variables");
    for (const auto& [name, value] : cfg.fixes) spec.fixes[name] = value;
    if (cfg.box) {
        spec.xmin = (*cfg.box)[0];
        spec.xmax = (*cfg.box)[1];
        spec.ymin = (*cfg.box)[2];
        spec.ymax = (*cfg.box)[3];
    } else {
        spec.xmin = spec.ymin = make_rational(-10);
        spec.xmax = spec.ymax = make_rational(10);
    }
    return spec;
}

std::string derive_path(const std::string& base, const std::string& strip,
                        const std::string& suffix) {
    std::string out = base;
    if (out.size() > strip.size() && out.compare(out.size() - strip.size(), strip.size(), strip) == 0)
        out.resize(out.size() - strip.size());
    return out + suffix;
}

std::string gray_shade(size_t k, size_t total) {
    // Iteration 1 darkest after the never-safe base, later ones lighter.
    int lo = 0x80, hi = 0xd0;
    int v = total <= 1 ? lo : lo + static_cast<int>((hi - lo) * (k - 1) / (total - 1));
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", v, v, v);
    return buf;
}

void dump_iterations(const RunConfig& cfg, const HybridAutomaton& h,
                     const SynthesisResult& res) {
    if (cfg.dump_dir.empty()) return;
    std::filesystem::create_directories(cfg.dump_dir);
    for (size_t k = 0; k < res.snapshots.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "iter_%03zu.json", k + 1);
        write_file((std::filesystem::path(cfg.dump_dir) / name).string(),
                   state_set_to_json(res.snapshots[k]).dump(2) + "\n");
    }
    (void)h;
}

void write_result_artifacts(const RunConfig& cfg, const HybridAutomaton& h,
                            const SymStateSet& safe_or_target, const SynthesisResult& res,
                            bool with_strategy) {
    if (!cfg.json_path.empty())
        write_file(cfg.json_path, state_set_to_json(res.winning).dump(2) + "\n");

    if (with_strategy && res.status == SynthStatus::Fixpoint) {
        std::string strat_path;
        if (!cfg.out_path.empty() && !cfg.plot_vars)
            strat_path = cfg.out_path;
        else if (!cfg.json_path.empty())
            strat_path = derive_path(cfg.json_path, ".json", ".strategy.json");
        if (!strat_path.empty()) {
            Strategy s = extract_strategy(h, res.winning);
            write_file(strat_path, strategy_to_json(s).dump(2) + "\n");
        }
    }

    if (cfg.plot_vars) {
        PlotSpec spec = make_plot_spec(cfg);
        // Never-safe area darkest, then the area removed at iteration k in
        // lightening grays; what remains safe stays white.
        std::vector<std::pair<std::string, std::vector<PlotLayer>>> panels;
        SymStateSet t = sss_intersect_invariants(h, safe_or_target);
        for (const auto& l : h.locations) {
            std::vector<PlotLayer> layers;
            layers.push_back({region_complement(t.at(l.name)), "#555555"});
            const size_t total = res.snapshots.size();
            const SymStateSet* prev = &t;
            for (size_t k = 0; k < total; ++k) {
                Region removed = region_difference(prev->at(l.name),
                                                   res.snapshots[k].at(l.name));
                if (!removed.is_empty())
                    layers.push_back({std::move(removed), gray_shade(k + 1, total)});
                prev = &res.snapshots[k];
            }
            panels.emplace_back(l.name, std::move(layers));
        }
        std::string svg_path = !cfg.out_path.empty()
                                   ? cfg.out_path
                                   : derive_path(cfg.model_path, ".lha", ".svg");
        write_file(svg_path, render_svg(panels, spec));
    }
}

int run_game(const RunConfig& cfg, bool safety) {
    auto loaded = load_model(cfg.model_path);
    if (!loaded) return kExitInputError;
    if (!loaded->spec) {
        std::cerr << "error: model has no spec block\n";
        return kExitInputError;
    }
    const bool want_safe = safety;
    const bool is_safe = loaded->spec->kind == SpecSet::Kind::Safe;
    if (want_safe != is_safe) {
        std::cerr << "error: '" << (safety ? "synth" : "reach") << "' needs a 'spec "
                  << (safety ? "safe" : "target") << "' block\n";
        return kExitInputError;
    }

    SynthesisOptions opt;
    opt.max_iter = cfg.max_iter;
    opt.record_snapshots = !cfg.dump_dir.empty() || cfg.plot_vars.has_value();

    SynthesisResult res = safety ? safety_region(loaded->automaton, loaded->spec->states, opt)
                                 : reach_region(loaded->automaton, loaded->spec->states, opt);

    std::cout << "status=" << (res.status == SynthStatus::Fixpoint ? "FIXPOINT" : "BUDGET_EXHAUSTED")
              << " iterations=" << res.iterations
              << " realizable=" << (res.realizable ? "yes" : "no") << "\n";
    if (cfg.verbose) {
        for (const auto& [loc, r] : res.winning.entries())
            std::cerr << "  " << loc << ": " << r.size() << " piece(s)\n";
    }

    dump_iterations(cfg, loaded->automaton, res);
    write_result_artifacts(cfg, loaded->automaton, loaded->spec->states, res, safety);

    if (res.status == SynthStatus::BudgetExhausted) return kExitBudget;
    return res.realizable ? kExitRealizable : kExitUnrealizable;
}

}  // namespace

int cmd_synth(const RunConfig& cfg) {
    try {
        return run_game(cfg, true);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_reach(const RunConfig& cfg) {
    try {
        return run_game(cfg, false);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_gen_tnc(const RunConfig& cfg) {
    try {
        std::string text = gen_tnc(cfg.n_pits, cfg.nondet_eps);
        if (cfg.out_path.empty())
            std::cout << text;
        else
            write_file(cfg.out_path, text);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_plot(const RunConfig& cfg) {
    try {
        nlohmann::json j = nlohmann::json::parse(read_file(cfg.model_path));
        LoadedStateSet set;
        if (j.contains("locations")) {
            set = state_set_from_json(j);
        } else if (j.contains("winning")) {
            nlohmann::json wrapped = {{"vars", j.at("vars")}, {"locations", j.at("winning")}};
            set = state_set_from_json(wrapped);
        } else {
            throw std::runtime_error("not a region JSON file");
        }
        PlotSpec spec = make_plot_spec(cfg);
        std::vector<std::pair<std::string, std::vector<PlotLayer>>> panels;
        for (const auto& [loc, region] : set.locations)
            panels.emplace_back(loc, std::vector<PlotLayer>{{region, "#b0b0b0"}});
        if (panels.empty()) panels.emplace_back("(empty)", std::vector<PlotLayer>{});
        std::string svg = render_svg(panels, spec);
        if (cfg.out_path.empty())
            std::cout << svg;
        else
            write_file(cfg.out_path, svg);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_check(const RunConfig& cfg) {
    try {
        auto loaded = load_model(cfg.model_path);
        if (!loaded) return kExitInputError;
        std::cout << "ok: " << loaded->automaton.locations.size() << " location(s), "
                  << loaded->automaton.transitions.size() << " transition(s), "
                  << loaded->automaton.num_vars() << " variable(s)\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace ssyn::cli
