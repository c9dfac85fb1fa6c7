#include <CLI11.hpp>

#include "switchsynth/commands.hpp"

namespace {

using ssyn::cli::RunConfig;

ssyn::Rational parse_rat_or_throw(const std::string& s, const std::string& what) {
    auto r = ssyn::parse_rational(s);
    if (!r) throw CLI::ValidationError(what, "'" + s + "' is not a rational");
    return *r;
}

void add_plot_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option_function<std::string>(
           "--plot",
           [&cfg](const std::string& v) {
               auto comma = v.find(',');
               if (comma == std::string::npos)
                   throw CLI::ValidationError("--plot", "expected two variables: vx,vy");
               cfg.plot_vars = {v.substr(0, comma), v.substr(comma + 1)};
           },
           "Two free variables to plot, e.g. x,y");
    cmd->add_option_function<std::vector<std::string>>(
           "--fix",
           [&cfg](const std::vector<std::string>& vs) {
               for (const auto& v : vs) {
                   auto eq = v.find('=');
                   if (eq == std::string::npos)
                       throw CLI::ValidationError("--fix", "expected var=rational");
                   cfg.fixes.emplace_back(v.substr(0, eq),
                                          parse_rat_or_throw(v.substr(eq + 1), "--fix"));
               }
           },
           "Fix a variable for the plot cross-section, e.g. t=0")
        ->take_all();
    cmd->add_option_function<std::string>(
           "--box",
           [&cfg](const std::string& v) {
               std::array<ssyn::Rational, 4> box;
               size_t start = 0;
               for (int i = 0; i < 4; ++i) {
                   size_t comma = v.find(',', start);
                   bool last = i == 3;
                   if ((comma == std::string::npos) != last)
                       throw CLI::ValidationError("--box", "expected xmin,xmax,ymin,ymax");
                   box[i] = parse_rat_or_throw(
                       v.substr(start, last ? std::string::npos : comma - start), "--box");
                   start = comma + 1;
               }
               cfg.box = box;
           },
           "Plot bounding box: xmin,xmax,ymin,ymax");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact safety/reachability controller synthesis for linear hybrid automata"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* synth = app.add_subcommand("synth", "Solve the safety control problem");
    synth->add_option("model", cfg.model_path, "Model file")->required();
    synth->add_option("--max-iter", cfg.max_iter, "Fixpoint iteration budget");
    synth->add_option("--dump-iterations", cfg.dump_dir, "Write per-iteration region JSON here");
    synth->add_option("--json", cfg.json_path, "Write the winning region JSON here");
    synth->add_option("--out", cfg.out_path,
                      "Strategy JSON path (or SVG path when --plot is given)");
    synth->add_flag("-v,--verbose", cfg.verbose, "Progress details on stderr");
    add_plot_flags(synth, cfg);

    auto* reach = app.add_subcommand("reach", "Solve the reachability control problem");
    reach->add_option("model", cfg.model_path, "Model file")->required();
    reach->add_option("--max-iter", cfg.max_iter, "Fixpoint iteration budget");
    reach->add_option("--dump-iterations", cfg.dump_dir, "Write per-iteration region JSON here");
    reach->add_option("--json", cfg.json_path, "Write the winning region JSON here");
    reach->add_option("--out", cfg.out_path, "SVG path when --plot is given");
    reach->add_flag("-v,--verbose", cfg.verbose, "Progress details on stderr");
    add_plot_flags(reach, cfg);

    auto* gen = app.add_subcommand("gen-tnc", "Generate a truck-navigation benchmark model");
    gen->add_option("n", cfg.n_pits, "Number of pits (>= 1)")->required();
    gen->add_option("--out", cfg.out_path, "Output file (default: stdout)");
    gen->add_option_function<std::string>(
        "--nondet",
        [&cfg](const std::string& v) { cfg.nondet_eps = parse_rat_or_throw(v, "--nondet"); },
        "Widen each diagonal rate d to [d-eps, d+eps]");

    auto* plot = app.add_subcommand("plot", "Render a region JSON as SVG");
    plot->add_option("region", cfg.model_path, "Region JSON file")->required();
    plot->add_option("--out", cfg.out_path, "SVG output file (default: stdout)");
    add_plot_flags(plot, cfg);

    auto* check = app.add_subcommand("check", "Parse and validate a model");
    check->add_option("model", cfg.model_path, "Model file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : ssyn::cli::kExitInputError;
    }

    if (synth->parsed()) return ssyn::cli::cmd_synth(cfg);
    if (reach->parsed()) return ssyn::cli::cmd_reach(cfg);
    if (gen->parsed()) return ssyn::cli::cmd_gen_tnc(cfg);
    if (plot->parsed()) return ssyn::cli::cmd_plot(cfg);
    if (check->parsed()) return ssyn::cli::cmd_check(cfg);
    return ssyn::cli::kExitInputError;
}
