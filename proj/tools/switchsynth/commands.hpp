#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ssyn/rational.hpp"

namespace ssyn::cli {

// Exit codes: 0 realizable, 1 not realizable, 2 iteration budget
// exhausted, 3 input error. Commands that do not answer a game question
// (gen-tnc, plot, check) use 0 for success and 3 for input errors.
constexpr int kExitRealizable = 0;
constexpr int kExitUnrealizable = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInputError = 3;

struct RunConfig {
    std::string model_path;  // model file, or region JSON for plot
    size_t max_iter = 100;
    std::string dump_dir;
    std::optional<std::pair<std::string, std::string>> plot_vars;
    std::vector<std::pair<std::string, Rational>> fixes;
    std::optional<std::array<Rational, 4>> box;  // xmin, xmax, ymin, ymax
    std::string out_path;
    std::string json_path;
    std::optional<Rational> nondet_eps;
    int n_pits = 0;
    bool verbose = false;
};

int cmd_synth(const RunConfig& cfg);
int cmd_reach(const RunConfig& cfg);
int cmd_gen_tnc(const RunConfig& cfg);
int cmd_plot(const RunConfig& cfg);
int cmd_check(const RunConfig& cfg);

}  // namespace ssyn::cli
