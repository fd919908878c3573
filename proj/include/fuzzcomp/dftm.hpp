#pragma once

#include "fuzzcomp/machine.hpp"
#include "fuzzcomp/tolerance.hpp"

#include <functional>
#include <tuple>

namespace fuzzcomp {

/// ell(s): the maximum symbol length over the support.
std::size_t fuzzy_input_length(const StringFuzzySet& s);

/// The fuzzy configuration at time 0: degree s(x) on q0 [cent x dollar],
/// auxiliary head at 0, empty output, for each supported x.
FuzzyConfig initial_config(const Machine& m, const StringFuzzySet& s);

/// One application of the time-evolution recurrence. Successor degrees are
/// mu2 over the canonically ordered nonzero contributions
/// mu1(conf(predecessor), delta degree); head moves leaving the tape (work
/// head below cell 0, auxiliary head outside [0, ell]) yield no successor.
/// Predecessors in final states contribute nothing.
FuzzyConfig step(const Machine& m, const FuzzyConfig& conf, std::size_t ell);

struct RunOptions {
    std::size_t max_steps = 100000;
    bool keep_trace = false;
};

struct RunResult {
    StringFuzzySet output;  // b = M(s)
    std::size_t time = 0;   // absolute running time
    /// (i, c, conf_i(c)) for every final configuration c with positive degree.
    std::vector<std::tuple<std::size_t, Config, Degree>> final_events;
    std::vector<FuzzyConfig> trace;  // conf_0..conf_time when keep_trace
};

/// Iterates step until only final-state configurations carry positive degree
/// (possibly none at all); that step count is the running time. The output
/// degree of w is xi over the accumulated final degrees
/// final(c) = mu3({conf_i(c)}_{i<=t}) of the final configurations emitting w.
/// Throws NotHaltedError when non-final mass survives max_steps.
RunResult run(const Machine& m, const StringFuzzySet& input, const RunOptions& opts = {});

struct ApproxSolveItem {
    std::size_t index = 0;
    bool pass = false;
    bool not_halted = false;
    std::string detail;
};

struct ApproxSolveReport {
    bool all_pass = true;
    std::vector<ApproxSolveItem> items;
};

/// Checks gamma_approximates(run(m, s).output, oracle(s), gamma) per instance.
ApproxSolveReport approx_solves(const Machine& m,
                                const std::function<StringFuzzySet(const StringFuzzySet&)>& oracle,
                                const std::vector<StringFuzzySet>& instances,
                                const ToleranceParameter& gamma, const RunOptions& opts = {});

}  // namespace fuzzcomp
