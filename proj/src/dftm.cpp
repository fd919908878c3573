#include "fuzzcomp/dftm.hpp"

#include "fuzzcomp/errors.hpp"

#include <algorithm>

namespace fuzzcomp {

std::size_t fuzzy_input_length(const StringFuzzySet& s) {
    std::size_t ell = 0;
    for (const auto& [x, d] : s.pairs()) ell = std::max(ell, x.size());
    return ell;
}

FuzzyConfig initial_config(const Machine& m, const StringFuzzySet& s) {
    FuzzyConfig conf;
    for (const auto& [x, d] : s.pairs()) {
        Config c;
        c.state = m.initial;
        c.right.push_back(m.cent);
        for (SymId id : m.parse_input(x)) c.right.push_back(id);
        c.right.push_back(m.dollar);
        conf.emplace(std::move(c), d);
    }
    return conf;
}

namespace {

void canonicalize_right(const Machine& m, std::vector<SymId>& right) {
    while (right.size() > 1 && right.back() == m.blank) right.pop_back();
}

/// Builds the successor configuration, or nothing when a head would leave
/// its tape.
std::optional<Config> successor(const Machine& m, const Config& c, const TransitionTarget& t,
                                std::size_t ell) {
    const long aux = static_cast<long>(c.aux_pos) + t.move_aux;
    if (aux < 0 || aux > static_cast<long>(ell)) return std::nullopt;

    Config n;
    n.state = t.state;
    n.aux_pos = static_cast<std::uint32_t>(aux);
    n.out = c.out;
    if (t.emit) n.out.push_back(*t.emit);

    switch (t.move_work) {
        case 0:
            n.left = c.left;
            n.right = c.right;
            n.right[0] = t.write;
            break;
        case 1:
            n.left = c.left;
            n.left.push_back(t.write);
            n.right.assign(c.right.begin() + 1, c.right.end());
            if (n.right.empty()) n.right.push_back(m.blank);
            break;
        case -1:
            if (c.left.empty()) return std::nullopt;
            n.left.assign(c.left.begin(), c.left.end() - 1);
            n.right.reserve(c.right.size() + 1);
            n.right.push_back(c.left.back());
            n.right.push_back(t.write);
            n.right.insert(n.right.end(), c.right.begin() + 1, c.right.end());
            break;
    }
    canonicalize_right(m, n.right);
    return n;
}

// Contribution index (q, sigma1, sigma2, d1, d2); its ordering fixes the mu2
// argument order.
using TermKey = std::tuple<StateId, SymId, std::uint8_t, std::int8_t, std::int8_t>;

}  // namespace

FuzzyConfig step(const Machine& m, const FuzzyConfig& conf, std::size_t ell) {
    std::map<Config, std::map<TermKey, Degree>> terms;
    for (const auto& [c, alpha] : conf) {
        if (m.is_final(c.state)) continue;
        const SymId sigma1 = c.right.front();
        const AuxSym sigma2 = aux_symbol_at(c.aux_pos);
        auto it = m.delta.find({c.state, sigma1, sigma2});
        if (it == m.delta.end()) continue;
        for (const TransitionTarget& t : it->second) {
            auto next = successor(m, c, t, ell);
            if (!next) continue;
            TermKey key{c.state, sigma1, static_cast<std::uint8_t>(sigma2), t.move_work,
                        t.move_aux};
            terms[*std::move(next)][key] = m.tuple.mu1(alpha, t.degree);
        }
    }

    FuzzyConfig out;
    std::vector<Degree> family;
    for (auto& [c, contributions] : terms) {
        family.clear();
        for (const auto& [key, d] : contributions) family.push_back(d);
        Degree d = m.tuple.mu2(family);
        if (!d.is_zero()) out.emplace(c, std::move(d));
    }
    return out;
}

namespace {

bool all_final(const Machine& m, const FuzzyConfig& conf) {
    for (const auto& [c, d] : conf)
        if (!m.is_final(c.state)) return false;
    return true;
}

}  // namespace

RunResult run(const Machine& m, const StringFuzzySet& input, const RunOptions& opts) {
    const std::size_t ell = fuzzy_input_length(input);
    RunResult result;

    FuzzyConfig conf = initial_config(m, input);
    auto record_finals = [&](std::size_t i, const FuzzyConfig& fc) {
        for (const auto& [c, d] : fc)
            if (m.is_final(c.state)) result.final_events.emplace_back(i, c, d);
    };
    if (opts.keep_trace) result.trace.push_back(conf);
    record_finals(0, conf);

    std::size_t t = 0;
    while (!all_final(m, conf)) {
        if (t == opts.max_steps) throw NotHaltedError(opts.max_steps);
        conf = step(m, conf, ell);
        ++t;
        if (opts.keep_trace) result.trace.push_back(conf);
        record_finals(t, conf);
    }
    result.time = t;

    // final(c) = mu3 of the full history over [0, t]; zeros are included so
    // non-idempotent tuples see the family the recurrence defines.
    std::map<Config, std::vector<Degree>> history;
    for (const auto& [i, c, d] : result.final_events) {
        auto [it, inserted] = history.emplace(c, std::vector<Degree>());
        if (inserted) it->second.assign(t + 1, Degree::zero());
        it->second[i] = d;
    }

    std::map<std::string, std::vector<Degree>> by_output;  // config-ordered final degrees
    for (const auto& [c, hist] : history)
        by_output[m.output_string(c.out)].push_back(m.tuple.mu3(hist));
    for (const auto& [w, degrees] : by_output)
        result.output.assign(w, m.tuple.xi(degrees));
    return result;
}

ApproxSolveReport approx_solves(const Machine& m,
                                const std::function<StringFuzzySet(const StringFuzzySet&)>& oracle,
                                const std::vector<StringFuzzySet>& instances,
                                const ToleranceParameter& gamma, const RunOptions& opts) {
    ApproxSolveReport report;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        ApproxSolveItem item;
        item.index = i;
        try {
            const StringFuzzySet got = run(m, instances[i], opts).output;
            const StringFuzzySet want = oracle(instances[i]);
            std::string witness;
            item.pass = gamma_approximates(got, want, gamma, &witness);
            if (!item.pass)
                item.detail = "gamma-approximation fails at \"" + witness + "\": machine " +
                              got.membership(witness).str() + ", oracle " +
                              want.membership(witness).str();
        } catch (const NotHaltedError& e) {
            item.not_halted = true;
            item.detail = e.what();
        }
        report.all_pass = report.all_pass && item.pass;
        report.items.push_back(std::move(item));
    }
    return report;
}

}  // namespace fuzzcomp
