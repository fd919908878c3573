#include "fuzzcomp/circuit.hpp"

#include "fuzzcomp/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fuzzcomp {

FuzzySet<Bits> FuzzyGate::apply(const Bits& row) const {
    if (const auto* table = std::get_if<GateTable>(&semantics)) {
        auto it = table->rows.find(row);
        return it == table->rows.end() ? FuzzySet<Bits>() : it->second;
    }
    return std::get<GateRule>(semantics).fn(row);
}

FuzzyCircuit::FuzzyCircuit() {
    cross_combiner = [](std::span<const Degree> v) {
        return fold_aggregate([](const Degree& a, const Degree& b) { return dmin(a, b); }, v);
    };
}

std::vector<std::string> FuzzyCircuit::level_variables(std::size_t level) const {
    std::vector<std::string> vars;
    if (level == 0) {
        vars = inputs;
        for (const auto& block : constants)
            vars.insert(vars.end(), block.labels.begin(), block.labels.end());
        return vars;
    }
    for (const auto& gate : levels.at(level - 1))
        vars.insert(vars.end(), gate.outputs.begin(), gate.outputs.end());
    return vars;
}

CircuitReport validate_circuit(const FuzzyCircuit& c) {
    CircuitReport report;
    auto flag = [&](std::string kind, std::size_t level, std::string detail) {
        report.ok = false;
        report.violations.push_back({std::move(kind), level, std::move(detail)});
    };

    {
        std::set<std::string> seen;
        for (const auto& label : c.level_variables(0))
            if (!seen.insert(label).second)
                flag("duplicate-output", 0, "level-0 label \"" + label + "\" declared twice");
    }
    for (const auto& block : c.constants) {
        for (const auto& [bits, d] : block.value.pairs())
            if (bits.size() != block.labels.size())
                flag("arity", 0,
                     "constant value \"" + bits + "\" does not match block width " +
                         std::to_string(block.labels.size()));
    }

    for (std::size_t lv = 0; lv < c.levels.size(); ++lv) {
        const auto prev = c.level_variables(lv);
        const std::set<std::string> available(prev.begin(), prev.end());
        std::set<std::string> produced;
        if (c.levels[lv].empty()) flag("empty-level", lv + 1, "level has no gates");
        for (const auto& gate : c.levels[lv]) {
            for (const auto& in : gate.inputs)
                if (!available.count(in))
                    flag("dangling-wire", lv + 1,
                         "gate input \"" + in + "\" is not produced at the previous level");
            for (const auto& out : gate.outputs)
                if (!produced.insert(out).second)
                    flag("duplicate-output", lv + 1,
                         "output label \"" + out + "\" emitted by two gates");
            if (gate.outputs.empty()) flag("arity", lv + 1, "gate with no outputs");
            if (const auto* table = std::get_if<GateTable>(&gate.semantics)) {
                for (const auto& [row, image] : table->rows) {
                    if (row.size() != gate.inputs.size())
                        flag("arity", lv + 1, "table row \"" + row + "\" has wrong arity");
                    for (const auto& [bits, d] : image.pairs())
                        if (bits.size() != gate.outputs.size())
                            flag("arity", lv + 1,
                                 "table image \"" + bits + "\" has wrong coarity");
                }
            }
        }
    }

    {
        const auto last = c.level_variables(c.levels.size());
        const std::set<std::string> available(last.begin(), last.end());
        for (const auto& out : c.outputs)
            if (!available.count(out))
                flag("dangling-wire", c.levels.size(),
                     "designated output \"" + out + "\" is not a last-level variable");
        if (c.outputs.empty()) flag("arity", c.levels.size(), "no designated outputs");
    }
    return report;
}

namespace {

Bits project(const Bits& assignment, const std::vector<std::size_t>& indices) {
    Bits out;
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back(assignment[i]);
    return out;
}

std::vector<std::size_t> indices_of(const std::vector<std::string>& vars,
                                    const std::vector<std::string>& wanted) {
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < vars.size(); ++i) pos.emplace(vars[i], i);
    std::vector<std::size_t> out;
    out.reserve(wanted.size());
    for (const auto& w : wanted) out.push_back(pos.at(w));
    return out;
}

}  // namespace

FuzzySet<Bits> evaluate(const FuzzyCircuit& c, const FuzzySet<Bits>& input) {
    const CircuitReport report = validate_circuit(c);
    if (!report.ok)
        throw ValidationError("circuit: " + report.violations.front().kind + ": " +
                              report.violations.front().detail);

    // conf_0: inputs joined with the constant blocks; the joint degree is the
    // exact product, mirroring the initial product of proof-carrying machines.
    std::map<Bits, Degree> conf;
    for (const auto& [bits, d] : input.pairs()) {
        if (bits.size() != c.inputs.size())
            throw ValidationError("circuit input \"" + bits + "\" has width " +
                                  std::to_string(bits.size()) + ", expected " +
                                  std::to_string(c.inputs.size()));
        std::vector<std::pair<Bits, Degree>> joint{{bits, d}};
        for (const auto& block : c.constants) {
            std::vector<std::pair<Bits, Degree>> next;
            for (const auto& [prefix, pd] : joint)
                for (const auto& [cb, cd] : block.value.pairs())
                    next.emplace_back(prefix + cb, dmul(pd, cd));
            joint = std::move(next);
        }
        for (auto& [assignment, d2] : joint)
            if (!d2.is_zero()) conf.emplace(std::move(assignment), d2);
    }

    std::vector<std::string> vars = c.level_variables(0);
    for (std::size_t lv = 0; lv < c.levels.size(); ++lv) {
        const auto& gates = c.levels[lv];
        std::vector<std::vector<std::size_t>> in_idx;
        in_idx.reserve(gates.size());
        for (const auto& gate : gates) in_idx.push_back(indices_of(vars, gate.inputs));

        // terms[w'][v'] = mu2' over gates of mu1(conf(v'), G_k(v'_k)(w'_k));
        // the mu3 family for w' is indexed by all of supp(conf).
        std::map<Bits, std::map<Bits, Degree>> terms;
        for (const auto& [v, alpha] : conf) {
            std::vector<std::pair<Bits, std::vector<Degree>>> partial{{Bits(), {}}};
            for (std::size_t k = 0; k < gates.size(); ++k) {
                const FuzzySet<Bits> image = gates[k].apply(project(v, in_idx[k]));
                std::vector<std::pair<Bits, std::vector<Degree>>> next;
                for (const auto& [w_prefix, ds] : partial) {
                    for (const auto& [wk, gd] : image.pairs()) {
                        auto ds2 = ds;
                        ds2.push_back(c.tuple.mu1(alpha, gd));
                        next.emplace_back(w_prefix + wk, std::move(ds2));
                    }
                }
                partial = std::move(next);
                if (partial.empty()) break;
            }
            for (auto& [w, ds] : partial) terms[w][v] = c.cross_combiner(ds);
        }

        std::map<Bits, Degree> next_conf;
        std::vector<Degree> family;
        for (const auto& [w, by_pred] : terms) {
            family.clear();
            for (const auto& [v, alpha] : conf) {
                auto it = by_pred.find(v);
                family.push_back(it == by_pred.end() ? Degree::zero() : it->second);
            }
            Degree d = c.tuple.mu3(family);
            if (!d.is_zero()) next_conf.emplace(w, std::move(d));
        }
        conf = std::move(next_conf);
        vars = c.level_variables(lv + 1);
    }

    // Project the last level onto the designated outputs, collapsing the
    // dropped variables with xi.
    const auto out_idx = indices_of(vars, c.outputs);
    std::map<Bits, std::vector<Degree>> grouped;
    for (const auto& [w, d] : conf) grouped[project(w, out_idx)].push_back(d);
    FuzzySet<Bits> result;
    for (const auto& [w, ds] : grouped) result.assign(w, c.tuple.xi(ds));
    return result;
}

std::size_t circuit_size(const FuzzyCircuit& c) {
    std::size_t size = 0;
    for (const auto& level : c.levels)
        for (const auto& gate : level) size += 1 + gate.inputs.size() + gate.outputs.size();
    return size;
}

}  // namespace fuzzcomp
