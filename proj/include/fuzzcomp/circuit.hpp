#pragma once

#include "fuzzcomp/fuzzy_set.hpp"
#include "fuzzcomp/operators.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace fuzzcomp {

/// Bit vectors are plain '0'/'1' strings, which keeps fuzzy sets over them
/// ordered and JSON-friendly.
using Bits = std::string;

struct GateTable {
    std::map<Bits, FuzzySet<Bits>> rows;  // missing rows act as the empty fuzzy set
};

/// Intensional gate: a named deterministic function of the input bits.
/// Explicit tables over wide encodings would be exponentially large, so
/// machine-step gates are expressed this way.
struct GateRule {
    std::string name;
    std::function<FuzzySet<Bits>(const Bits&)> fn;
};

struct FuzzyGate {
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::variant<GateTable, GateRule> semantics;

    FuzzySet<Bits> apply(const Bits& row) const;
    bool is_rule() const { return std::holds_alternative<GateRule>(semantics); }
};

/// A block of level-0 variables carrying a joint fuzzy constant.
struct ConstantBlock {
    std::vector<std::string> labels;
    FuzzySet<Bits> value;
};

struct Machine;  // compile context, defined in machine.hpp

/// Everything a compiled circuit needs to be re-evaluated after a JSON round
/// trip: the machine its rule gates refer to and the compile parameters.
struct CompileContext;

/// Leveled fuzzy circuit. Level 0 holds the input variables and optional
/// constant blocks; each later level is a list of gates wired to the previous
/// level's variables; the designated outputs name a subset of the last level.
struct FuzzyCircuit {
    std::vector<std::string> inputs;
    std::vector<ConstantBlock> constants;
    std::vector<std::vector<FuzzyGate>> levels;
    std::vector<std::string> outputs;
    SafeTuple tuple = standard_min_max_tuple();
    /// Cross-gate combiner mu2' (pointwise min by default).
    ListOp cross_combiner;
    std::string cross_combiner_name = "min";

    std::shared_ptr<const CompileContext> context;  // set on compiled circuits

    FuzzyCircuit();
    /// Variable labels available to gates at level `level` (0 = inputs and
    /// constants).
    std::vector<std::string> level_variables(std::size_t level) const;
};

struct CircuitViolation {
    std::string kind;  // "duplicate-output" | "dangling-wire" | "arity" | ...
    std::size_t level = 0;
    std::string detail;
};

struct CircuitReport {
    bool ok = true;
    std::vector<CircuitViolation> violations;
};

CircuitReport validate_circuit(const FuzzyCircuit& c);

/// Runs the level recurrence: for each surviving assignment v' and each joint
/// gate output w', the per-gate terms mu1(conf(v'), G_k(v'_k)(w'_k)) are
/// combined across gates with mu2' and across predecessors with mu3. The
/// final level is projected onto the designated outputs with xi.
FuzzySet<Bits> evaluate(const FuzzyCircuit& c, const FuzzySet<Bits>& input);

/// Gates plus wires (gate fan-in + fan-out label counts).
std::size_t circuit_size(const FuzzyCircuit& c);

}  // namespace fuzzcomp
