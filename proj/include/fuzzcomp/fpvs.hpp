#pragma once

#include "fuzzcomp/circuit.hpp"
#include "fuzzcomp/dftm.hpp"
#include "fuzzcomp/machine.hpp"

#include <optional>

namespace fuzzcomp {

struct FpvsKey {
    StateId state;
    SymId work;
    AuxSym aux;
    SymId proof;  // id in the proof-tape alphabet
    auto operator<=>(const FpvsKey&) const = default;
};

/// Fuzzy proof verification system: a DFTM extended with a read-only proof
/// tape. The proof head ranges over [0, |y|]; it scans the blank just past
/// the proof at position |y|, and moves beyond either end yield no successor.
struct Fpvs {
    Machine core;                  // states, tape alphabets, tuple; core.delta stays empty
    SymbolTable proof_input_syms;  // Delta_2, single-byte names
    SymbolTable proof_tape_syms;   // Sigma_3, contains Delta_2 and the blank
    std::map<FpvsKey, std::vector<TransitionTarget>> delta;
    SymId proof_blank = 0;

    std::vector<SymId> parse_proof(const std::string& y) const;
    void finalize();
};

struct FpvsConfig {
    Config base;
    std::vector<SymId> proof;  // y, fixed along a computation path
    std::uint32_t proof_pos = 0;
    auto operator<=>(const FpvsConfig&) const = default;
};

using FpvsFuzzyConfig = std::map<FpvsConfig, Degree>;

/// A fuzzy subset of {0,1}: acceptance and rejection degrees.
class Verdict {
  public:
    Verdict() = default;
    Verdict(Degree no, Degree yes) : no_(std::move(no)), yes_(std::move(yes)) {}

    /// Validates support within {"0","1"}.
    static Verdict from_fuzzy_set(const StringFuzzySet& s);

    const Degree& yes() const { return yes_; }
    const Degree& no() const { return no_; }
    StringFuzzySet to_fuzzy_set() const;

    friend bool operator==(const Verdict& a, const Verdict& b) {
        return a.no_ == b.no_ && a.yes_ == b.yes_;
    }

  private:
    Degree no_, yes_;
};

/// Finite, deterministically ordered space of fuzzy proofs: either an explicit
/// list or all crisp strings over an alphabet up to a length bound.
class ProofSpace {
  public:
    static ProofSpace explicit_list(std::vector<StringFuzzySet> proofs);
    static ProofSpace crisp_up_to(std::vector<std::string> alphabet, std::size_t max_len);
    /// All crisp strings of exactly len bits over {0,1}.
    static ProofSpace crisp_bits(std::size_t len);

    std::vector<StringFuzzySet> enumerate() const;
    bool empty() const;

  private:
    std::vector<StringFuzzySet> list_;
    std::vector<std::string> alphabet_;
    std::size_t max_len_ = 0;
    std::size_t exact_len_ = 0;
    enum class Kind { Explicit, CrispUpTo, CrispExact } kind_ = Kind::Explicit;
};

struct VerifyResult {
    StringFuzzySet output;
    std::size_t time = 0;
};

/// Runs N on input s with proof phi. The time-0 degree of a start
/// configuration for (x, y) is the exact product s(x)*phi(y).
VerifyResult verify_full(const Fpvs& n, const StringFuzzySet& s, const StringFuzzySet& phi,
                         const RunOptions& opts = {});

/// verify_full wrapped as a decision verdict; throws ValidationError when the
/// machine emits anything outside {"0","1"}.
Verdict verify(const Fpvs& n, const StringFuzzySet& s, const StringFuzzySet& phi,
               const RunOptions& opts = {});

struct OutcomeResult {
    Verdict verdict;
    /// Indexes into the enumerated proof space attaining the sup and the inf.
    std::size_t yes_witness = 0;
    std::size_t no_witness = 0;
};

/// b(1) = max over the space of verify(..)(1), b(0) = min of verify(..)(0),
/// realized exactly over the finite space. Throws EmptyProofSpaceError.
OutcomeResult outcome(const Fpvs& n, const StringFuzzySet& s, const ProofSpace& space,
                      const RunOptions& opts = {}, unsigned jobs = 1);

struct SatResult {
    Verdict verdict;
    std::size_t yes_witness = 0;
    std::size_t no_witness = 0;
};

/// Fuzzy-Circuit-SAT over a declared finite input space: b(1) is the largest
/// acceptance degree and b(0) the smallest rejection degree over the space.
SatResult fuzzy_circuit_sat(const FuzzyCircuit& c, const std::vector<FuzzySet<Bits>>& input_space,
                            unsigned jobs = 1);

/// All crisp assignments of `width` bits, in numeric order.
std::vector<FuzzySet<Bits>> all_crisp_inputs(std::size_t width);

/// Builds a proof verification system for a single-output circuit: the proof
/// spells a circuit input assignment, the machine reads it into its state and
/// then walks the circuit's levels, carrying gate degrees on its transitions.
/// Its outcome over ProofSpace::crisp_bits(#inputs) equals
/// fuzzy_circuit_sat(c, all_crisp_inputs(#inputs)) exactly.
Fpvs sat_via_fpvs(const FuzzyCircuit& c);

/// Proof space matching sat_via_fpvs(c).
ProofSpace sat_proof_space(const FuzzyCircuit& c);

}  // namespace fuzzcomp
