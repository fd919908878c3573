#pragma once

#include "fuzzcomp/fuzzy_set.hpp"
#include "fuzzcomp/operators.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fuzzcomp {

using StateId = std::uint32_t;
using SymId = std::uint32_t;

inline const std::string kCent = "\xC2\xA2";  // the left endmarker
inline const std::string kDollar = "$";
inline const std::string kBlank = "#";

/// Ordered symbol/state name table; ids are positions in the declared order.
struct SymbolTable {
    std::vector<std::string> names;
    std::map<std::string, SymId> index;

    static SymbolTable from(std::vector<std::string> names);
    SymId id(const std::string& name) const;
    std::optional<SymId> try_id(const std::string& name) const;
    const std::string& name(SymId id) const { return names.at(id); }
    std::size_t size() const { return names.size(); }
    bool contains(const std::string& name) const { return index.count(name) != 0; }
};

/// The fixed auxiliary-tape alphabet {cent, dollar, 1, blank}. The auxiliary
/// tape holds cent 1^ell dollar and the head range is [0, ell], so only cent
/// and 1 are ever scanned; the other two symbols may still be named in
/// transition keys (such entries simply never fire).
enum class AuxSym : std::uint8_t { Cent = 0, Dollar = 1, One = 2, Blank = 3 };

AuxSym aux_sym_from_name(const std::string& name);
const std::string& aux_sym_name(AuxSym s);

/// Auxiliary tape symbol visible at position r of cent 1^ell dollar, r <= ell.
inline AuxSym aux_symbol_at(std::size_t r) { return r == 0 ? AuxSym::Cent : AuxSym::One; }

struct DftmKey {
    StateId state;
    SymId work;
    AuxSym aux;
    auto operator<=>(const DftmKey&) const = default;
};

struct TransitionTarget {
    StateId state = 0;
    SymId write = 0;
    std::optional<SymId> emit;  // output symbol, or nullopt for the silent move
    std::int8_t move_work = 0;
    std::int8_t move_aux = 0;
    std::int8_t move_proof = 0;  // used only by proof-tape machines
    Degree degree;
};

/// Deterministic fuzzy Turing machine with a read-only auxiliary tape and a
/// write-only output tape. The transition function maps (state, work symbol,
/// aux symbol) to a finite fuzzy set of moves.
struct Machine {
    std::string name;
    SymbolTable states;
    SymbolTable input_syms;   // must name single-byte symbols present in work_syms
    SymbolTable work_syms;    // contains cent, dollar, blank
    SymbolTable output_syms;
    StateId initial = 0;
    std::vector<bool> final_mask;
    SafeTuple tuple = standard_min_max_tuple();
    std::map<DftmKey, std::vector<TransitionTarget>> delta;

    SymId cent = 0, dollar = 0, blank = 0;  // cached work-symbol ids

    bool is_final(StateId q) const { return final_mask.at(q); }
    /// Splits x into input symbols and maps them to work-tape ids.
    std::vector<SymId> parse_input(const std::string& x) const;
    std::string work_string(const std::vector<SymId>& w) const;
    std::string output_string(const std::vector<SymId>& w) const;

    /// Checks alphabets, transition well-formedness and degree ranges;
    /// resolves the cached special-symbol ids. Throws ValidationError.
    void finalize();
};

/// A global configuration u q v # r # w: work tape uv with the head on the
/// first symbol of v, auxiliary head at r, output written so far w. The
/// representation is canonical: v is nonempty and carries no trailing blanks
/// beyond the scanned cell, so equal instantaneous descriptions compare equal.
struct Config {
    std::vector<SymId> left;
    StateId state = 0;
    std::vector<SymId> right;
    std::uint32_t aux_pos = 0;
    std::vector<SymId> out;

    auto operator<=>(const Config&) const = default;
};

using FuzzyConfig = std::map<Config, Degree>;

std::string format_config(const Machine& m, const Config& c);

/// Declarative construction helper; states are registered in first-mention
/// order unless declared explicitly up front.
class MachineBuilder {
  public:
    explicit MachineBuilder(std::string name = "machine");

    MachineBuilder& input_alphabet(std::vector<std::string> names);
    /// Work alphabet in declaration order; cent/dollar/blank are appended
    /// automatically when missing.
    MachineBuilder& work_alphabet(std::vector<std::string> names);
    MachineBuilder& output_alphabet(std::vector<std::string> names);
    MachineBuilder& tuple(SafeTuple t);
    MachineBuilder& state(const std::string& name);
    MachineBuilder& initial(const std::string& name);
    MachineBuilder& final(const std::string& name);
    MachineBuilder& transition(const std::string& from, const std::string& work_sym,
                               AuxSym aux, const std::string& to, const std::string& write_sym,
                               const std::string& emit_sym,  // "" for the silent move
                               int move_work, int move_aux, Degree degree);

    Machine build();

  private:
    StateId state_id(const std::string& name);

    std::string name_;
    std::vector<std::string> input_, work_, output_;
    SafeTuple tuple_ = standard_min_max_tuple();
    std::vector<std::string> state_names_;
    std::map<std::string, StateId> state_index_;
    std::optional<std::string> initial_;
    std::vector<std::string> finals_;
    struct RawTransition {
        std::string from, work, to, write, emit;
        AuxSym aux;
        int d1, d2;
        Degree degree;
    };
    std::vector<RawTransition> transitions_;
};

}  // namespace fuzzcomp
