#pragma once

#include "fuzzcomp/circuit.hpp"
#include "fuzzcomp/fpvs.hpp"

#include <optional>

namespace fuzzcomp {

/// Fixed-width binary layout of a machine configuration for runs with
/// ell(s) <= n and at most t_bound steps:
///
///   [proof cells][state][work head][aux head][ell][proof head][work cells][output cells]
///
/// Proof fields exist only for proof-tape machines. Work cells cover a window
/// of n + t_bound + 2 tape cells; output cells hold values in [0, |Gamma|]
/// with 0 marking "past the end of the output".
struct EncodingSpec {
    std::size_t n = 0;
    std::size_t t_bound = 0;
    std::size_t work_window = 0;
    std::size_t out_window = 0;
    std::size_t proof_len = 0;

    std::size_t state_bits = 0;
    std::size_t head_bits = 0;
    std::size_t aux_bits = 0;
    std::size_t ell_bits = 0;
    std::size_t proof_pos_bits = 0;
    std::size_t cell_bits = 0;
    std::size_t out_cell_bits = 0;

    std::size_t off_state = 0, off_head = 0, off_aux = 0, off_ell = 0, off_proof_pos = 0,
                off_work = 0, off_out = 0;

    std::size_t width() const { return off_out + out_window * out_cell_bits; }
};

/// Width cap for configuration encodings; FUZZCOMP_MAX_WIDTH overrides it.
std::size_t max_encoding_width();

EncodingSpec make_encoding(const Machine& m, std::size_t n, std::size_t t_bound,
                           std::size_t proof_len = 0);

/// What a compiled circuit remembers about its origin, so rule gates can be
/// reconstructed after a JSON round trip.
struct CompileContext {
    std::optional<Machine> dftm;
    std::optional<Fpvs> fpvs;
    std::size_t n = 0;
    std::size_t t_bound = 0;
    std::size_t proof_len = 0;
    EncodingSpec enc;
};

void put_bits(Bits& s, std::size_t offset, std::size_t width, std::uint64_t value);
std::uint64_t get_bits(const Bits& s, std::size_t offset, std::size_t width);

Bits encode_config(const EncodingSpec& enc, const Machine& m, const Config& c, std::size_t ell);
std::optional<std::pair<Config, std::size_t>> decode_config(const EncodingSpec& enc,
                                                            const Machine& m, const Bits& bits);

/// The fuzzy input s as a fuzzy set of encoded time-0 configurations.
FuzzySet<Bits> encode_input(const EncodingSpec& enc, const Machine& m, const StringFuzzySet& s);

/// Decodes a fuzzy set over output-window encodings back to output strings.
StringFuzzySet decode_output(const EncodingSpec& enc, const Machine& m,
                             const FuzzySet<Bits>& bits);

/// Unrolls m into a circuit with t_bound step levels plus one output level.
/// Each step gate applies the transition relation to an encoded
/// configuration; final configurations are frozen so their degrees persist to
/// the last level, realizing the history maximum of the halting semantics.
/// For every input s with ell(s) <= n on which m halts within t_bound,
/// decode_output(evaluate(circuit, encode_input(s))) equals run(m, s).output.
/// Requires the standard min/max tuple.
FuzzyCircuit compile_dftm_to_circuit(const Machine& m, std::size_t n, std::size_t t_bound);

/// FPVS variant with the instance s baked in as a fuzzy constant and the
/// proof cells left as the circuit's free inputs; the single designated
/// output is the verdict bit. Proofs are bit strings of length exactly
/// proof_len over a {0,1} proof alphabet.
FuzzyCircuit compile_fpvs_to_circuit(const Fpvs& n, const StringFuzzySet& s,
                                     std::size_t proof_len, std::size_t input_len_bound,
                                     std::size_t t_bound);

enum class EquivStatus { Equal, Mismatch, NotHalted };

struct EquivItem {
    std::size_t index = 0;
    EquivStatus status = EquivStatus::Equal;
    std::string detail;
};

struct EquivReport {
    bool all_equal = true;  // over halting cases; NotHalted items are recorded
    std::size_t halted = 0;
    std::vector<EquivItem> items;
};

/// Per input: exact equality of the decoded circuit output and the run
/// output within t_bound steps.
EquivReport equivalence_check(const Machine& m, const FuzzyCircuit& c,
                              const std::vector<StringFuzzySet>& inputs, std::size_t t_bound);

}  // namespace fuzzcomp
