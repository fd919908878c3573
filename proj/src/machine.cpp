#include "fuzzcomp/machine.hpp"

#include "fuzzcomp/errors.hpp"

#include <algorithm>
#include <sstream>

namespace fuzzcomp {

SymbolTable SymbolTable::from(std::vector<std::string> names) {
    SymbolTable t;
    t.names = std::move(names);
    for (std::size_t i = 0; i < t.names.size(); ++i) {
        if (t.names[i].empty()) throw ValidationError("empty symbol name");
        if (!t.index.emplace(t.names[i], static_cast<SymId>(i)).second)
            throw ValidationError("duplicate symbol \"" + t.names[i] + "\"");
    }
    return t;
}

SymId SymbolTable::id(const std::string& name) const {
    auto it = index.find(name);
    if (it == index.end()) throw ValidationError("unknown symbol \"" + name + "\"");
    return it->second;
}

std::optional<SymId> SymbolTable::try_id(const std::string& name) const {
    auto it = index.find(name);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

AuxSym aux_sym_from_name(const std::string& name) {
    if (name == kCent) return AuxSym::Cent;
    if (name == kDollar) return AuxSym::Dollar;
    if (name == "1") return AuxSym::One;
    if (name == kBlank) return AuxSym::Blank;
    throw SchemaError("unknown auxiliary-tape symbol \"" + name + "\"");
}

const std::string& aux_sym_name(AuxSym s) {
    static const std::string names[4] = {kCent, kDollar, "1", kBlank};
    return names[static_cast<std::uint8_t>(s)];
}

std::vector<SymId> Machine::parse_input(const std::string& x) const {
    std::vector<SymId> out;
    out.reserve(x.size());
    for (char c : x) {
        std::string sym(1, c);
        if (!input_syms.contains(sym))
            throw ValidationError("input symbol \"" + sym + "\" not in the input alphabet");
        out.push_back(work_syms.id(sym));
    }
    return out;
}

std::string Machine::work_string(const std::vector<SymId>& w) const {
    std::string s;
    for (SymId id : w) s += work_syms.name(id);
    return s;
}

std::string Machine::output_string(const std::vector<SymId>& w) const {
    std::string s;
    for (SymId id : w) s += output_syms.name(id);
    return s;
}

void Machine::finalize() {
    if (states.size() == 0) throw ValidationError("machine has no states");
    if (initial >= states.size()) throw ValidationError("initial state out of range");
    if (final_mask.size() != states.size())
        throw ValidationError("final mask size mismatch");
    for (const std::string& special : {kCent, kDollar, kBlank})
        if (!work_syms.contains(special))
            throw ValidationError("work alphabet must contain \"" + special + "\"");
    cent = work_syms.id(kCent);
    dollar = work_syms.id(kDollar);
    blank = work_syms.id(kBlank);
    for (const auto& name : input_syms.names) {
        if (name.size() != 1)
            throw ValidationError("input symbols must be single characters, got \"" + name + "\"");
        if (!work_syms.contains(name))
            throw ValidationError("input symbol \"" + name + "\" missing from the work alphabet");
    }
    for (const auto& [key, targets] : delta) {
        if (key.state >= states.size() || key.work >= work_syms.size())
            throw ValidationError("transition key out of range");
        if (is_final(key.state))
            throw ValidationError("transition from final state \"" + states.name(key.state) +
                                  "\" (delta is undefined on final states)");
        if (targets.empty()) throw ValidationError("empty transition image");
        for (const auto& t : targets) {
            if (t.state >= states.size() || t.write >= work_syms.size())
                throw ValidationError("transition target out of range");
            if (t.emit && *t.emit >= output_syms.size())
                throw ValidationError("output symbol out of range");
            if (t.move_work < -1 || t.move_work > 1 || t.move_aux < -1 || t.move_aux > 1 ||
                t.move_proof < -1 || t.move_proof > 1)
                throw ValidationError("head move must be -1, 0 or +1");
            if (t.degree.is_zero())
                throw ValidationError("transition degree must lie in (0,1]");
        }
        for (std::size_t i = 1; i < targets.size(); ++i) {
            const auto& a = targets[i - 1];
            const auto& b = targets[i];
            auto tup = [](const TransitionTarget& t) {
                return std::make_tuple(t.state, t.write, t.emit.has_value(),
                                       t.emit.value_or(0), t.move_work, t.move_aux,
                                       t.move_proof);
            };
            if (tup(a) == tup(b)) throw ValidationError("duplicate transition target");
        }
    }
}

std::string format_config(const Machine& m, const Config& c) {
    std::ostringstream os;
    os << m.work_string(c.left) << "[" << m.states.name(c.state) << "]"
       << m.work_string(c.right) << "|r=" << c.aux_pos << "|w=" << m.output_string(c.out);
    return os.str();
}

MachineBuilder::MachineBuilder(std::string name) : name_(std::move(name)) {}

MachineBuilder& MachineBuilder::input_alphabet(std::vector<std::string> names) {
    input_ = std::move(names);
    return *this;
}

MachineBuilder& MachineBuilder::work_alphabet(std::vector<std::string> names) {
    work_ = std::move(names);
    return *this;
}

MachineBuilder& MachineBuilder::output_alphabet(std::vector<std::string> names) {
    output_ = std::move(names);
    return *this;
}

MachineBuilder& MachineBuilder::tuple(SafeTuple t) {
    tuple_ = std::move(t);
    return *this;
}

StateId MachineBuilder::state_id(const std::string& name) {
    auto it = state_index_.find(name);
    if (it != state_index_.end()) return it->second;
    StateId id = static_cast<StateId>(state_names_.size());
    state_names_.push_back(name);
    state_index_.emplace(name, id);
    return id;
}

MachineBuilder& MachineBuilder::state(const std::string& name) {
    state_id(name);
    return *this;
}

MachineBuilder& MachineBuilder::initial(const std::string& name) {
    state_id(name);
    initial_ = name;
    return *this;
}

MachineBuilder& MachineBuilder::final(const std::string& name) {
    state_id(name);
    finals_.push_back(name);
    return *this;
}

MachineBuilder& MachineBuilder::transition(const std::string& from, const std::string& work_sym,
                                           AuxSym aux, const std::string& to,
                                           const std::string& write_sym,
                                           const std::string& emit_sym, int move_work,
                                           int move_aux, Degree degree) {
    state_id(from);
    state_id(to);
    transitions_.push_back(
        {from, work_sym, to, write_sym, emit_sym, aux, move_work, move_aux, std::move(degree)});
    return *this;
}

Machine MachineBuilder::build() {
    Machine m;
    m.name = name_;
    m.states = SymbolTable::from(state_names_);

    auto work = work_;
    for (const std::string& special : {kCent, kDollar, kBlank})
        if (std::find(work.begin(), work.end(), special) == work.end()) work.push_back(special);
    m.work_syms = SymbolTable::from(work);
    m.input_syms = SymbolTable::from(input_);
    m.output_syms = SymbolTable::from(output_);
    m.tuple = tuple_;

    if (!initial_) throw ValidationError("no initial state declared");
    m.initial = m.states.id(*initial_);
    m.final_mask.assign(m.states.size(), false);
    for (const auto& f : finals_) m.final_mask[m.states.id(f)] = true;

    for (const auto& t : transitions_) {
        DftmKey key{m.states.id(t.from), m.work_syms.id(t.work), t.aux};
        TransitionTarget target;
        target.state = m.states.id(t.to);
        target.write = m.work_syms.id(t.write);
        if (!t.emit.empty()) target.emit = m.output_syms.id(t.emit);
        target.move_work = static_cast<std::int8_t>(t.d1);
        target.move_aux = static_cast<std::int8_t>(t.d2);
        target.degree = t.degree;
        m.delta[key].push_back(target);
    }
    m.finalize();
    return m;
}

}  // namespace fuzzcomp
