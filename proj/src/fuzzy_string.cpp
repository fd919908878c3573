#include "fuzzcomp/fuzzy_string.hpp"

#include "fuzzcomp/errors.hpp"

namespace fuzzcomp {

EtaFunction::EtaFunction(std::vector<std::pair<Rational, Rational>> samples)
    : samples_(std::move(samples)) {
    if (samples_.size() < 2) throw InvalidEtaError("need at least the two endpoint samples");
    if (samples_.front().first != 0 || samples_.front().second != 1)
        throw InvalidEtaError("first sample must be (0,1)");
    if (samples_.back().first != 1 || samples_.back().second != 0)
        throw InvalidEtaError("last sample must be (1,0)");
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        if (samples_[i].first <= samples_[i - 1].first)
            throw InvalidEtaError("sample abscissas must be strictly increasing");
        if (samples_[i].second >= samples_[i - 1].second)
            throw InvalidEtaError("samples must be strictly decreasing");
    }
}

EtaFunction EtaFunction::linear() {
    return EtaFunction({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
}

Rational EtaFunction::operator()(const Rational& g) const {
    if (g < 0 || g > 1) throw ValidationError("eta argument outside [0,1]");
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        const auto& [x0, y0] = samples_[i - 1];
        const auto& [x1, y1] = samples_[i];
        if (g <= x1) return y0 + (y1 - y0) * (g - x0) / (x1 - x0);
    }
    return samples_.back().second;
}

DistanceKind distance_from_name(const std::string& name) {
    if (name == "normalized-hamming") return DistanceKind::NormalizedHamming;
    if (name == "discrete") return DistanceKind::Discrete;
    throw SchemaError("unknown distance measure \"" + name + "\"");
}

std::string distance_name(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::NormalizedHamming: return "normalized-hamming";
        case DistanceKind::Discrete: return "discrete";
    }
    return "?";
}

Rational string_distance(DistanceKind kind, const std::string& x, const std::string& z) {
    switch (kind) {
        case DistanceKind::Discrete: return Rational(x == z ? 0 : 1);
        case DistanceKind::NormalizedHamming: {
            if (x.size() != z.size()) return Rational(1);
            if (x.empty()) return Rational(0);
            std::size_t diff = 0;
            for (std::size_t i = 0; i < x.size(); ++i)
                if (x[i] != z[i]) ++diff;
            return Rational(diff, x.size());
        }
    }
    return Rational(1);
}

FuzzyStringReport validate_fuzzy_string(const FuzzyString& s) {
    FuzzyStringReport report;
    auto flag = [&](std::string cond, std::string witness, std::string detail) {
        report.ok = false;
        report.violations.push_back({std::move(cond), std::move(witness), std::move(detail)});
    };

    if (!s.quantity.membership(s.target).is_one())
        flag("target-degree", s.target,
             "target degree is " + s.quantity.membership(s.target).str() + ", expected 1");
    for (const auto& [x, d] : s.quantity.pairs()) {
        if (x != s.target && d.is_one())
            flag("core", x, "non-target element with degree 1");
        const Rational dist = string_distance(s.distance, s.target, x);
        const Rational bound = s.eta(d.value());
        if (dist > bound)
            flag("ball", x,
                 "d(target,x) = " + to_fraction_string(dist) + " > eta(" + d.str() +
                     ") = " + to_fraction_string(bound));
    }
    return report;
}

}  // namespace fuzzcomp
