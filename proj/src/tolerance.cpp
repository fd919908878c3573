#include "fuzzcomp/tolerance.hpp"

#include "fuzzcomp/errors.hpp"

#include <sstream>

namespace fuzzcomp {

std::string to_string(ToleranceClass c) {
    switch (c) {
        case ToleranceClass::One: return "one";
        case ToleranceClass::Const: return "const";
        case ToleranceClass::Poly: return "poly";
        case ToleranceClass::Exp: return "exp";
    }
    return "?";
}

ToleranceParameter::ToleranceParameter(std::vector<Rational> coeffs, Rational scale, Rational base)
    : coeffs_(std::move(coeffs)), exp_scale_(std::move(scale)), exp_base_(std::move(base)) {
    if (coeffs_.empty()) throw SchemaError("tolerance: empty coefficient list");
    for (const auto& c : coeffs_)
        if (c < 0) throw SchemaError("tolerance: negative coefficient " + to_fraction_string(c));
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (exp_base_ < 1) throw SchemaError("tolerance: base < 1");
    if (exp_scale_ <= 0) throw SchemaError("tolerance: scale <= 0");
    if (coeffs_[0] * exp_scale_ < 1)
        throw SchemaError("tolerance: gamma(0) = " + to_fraction_string(coeffs_[0] * exp_scale_) +
                          " < 1");
}

ToleranceParameter ToleranceParameter::one() { return {{Rational(1)}, Rational(1), Rational(1)}; }

ToleranceParameter ToleranceParameter::constant(const Rational& c) {
    return {{c}, Rational(1), Rational(1)};
}

ToleranceParameter ToleranceParameter::poly(std::vector<Rational> coeffs) {
    return {std::move(coeffs), Rational(1), Rational(1)};
}

ToleranceParameter ToleranceParameter::exponential(const Rational& scale, const Rational& base) {
    return {{Rational(1)}, scale, base};
}

ToleranceParameter ToleranceParameter::make(std::vector<Rational> coeffs, const Rational& scale,
                                            const Rational& base) {
    return {std::move(coeffs), scale, base};
}

ToleranceClass ToleranceParameter::tolerance_class() const {
    if (exp_base_ > 1) return ToleranceClass::Exp;
    if (coeffs_.size() > 1) return ToleranceClass::Poly;
    if (coeffs_[0] * exp_scale_ > 1) return ToleranceClass::Const;
    return ToleranceClass::One;
}

bool ToleranceParameter::is_identity() const {
    return tolerance_class() == ToleranceClass::One;
}

Rational ToleranceParameter::at(std::size_t n) const {
    Rational nn(static_cast<unsigned long>(n)), term(1);
    Rational poly(0);
    for (const auto& c : coeffs_) {
        poly += c * term;
        term *= nn;
    }
    Rational expo(1);
    if (exp_base_ != 1) {
        BigInt bn = boost::multiprecision::pow(numerator(exp_base_), static_cast<unsigned>(n));
        BigInt bd = boost::multiprecision::pow(denominator(exp_base_), static_cast<unsigned>(n));
        expo = Rational(bn, bd);
    }
    return poly * exp_scale_ * expo;
}

ToleranceParameter product(const ToleranceParameter& a, const ToleranceParameter& b) {
    std::vector<Rational> conv(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ToleranceParameter(std::move(conv), a.exp_scale_ * b.exp_scale_,
                              a.exp_base_ * b.exp_base_);
}

bool ToleranceParameter::dominated_by(const ToleranceParameter& other,
                                      std::size_t probe_limit) const {
    if (exp_base_ > other.exp_base_) return false;
    if (exp_base_ == other.exp_base_ && coeffs_.size() > other.coeffs_.size()) {
        // higher polynomial degree with equal base can still be dominated only
        // if the extra coefficients are zero, which the constructor trimmed.
        return false;
    }
    for (std::size_t n = 0; n <= probe_limit; ++n)
        if (at(n) > other.at(n)) return false;
    return true;
}

std::string ToleranceParameter::label() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0 && coeffs_.size() > 1) continue;
        if (!first) os << "+";
        os << to_fraction_string(coeffs_[i]);
        if (i == 1) os << "*n";
        if (i > 1) os << "*n^" << i;
        first = false;
    }
    if (exp_scale_ != 1) os << " * " << to_fraction_string(exp_scale_);
    if (exp_base_ != 1) os << " * (" << to_fraction_string(exp_base_) << ")^n";
    return os.str();
}

}  // namespace fuzzcomp
