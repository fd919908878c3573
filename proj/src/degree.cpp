#include "fuzzcomp/degree.hpp"

#include "fuzzcomp/errors.hpp"

namespace fuzzcomp {

Degree::Degree(Rational v) : value_(std::move(v)) {
    if (value_ < 0 || value_ > 1)
        throw SchemaError("degree out of [0,1]: " + to_fraction_string(value_));
}

Degree Degree::parse(const std::string& text) { return Degree(parse_fraction(text)); }

Degree dmul(const Degree& a, const Degree& b) { return Degree(a.value() * b.value()); }

Degree dluk(const Degree& a, const Degree& b) {
    Rational v = a.value() + b.value() - 1;
    return v < 0 ? Degree::zero() : Degree(v);
}

Degree dprobsum(const Degree& a, const Degree& b) {
    return Degree(a.value() + b.value() - a.value() * b.value());
}

Degree dboundedsum(const Degree& a, const Degree& b) {
    Rational v = a.value() + b.value();
    return v > 1 ? Degree::one() : Degree(v);
}

}  // namespace fuzzcomp
