#include "fuzzcomp/rational.hpp"

#include "fuzzcomp/errors.hpp"

#include <sstream>

namespace fuzzcomp {

std::string to_fraction_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

namespace {

bool parse_integer(const std::string& s, BigInt& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') return false;
    out = BigInt(s);
    return true;
}

}  // namespace

Rational parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    BigInt num, den = 1;
    if (slash == std::string::npos) {
        if (!parse_integer(text, num)) throw SchemaError("not a rational: \"" + text + "\"");
    } else {
        if (!parse_integer(text.substr(0, slash), num) ||
            !parse_integer(text.substr(slash + 1), den))
            throw SchemaError("not a rational: \"" + text + "\"");
        if (den == 0) throw SchemaError("zero denominator in \"" + text + "\"");
    }
    return Rational(num, den);
}

}  // namespace fuzzcomp
