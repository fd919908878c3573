#pragma once

#include "fuzzcomp/rational.hpp"

#include <string>

namespace fuzzcomp {

/// A membership / precision / possibility degree: an exact rational in [0,1].
class Degree {
  public:
    Degree() : value_(0) {}
    explicit Degree(Rational v);
    Degree(long num, long den) : Degree(Rational(num, den)) {}

    static Degree zero() { return Degree(); }
    static Degree one() { return Degree(Rational(1)); }
    static Degree parse(const std::string& text);

    const Rational& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    std::string str() const { return to_fraction_string(value_); }

    friend bool operator==(const Degree& a, const Degree& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Degree& a, const Degree& b) { return a.value_ != b.value_; }
    friend bool operator<(const Degree& a, const Degree& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Degree& a, const Degree& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Degree& a, const Degree& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Degree& a, const Degree& b) { return a.value_ >= b.value_; }

  private:
    Rational value_;
};

inline Degree dmin(const Degree& a, const Degree& b) { return a <= b ? a : b; }
inline Degree dmax(const Degree& a, const Degree& b) { return a >= b ? a : b; }

/// Exact product; [0,1] is closed under it.
Degree dmul(const Degree& a, const Degree& b);

/// Lukasiewicz t-norm max(0, a+b-1).
Degree dluk(const Degree& a, const Degree& b);

/// Probabilistic sum a+b-ab.
Degree dprobsum(const Degree& a, const Degree& b);

/// Bounded sum min(1, a+b).
Degree dboundedsum(const Degree& a, const Degree& b);

}  // namespace fuzzcomp
