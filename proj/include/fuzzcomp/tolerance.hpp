#pragma once

#include "fuzzcomp/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fuzzcomp {

enum class ToleranceClass { One, Const, Poly, Exp };

std::string to_string(ToleranceClass c);

/// Imprecision tolerance parameter: a function gamma with gamma(n) >= 1 for
/// all n >= 0, drawn from the closed family
///
///     gamma(n) = (c0 + c1*n + ... + ck*n^k) * scale * base^n
///
/// with ci >= 0, c0*scale >= 1 and base >= 1. The family is closed under
/// pointwise product, which is what reduction composition needs.
class ToleranceParameter {
  public:
    /// gamma == 1.
    static ToleranceParameter one();
    /// gamma == c, c >= 1.
    static ToleranceParameter constant(const Rational& c);
    /// gamma(n) = c0 + c1*n + ... with c0 >= 1, ci >= 0.
    static ToleranceParameter poly(std::vector<Rational> coeffs);
    /// gamma(n) = scale * base^n with scale >= 1, base >= 1.
    static ToleranceParameter exponential(const Rational& scale, const Rational& base);
    static ToleranceParameter make(std::vector<Rational> coeffs, const Rational& scale,
                                   const Rational& base);

    ToleranceClass tolerance_class() const;
    Rational at(std::size_t n) const;
    bool is_identity() const;

    /// Pointwise product, exact within the family.
    friend ToleranceParameter product(const ToleranceParameter& a, const ToleranceParameter& b);

    /// true iff this->at(n) <= other.at(n) for all n (coefficient-wise
    /// sufficient test; exact for this closed family when bases are equal,
    /// conservative otherwise).
    bool dominated_by(const ToleranceParameter& other, std::size_t probe_limit = 64) const;

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& exp_scale() const { return exp_scale_; }
    const Rational& exp_base() const { return exp_base_; }

    std::string label() const;

  private:
    ToleranceParameter(std::vector<Rational> coeffs, Rational scale, Rational base);

    std::vector<Rational> coeffs_;  // c0..ck, never empty
    Rational exp_scale_;
    Rational exp_base_;
};

}  // namespace fuzzcomp
