#pragma once

#include "fuzzcomp/fuzzy_set.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fuzzcomp {

/// Strictly decreasing piecewise-linear map [0,1] -> [0,1], pinned at
/// eta(0) = 1 and eta(1) = 0, given by rational sample points.
class EtaFunction {
  public:
    /// Throws InvalidEtaError unless the samples start at (0,1), end at (1,0),
    /// and are strictly decreasing in both coordinates' required senses.
    explicit EtaFunction(std::vector<std::pair<Rational, Rational>> samples);

    /// eta(g) = 1 - g.
    static EtaFunction linear();

    Rational operator()(const Rational& g) const;

    const std::vector<std::pair<Rational, Rational>>& samples() const { return samples_; }

  private:
    std::vector<std::pair<Rational, Rational>> samples_;
};

enum class DistanceKind { NormalizedHamming, Discrete };

DistanceKind distance_from_name(const std::string& name);
std::string distance_name(DistanceKind kind);

/// d(x,z) in [0,1]. NormalizedHamming: 1 when lengths differ, otherwise the
/// fraction of differing positions (0 for two empty strings). Discrete: [x != z].
Rational string_distance(DistanceKind kind, const std::string& x, const std::string& z);

/// A fuzzy string quantity concentrated around a crisp target: each supported
/// x must satisfy d(target, x) <= eta(s(x)), and the target itself must carry
/// degree exactly 1.
struct FuzzyString {
    std::string universe;  // free-form tag, round-tripped through JSON
    StringFuzzySet quantity;
    std::string target;
    EtaFunction eta = EtaFunction::linear();
    DistanceKind distance = DistanceKind::NormalizedHamming;
};

struct FuzzyStringViolation {
    std::string condition;  // "target-degree" | "ball" | "core"
    std::string witness;
    std::string detail;
};

struct FuzzyStringReport {
    bool ok = true;
    std::vector<FuzzyStringViolation> violations;
};

/// Checks s(target) = 1 and the per-support ball condition. Since eta is
/// decreasing, d(target,x) <= eta(s(x)) at the stored degree is the tightest
/// instance of the cut/ball condition over all thresholds, so the finite
/// check suffices.
FuzzyStringReport validate_fuzzy_string(const FuzzyString& s);

}  // namespace fuzzcomp
