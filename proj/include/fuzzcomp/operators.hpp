#pragma once

#include "fuzzcomp/degree.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fuzzcomp {

enum class TnormKind { Min, Product, Lukasiewicz };
enum class TconormKind { Max, ProbabilisticSum, BoundedSum };

TnormKind tnorm_from_name(const std::string& name);
TconormKind tconorm_from_name(const std::string& name);
std::string tnorm_name(TnormKind t);
std::string tconorm_name(TconormKind t);

Degree apply_tnorm(TnormKind t, const Degree& a, const Degree& b);
Degree apply_tconorm(TconormKind t, const Degree& a, const Degree& b);

using BinaryOp = std::function<Degree(const Degree&, const Degree&)>;
using ListOp = std::function<Degree(std::span<const Degree>)>;

/// Deterministic left-fold over a canonically ordered family. Throws
/// EmptyAggregationError on an empty list; mu2/mu3 are built on this,
/// xi handles the empty case itself.
Degree fold_aggregate(const BinaryOp& op, std::span<const Degree> values);

/// The four auxiliary operators steering a fuzzy machine or circuit:
/// mu1 combines a configuration degree with a transition degree, mu2 merges
/// contributions to one successor, mu3 accumulates a configuration's history,
/// xi collapses final degrees into an output degree.
struct SafeTuple {
    std::string name;
    BinaryOp mu1;
    ListOp mu2;
    ListOp mu3;
    ListOp xi;  // xi({}) must be 0
};

/// mu1 = tnorm, mu2 = mu3 = fold of tconorm, xi = fold of tconorm with
/// xi({}) = 0. The min/max instance is the default throughout the workbench.
SafeTuple standard_tuple(TnormKind tnorm, TconormKind tconorm);

inline SafeTuple standard_min_max_tuple() {
    return standard_tuple(TnormKind::Min, TconormKind::Max);
}

struct SafetyViolation {
    int condition;  // 1..4
    Degree alpha;
    std::size_t list_len;  // 0 for condition 1 and the xi({}) check
    Degree got;
};

struct SafetyReport {
    bool ok = true;
    std::size_t checks = 0;
    std::vector<SafetyViolation> violations;
};

/// Evaluates the four safety conditions on every sampled alpha and every
/// constant list of length <= max_list_len. Reports every violated condition
/// with its witness.
SafetyReport check_safety(const SafeTuple& tuple, std::span<const Degree> sample_degrees,
                          std::size_t max_list_len);

}  // namespace fuzzcomp
