#include "fuzzcomp/operators.hpp"

#include "fuzzcomp/errors.hpp"

namespace fuzzcomp {

TnormKind tnorm_from_name(const std::string& name) {
    if (name == "min") return TnormKind::Min;
    if (name == "product") return TnormKind::Product;
    if (name == "lukasiewicz") return TnormKind::Lukasiewicz;
    throw SchemaError("unknown t-norm \"" + name + "\"");
}

TconormKind tconorm_from_name(const std::string& name) {
    if (name == "max") return TconormKind::Max;
    if (name == "probabilistic-sum") return TconormKind::ProbabilisticSum;
    if (name == "bounded-sum") return TconormKind::BoundedSum;
    throw SchemaError("unknown t-conorm \"" + name + "\"");
}

std::string tnorm_name(TnormKind t) {
    switch (t) {
        case TnormKind::Min: return "min";
        case TnormKind::Product: return "product";
        case TnormKind::Lukasiewicz: return "lukasiewicz";
    }
    return "?";
}

std::string tconorm_name(TconormKind t) {
    switch (t) {
        case TconormKind::Max: return "max";
        case TconormKind::ProbabilisticSum: return "probabilistic-sum";
        case TconormKind::BoundedSum: return "bounded-sum";
    }
    return "?";
}

Degree apply_tnorm(TnormKind t, const Degree& a, const Degree& b) {
    switch (t) {
        case TnormKind::Min: return dmin(a, b);
        case TnormKind::Product: return dmul(a, b);
        case TnormKind::Lukasiewicz: return dluk(a, b);
    }
    return Degree::zero();
}

Degree apply_tconorm(TconormKind t, const Degree& a, const Degree& b) {
    switch (t) {
        case TconormKind::Max: return dmax(a, b);
        case TconormKind::ProbabilisticSum: return dprobsum(a, b);
        case TconormKind::BoundedSum: return dboundedsum(a, b);
    }
    return Degree::zero();
}

Degree fold_aggregate(const BinaryOp& op, std::span<const Degree> values) {
    if (values.empty()) throw EmptyAggregationError();
    Degree acc = values[0];
    for (std::size_t i = 1; i < values.size(); ++i) acc = op(acc, values[i]);
    return acc;
}

SafeTuple standard_tuple(TnormKind tnorm, TconormKind tconorm) {
    SafeTuple t;
    t.name = "standard(" + tnorm_name(tnorm) + "," + tconorm_name(tconorm) + ")";
    t.mu1 = [tnorm](const Degree& a, const Degree& b) { return apply_tnorm(tnorm, a, b); };
    BinaryOp join = [tconorm](const Degree& a, const Degree& b) {
        return apply_tconorm(tconorm, a, b);
    };
    t.mu2 = [join](std::span<const Degree> v) { return fold_aggregate(join, v); };
    t.mu3 = t.mu2;
    t.xi = [join](std::span<const Degree> v) {
        return v.empty() ? Degree::zero() : fold_aggregate(join, v);
    };
    return t;
}

SafetyReport check_safety(const SafeTuple& tuple, std::span<const Degree> sample_degrees,
                          std::size_t max_list_len) {
    SafetyReport report;
    auto flag = [&](int cond, const Degree& alpha, std::size_t len, const Degree& got) {
        report.ok = false;
        report.violations.push_back({cond, alpha, len, got});
    };

    // Condition (4), empty part: xi({}) = 0, independent of any alpha.
    ++report.checks;
    if (Degree got = tuple.xi({}); !got.is_zero()) flag(4, Degree::zero(), 0, got);

    std::vector<Degree> list;
    for (const Degree& alpha : sample_degrees) {
        ++report.checks;
        if (Degree got = tuple.mu1(alpha, alpha); got != alpha) flag(1, alpha, 0, got);
        list.clear();
        for (std::size_t len = 1; len <= max_list_len; ++len) {
            list.push_back(alpha);
            ++report.checks;
            if (Degree got = tuple.mu2(list); got != alpha) flag(2, alpha, len, got);
            ++report.checks;
            if (Degree got = tuple.mu3(list); got != alpha) flag(3, alpha, len, got);
            ++report.checks;
            if (Degree got = tuple.xi(list); got != alpha) flag(4, alpha, len, got);
        }
    }
    return report;
}

}  // namespace fuzzcomp
