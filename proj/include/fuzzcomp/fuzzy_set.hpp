#pragma once

#include "fuzzcomp/degree.hpp"
#include "fuzzcomp/tolerance.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fuzzcomp {

/// Finite-support fuzzy subset of an ordered universe T. Only strictly
/// positive degrees are stored; iteration order is the canonical order of T,
/// so equal sets are structurally equal and serialize identically.
template <typename T>
class FuzzySet {
  public:
    FuzzySet() = default;

    static FuzzySet singleton(T x, Degree d) {
        FuzzySet s;
        s.assign(std::move(x), std::move(d));
        return s;
    }

    Degree membership(const T& x) const {
        auto it(support_.find(x));
        return it == support_.end() ? Degree::zero() : it->second;
    }

    /// Sets the degree of x, dropping the pair when d == 0.
    void assign(T x, Degree d) {
        if (d.is_zero())
            support_.erase(x);
        else
            support_.insert_or_assign(std::move(x), std::move(d));
    }

    /// Keeps the larger of the stored and offered degree.
    void join_max(const T& x, const Degree& d) {
        if (d.is_zero()) return;
        auto [it, inserted] = support_.emplace(x, d);
        if (!inserted && it->second < d) it->second = d;
    }

    const std::map<T, Degree>& pairs() const { return support_; }
    bool empty() const { return support_.empty(); }
    std::size_t size() const { return support_.size(); }

    std::vector<T> support() const {
        std::vector<T> out;
        out.reserve(support_.size());
        for (const auto& [x, d] : support_) out.push_back(x);
        return out;
    }

    /// Elements with degree exactly 1.
    std::vector<T> core() const {
        std::vector<T> out;
        for (const auto& [x, d] : support_)
            if (d.is_one()) out.push_back(x);
        return out;
    }

    friend bool operator==(const FuzzySet& a, const FuzzySet& b) {
        return a.support_ == b.support_;
    }

  private:
    std::map<T, Degree> support_;
};

using StringFuzzySet = FuzzySet<std::string>;

/// cut_gamma(S) = {x : S(x) >= gamma} for gamma > 0; cut_0 is the support.
template <typename T>
std::vector<T> alpha_cut(const FuzzySet<T>& s, const Degree& gamma) {
    std::vector<T> out;
    for (const auto& [x, d] : s.pairs())
        if (gamma.is_zero() || d >= gamma) out.push_back(x);
    return out;
}

/// The crisp string x viewed as a fuzzy object: degree 1 at x, 0 elsewhere.
inline StringFuzzySet crisp_embed(std::string x) {
    return StringFuzzySet::singleton(std::move(x), Degree::one());
}

/// Two-sided multiplicative closeness F(x)/gamma(|x|) <= G(x) <= gamma(|x|)*F(x),
/// checked over supp(F) u supp(G); elements outside both supports satisfy the
/// condition trivially at 0.
template <typename T>
bool gamma_approximates(const FuzzySet<T>& f, const FuzzySet<T>& g,
                        const ToleranceParameter& gamma,
                        const std::function<std::size_t(const T&)>& length_of,
                        T* witness = nullptr) {
    auto check = [&](const T& x) {
        const Rational fv = f.membership(x).value();
        const Rational gv = g.membership(x).value();
        const Rational gam = gamma.at(length_of(x));
        return fv <= gam * gv && gv <= gam * fv;
    };
    for (const auto& [x, d] : f.pairs()) {
        if (!check(x)) {
            if (witness) *witness = x;
            return false;
        }
    }
    for (const auto& [x, d] : g.pairs()) {
        if (f.membership(x).is_zero() && !check(x)) {
            if (witness) *witness = x;
            return false;
        }
    }
    return true;
}

inline std::size_t string_length(const std::string& s) { return s.size(); }

inline bool gamma_approximates(const StringFuzzySet& f, const StringFuzzySet& g,
                               const ToleranceParameter& gamma, std::string* witness = nullptr) {
    return gamma_approximates<std::string>(f, g, gamma, string_length, witness);
}

}  // namespace fuzzcomp
