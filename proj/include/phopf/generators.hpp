#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "phopf/error.hpp"

namespace phopf {

// Exponent sequence of a monomial, one entry per generator. Negative entries
// are legal only on invertible generators.
using Exponents = std::vector<int32_t>;

inline int64_t abs_degree(const Exponents& e, const std::vector<int>& weights) {
    int64_t d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += int64_t(e[i] < 0 ? -e[i] : e[i]) * weights[i];
    return d;
}

// Canonical monomial order: total |degree| first, then lexicographic by
// generator index. Fixed at ring construction; all normal forms use it.
struct MonomialLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int64_t da = 0, db = 0;
        for (auto v : a) da += v < 0 ? -v : v;
        for (auto v : b) db += v < 0 ? -v : v;
        if (da != db) return da < db;
        return a < b;
    }
};

class GeneratorSet;
using RingPtr = std::shared_ptr<const GeneratorSet>;

// A rewrite rule identifying one monomial with a lower-order polynomial,
// e.g. x11*x22 -> x12*x21 + 1. Right-hand sides are stored as raw term maps
// to avoid a dependency cycle with the polynomial type.
struct RelationRule {
    Exponents lead;                        // all entries >= 0
    std::vector<std::pair<Exponents, long long>> rhs_int;  // used by parser/catalog only
};

class GeneratorSet : public std::enable_shared_from_this<GeneratorSet> {
public:
    GeneratorSet(std::vector<std::string> names, std::vector<bool> invertible,
                 std::vector<int> grading = {}, long long characteristic = 0,
                 std::vector<RelationRule> relations = {})
        : names_(std::move(names)), invertible_(std::move(invertible)),
          grading_(std::move(grading)), char_p_(characteristic) {
        if (invertible_.size() != names_.size()) throw Error("generator flags do not match names");
        if (grading_.empty()) grading_.assign(names_.size(), 1);
        if (grading_.size() != names_.size()) throw Error("grading does not match generator count");
        for (int g : grading_)
            if (g <= 0) throw Error("generator degrees must be positive");
        for (size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw Error("empty generator name");
            if (index_.count(names_[i])) throw Error("duplicate generator name: " + names_[i]);
            index_[names_[i]] = int(i);
        }
        for (auto& r : relations) add_relation(std::move(r));
    }

    size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(i); }
    bool invertible(int i) const { return invertible_.at(i); }
    int degree_of(int i) const { return grading_.at(i); }
    const std::vector<int>& grading() const { return grading_; }
    long long characteristic() const { return char_p_; }

    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw Error("unknown generator: " + name);
        return it->second;
    }
    bool has(const std::string& name) const { return index_.count(name) != 0; }

    bool any_invertible() const {
        for (bool b : invertible_)
            if (b) return true;
        return false;
    }

private:
    // Quotient relations. Leading monomials must involve only non-invertible
    // generators, be pairwise coprime and strictly dominate every right-hand
    // side monomial; under those restrictions reduction is confluent without
    // any completion step.
    void add_relation(RelationRule rule) {
        if (rule.lead.size() != size()) throw Error("relation arity mismatch");
        bool nontrivial = false;
        for (size_t i = 0; i < rule.lead.size(); ++i) {
            if (rule.lead[i] < 0) throw Error("relation leading monomial must have non-negative exponents");
            if (rule.lead[i] > 0) {
                nontrivial = true;
                if (invertible_[i]) throw Error("relation on an invertible generator");
            }
        }
        if (!nontrivial) throw Error("relation leading monomial is constant");
        MonomialLess less;
        for (auto& [mono, c] : rule.rhs_int) {
            (void)c;
            if (!less(mono, rule.lead)) throw Error("relation right-hand side must be lower order");
        }
        for (const auto& other : relations_) {
            for (size_t i = 0; i < size(); ++i)
                if (other.lead[i] > 0 && rule.lead[i] > 0)
                    throw Error("relation leading monomials must be pairwise coprime");
        }
        relations_.push_back(std::move(rule));
    }

public:
    const std::vector<RelationRule>& relations() const { return relations_; }
    bool has_relations() const { return !relations_.empty(); }

    Exponents zero_exponents() const { return Exponents(size(), 0); }

    Exponents unit_exponents(int i, int32_t power = 1) const {
        Exponents e(size(), 0);
        e.at(i) = power;
        return e;
    }

    bool structurally_equal(const GeneratorSet& o) const {
        return names_ == o.names_ && invertible_ == o.invertible_ && grading_ == o.grading_ &&
               char_p_ == o.char_p_ && relations_size_key() == o.relations_size_key();
    }

private:
    std::vector<std::pair<Exponents, std::vector<std::pair<Exponents, long long>>>> relations_size_key() const {
        std::vector<std::pair<Exponents, std::vector<std::pair<Exponents, long long>>>> k;
        for (const auto& r : relations_) k.emplace_back(r.lead, r.rhs_int);
        return k;
    }

    std::vector<std::string> names_;
    std::vector<bool> invertible_;
    std::vector<int> grading_;
    long long char_p_ = 0;
    std::map<std::string, int> index_;
    std::vector<RelationRule> relations_;
};

inline RingPtr make_ring(std::vector<std::string> names, std::vector<bool> invertible,
                         std::vector<int> grading = {}, long long characteristic = 0,
                         std::vector<RelationRule> relations = {}) {
    return std::make_shared<GeneratorSet>(std::move(names), std::move(invertible),
                                          std::move(grading), characteristic,
                                          std::move(relations));
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() != b.get()) throw Error("mismatched generator sets");
}

}  // namespace phopf
