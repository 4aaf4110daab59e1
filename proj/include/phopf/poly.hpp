#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "phopf/generators.hpp"
#include "phopf/rational.hpp"

namespace phopf {

// Multivariate polynomial with exact coefficients, allowing negative
// exponents on generators flagged invertible. Always kept canonical: no zero
// coefficients, terms ordered by the ring's monomial order, quotient
// relations fully reduced.
template <class K>
class BasicPoly {
public:
    using Key = Exponents;
    using KeyLess = MonomialLess;
    using Coefficient = K;
    using Context = RingPtr;
    using TermMap = std::map<Exponents, K, MonomialLess>;

    BasicPoly() = default;
    explicit BasicPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static BasicPoly zero(RingPtr ring) { return BasicPoly(std::move(ring)); }

    static BasicPoly constant(RingPtr ring, const K& c) {
        BasicPoly p(ring);
        p.add_term(ring->zero_exponents(), c);
        p.reduce();
        return p;
    }

    static BasicPoly constant_int(RingPtr ring, long long n) {
        return constant(ring, FieldOps<K>::make(ring->characteristic(), n));
    }

    static BasicPoly one(RingPtr ring) { return constant_int(std::move(ring), 1); }

    static BasicPoly monomial(RingPtr ring, const Exponents& e, const K& c) {
        check_exponents(*ring, e);
        BasicPoly p(ring);
        p.add_term(e, c);
        p.reduce();
        return p;
    }

    static BasicPoly generator(RingPtr ring, int i, int32_t power = 1) {
        return monomial(ring, ring->unit_exponents(i, power),
                        FieldOps<K>::make(ring->characteristic(), 1));
    }

    // AlgebraLike interface used by Tensor: basis monomials multiply into a
    // (possibly multi-term, after relation reduction) element.
    static BasicPoly key_mul(const Context& ring, const Key& a, const Key& b) {
        Exponents e(a);
        for (size_t i = 0; i < e.size(); ++i) e[i] += b[i];
        return monomial(ring, e, FieldOps<K>::make(ring->characteristic(), 1));
    }

    static BasicPoly from_key(const Context& ring, const Key& k, const K& c) {
        BasicPoly p(ring);
        p.add_term(k, c);
        p.reduce();
        return p;
    }

    static Key unit_key(const Context& ring) { return ring->zero_exponents(); }

    static long long characteristic(const Context& ring) { return ring->characteristic(); }

    static std::string key_str(const Context& ring, const Key& e) {
        std::ostringstream os;
        bool any = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any) os << "*";
            os << ring->name(int(i));
            if (e[i] != 1) os << "^" << e[i];
            any = true;
        }
        if (!any) return "1";
        return os.str();
    }

    const RingPtr& context() const { return ring_; }
    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    // k-linear view; for polynomials it coincides with terms().
    const TermMap& kterms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        for (auto v : terms_.begin()->first)
            if (v != 0) return false;
        return true;
    }

    K constant_term() const {
        auto it = terms_.find(ring_->zero_exponents());
        if (it == terms_.end()) return FieldOps<K>::make(ring_->characteristic(), 0);
        return it->second;
    }

    bool is_one() const {
        return terms_.size() == 1 && is_constant() &&
               terms_.begin()->second == FieldOps<K>::make(ring_->characteristic(), 1);
    }

    // Single term whose generators are all invertible: such monomials are the
    // units we ever need to invert (group-likes and their antipodes).
    bool is_unit_monomial() const {
        if (terms_.size() != 1) return false;
        const Exponents& e = terms_.begin()->first;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0 && !ring_->invertible(int(i))) return false;
        return true;
    }

    BasicPoly monomial_inverse() const {
        if (!is_unit_monomial()) throw Error("element is not an invertible monomial");
        const auto& [e, c] = *terms_.begin();
        Exponents inv(e);
        for (auto& v : inv) v = -v;
        K one = FieldOps<K>::make(ring_->characteristic(), 1);
        return monomial(ring_, inv, one / c);
    }

    friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) {
        require_same_ring(a.ring_, b.ring_);
        BasicPoly r(a);
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        r.reduce();
        return r;
    }

    friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) {
        require_same_ring(a.ring_, b.ring_);
        BasicPoly r(a);
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        r.reduce();
        return r;
    }

    BasicPoly operator-() const {
        BasicPoly r(ring_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        require_same_ring(a.ring_, b.ring_);
        BasicPoly r(a.ring_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        r.reduce();
        return r;
    }

    BasicPoly& operator+=(const BasicPoly& o) { return *this = *this + o; }
    BasicPoly& operator-=(const BasicPoly& o) { return *this = *this - o; }
    BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

    BasicPoly scaled(const K& c) const {
        BasicPoly r(ring_);
        if (phopf::is_zero(c)) return r;
        for (const auto& [e, k] : terms_) r.add_term(e, k * c);
        r.reduce();
        return r;
    }

    BasicPoly scaled_int(long long n) const {
        return scaled(FieldOps<K>::make(ring_->characteristic(), n));
    }

    BasicPoly pow(int n) const {
        if (n == 0) return one(ring_);
        if (n < 0) return monomial_inverse().pow(-n);
        BasicPoly r = *this;
        for (int i = 1; i < n; ++i) r = r * *this;
        return r;
    }

    // Formal partial derivative; on Laurent monomials d(g^n)/dg = n g^{n-1}
    // for every integer n.
    BasicPoly derivative(int i) const {
        BasicPoly r(ring_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents d(e);
            d[i] -= 1;
            r.add_term(d, c * FieldOps<K>::make(ring_->characteristic(), e[i]));
        }
        r.reduce();
        return r;
    }

    // Substitute a field value for every generator. Negative exponents
    // require the substituted value to be nonzero.
    K eval(const std::vector<K>& values) const {
        if (values.size() != ring_->size()) throw Error("evaluation point arity mismatch");
        K acc = FieldOps<K>::make(ring_->characteristic(), 0);
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                K base = values[i];
                int32_t n = e[i];
                if (n < 0) {
                    if (phopf::is_zero(base)) throw Error("negative power of zero in evaluation");
                    base = FieldOps<K>::make(ring_->characteristic(), 1) / base;
                    n = -n;
                }
                for (int32_t k = 0; k < n; ++k) t = t * base;
            }
            acc = acc + t;
        }
        return acc;
    }

    // Weighted total degree, counting |exponent| on invertible generators.
    int64_t weighted_degree() const {
        int64_t d = 0;
        for (const auto& [e, c] : terms_) {
            (void)c;
            int64_t t = abs_degree(e, ring_->grading());
            if (t > d) d = t;
        }
        return d;
    }

    bool homogeneous(int64_t* degree_out = nullptr) const {
        bool first = true;
        int64_t d = 0;
        for (const auto& [e, c] : terms_) {
            (void)c;
            int64_t t = abs_degree(e, ring_->grading());
            if (first) {
                d = t;
                first = false;
            } else if (t != d) {
                return false;
            }
        }
        if (degree_out) *degree_out = d;
        return true;
    }

    friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
        return a.ring_.get() == b.ring_.get() && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }
    friend bool operator<(const BasicPoly& a, const BasicPoly& b) {
        return std::lexicographical_compare(
            a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
            [](const auto& x, const auto& y) {
                MonomialLess less;
                if (less(x.first, y.first)) return true;
                if (less(y.first, x.first)) return false;
                return x.second < y.second;
            });
    }

    std::string monomial_string(const Exponents& e) const { return key_str(ring_, e); }

    // Terms printed highest order first: "x^2 - 1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string cs = phopf::to_string(it->second);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            std::string ms = monomial_string(it->first);
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            if (ms == "1") {
                os << cs;
            } else if (cs == "1") {
                os << ms;
            } else {
                os << cs << "*" << ms;
            }
        }
        return os.str();
    }

private:
    static void check_exponents(const GeneratorSet& ring, const Exponents& e) {
        if (e.size() != ring.size()) throw Error("exponent arity mismatch");
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0 && !ring.invertible(int(i)))
                throw Error("negative power of non-invertible generator " + ring.name(int(i)));
    }

    void add_term(const Exponents& e, const K& c) {
        if (phopf::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (phopf::is_zero(it->second)) terms_.erase(it);
        }
    }

    // Apply quotient relations until no term is divisible by a leading
    // monomial. Relation sets accepted by GeneratorSet are confluent.
    void reduce() {
        if (!ring_ || !ring_->has_relations()) return;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& rule : ring_->relations()) {
                for (auto it = terms_.begin(); it != terms_.end(); ++it) {
                    if (!divisible(it->first, rule.lead)) continue;
                    Exponents quot(it->first);
                    for (size_t i = 0; i < quot.size(); ++i) quot[i] -= rule.lead[i];
                    K c = it->second;
                    terms_.erase(it);
                    for (const auto& [rm, rc] : rule.rhs_int) {
                        Exponents e(quot);
                        for (size_t i = 0; i < e.size(); ++i) e[i] += rm[i];
                        add_term(e, c * FieldOps<K>::make(ring_->characteristic(), rc));
                    }
                    changed = true;
                    break;
                }
                if (changed) break;
            }
        }
    }

    static bool divisible(const Exponents& e, const Exponents& lead) {
        for (size_t i = 0; i < e.size(); ++i)
            if (lead[i] > 0 && e[i] < lead[i]) return false;
        return true;
    }

    RingPtr ring_;
    TermMap terms_;
};

using Poly = BasicPoly<Rational>;

}  // namespace phopf
