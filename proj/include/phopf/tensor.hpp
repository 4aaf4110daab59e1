#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "phopf/poly.hpp"

namespace phopf {

inline std::string to_string_generic(const Rational& r) { return to_string(r); }
inline std::string to_string_generic(const Fp& r) { return to_string(r); }

// Formal sum of two-leg tensors over canonical leg bases. Leg types expose
// Key/Coefficient/Context, kterms() (k-linear decomposition), from_key and
// key_mul; Tensor models the same interface, so tensors nest.
template <class L, class R>
class Tensor {
public:
    using LKey = typename L::Key;
    using RKey = typename R::Key;
    using Key = std::pair<LKey, RKey>;
    using Coefficient = typename L::Coefficient;
    using K = Coefficient;
    static_assert(std::is_same_v<K, typename R::Coefficient>, "legs must share coefficients");
    using Context = std::pair<typename L::Context, typename R::Context>;

    struct KeyLess {
        typename L::KeyLess ll;
        typename R::KeyLess rl;
        bool operator()(const Key& a, const Key& b) const {
            if (ll(a.first, b.first)) return true;
            if (ll(b.first, a.first)) return false;
            return rl(a.second, b.second);
        }
    };
    using TermMap = std::map<Key, K, KeyLess>;

    Tensor() = default;
    explicit Tensor(Context ctx) : ctx_(std::move(ctx)), has_ctx_(true) {}
    Tensor(typename L::Context lc, typename R::Context rc)
        : ctx_(std::move(lc), std::move(rc)), has_ctx_(true) {}

    static Tensor zero(Context ctx) { return Tensor(std::move(ctx)); }

    static Tensor from_key(const Context& ctx, const Key& k, const K& c) {
        Tensor t(ctx);
        t.add_term(k, c);
        return t;
    }

    // a (x) b as a single tensor; legs may be arbitrary elements.
    static Tensor of(const L& a, const R& b) {
        Tensor t(Context(a.context(), b.context()));
        for (const auto& [lk, lc] : a.kterms())
            for (const auto& [rk, rc] : b.kterms()) t.add_term({lk, rk}, lc * rc);
        return t;
    }

    static Tensor key_mul(const Context& ctx, const Key& a, const Key& b) {
        L lp = L::key_mul(ctx.first, a.first, b.first);
        R rp = R::key_mul(ctx.second, a.second, b.second);
        return of(lp, rp);
    }

    static long long characteristic(const Context& ctx) { return L::characteristic(ctx.first); }

    const Context& context() const { return ctx_; }
    const typename L::Context& left_context() const { return ctx_.first; }
    const typename R::Context& right_context() const { return ctx_.second; }
    const TermMap& kterms() const { return terms_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const K& c) {
        if (phopf::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (phopf::is_zero(it->second)) terms_.erase(it);
        }
    }

    void add(const Tensor& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
    }

    friend Tensor operator+(const Tensor& a, const Tensor& b) {
        Tensor r(a.has_ctx_ ? a.ctx_ : b.ctx_);
        r.has_ctx_ = a.has_ctx_ || b.has_ctx_;
        r.terms_ = a.terms_;
        r.add(b);
        return r;
    }

    friend Tensor operator-(const Tensor& a, const Tensor& b) {
        Tensor r(a.has_ctx_ ? a.ctx_ : b.ctx_);
        r.has_ctx_ = a.has_ctx_ || b.has_ctx_;
        r.terms_ = a.terms_;
        for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
        return r;
    }

    Tensor operator-() const {
        Tensor r(ctx_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    // Componentwise product (a (x) b)(c (x) d) = ac (x) bd, bilinear.
    friend Tensor operator*(const Tensor& a, const Tensor& b) {
        Tensor r(a.ctx_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                L lp = L::key_mul(a.ctx_.first, ka.first, kb.first);
                R rp = R::key_mul(a.ctx_.second, ka.second, kb.second);
                K c = ca * cb;
                for (const auto& [lk, lc] : lp.kterms())
                    for (const auto& [rk, rc] : rp.kterms()) r.add_term({lk, rk}, c * lc * rc);
            }
        return r;
    }

    Tensor& operator+=(const Tensor& o) { return *this = *this + o; }
    Tensor& operator-=(const Tensor& o) { return *this = *this - o; }
    Tensor& operator*=(const Tensor& o) { return *this = *this * o; }

    Tensor scaled(const K& c) const {
        Tensor r(ctx_);
        for (const auto& [k, v] : terms_) r.add_term(k, v * c);
        return r;
    }

    Tensor scaled_int(long long n) const {
        return scaled(FieldOps<K>::make(characteristic(ctx_), n));
    }

    Tensor pow(int n) const {
        Tensor r = unit();
        for (int i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    Tensor unit() const {
        L lone = L::from_key(ctx_.first, L::unit_key(ctx_.first),
                             FieldOps<K>::make(characteristic(ctx_), 1));
        R rone = R::from_key(ctx_.second, R::unit_key(ctx_.second),
                             FieldOps<K>::make(characteristic(ctx_), 1));
        return of(lone, rone);
    }

    static Key unit_key(const Context& ctx) {
        return {L::unit_key(ctx.first), R::unit_key(ctx.second)};
    }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        KeyLess less;
        for (; ia != a.terms_.end(); ++ia, ++ib) {
            if (less(ia->first, ib->first) || less(ib->first, ia->first)) return false;
            if (!(ia->second == ib->second)) return false;
        }
        return true;
    }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

    static std::string key_str(const Context& ctx, const Key& k) {
        return L::key_str(ctx.first, k.first) + " @ " + R::key_str(ctx.second, k.second);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string cs = phopf::to_string_generic(it->second);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            if (cs != "1") os << cs << "*";
            os << key_str(ctx_, it->first);
        }
        return os.str();
    }

private:
    Context ctx_{};
    bool has_ctx_ = false;
    TermMap terms_;
};

template <class L, class R, class F>
auto map_left(const Tensor<L, R>& t, F&& f)
    -> Tensor<std::decay_t<decltype(f(t.left_context(), typename L::Key{}))>, R> {
    using L2 = std::decay_t<decltype(f(t.left_context(), typename L::Key{}))>;
    Tensor<L2, R> out{};
    bool init = false;
    for (const auto& [k, c] : t.kterms()) {
        L2 img = f(t.left_context(), k.first);
        if (!init) {
            out = Tensor<L2, R>(typename Tensor<L2, R>::Context(img.context(), t.right_context()));
            init = true;
        }
        for (const auto& [ik, ic] : img.kterms()) out.add_term({ik, k.second}, c * ic);
    }
    return out;
}

template <class L, class R, class F>
auto map_right(const Tensor<L, R>& t, F&& f)
    -> Tensor<L, std::decay_t<decltype(f(t.right_context(), typename R::Key{}))>> {
    using R2 = std::decay_t<decltype(f(t.right_context(), typename R::Key{}))>;
    Tensor<L, R2> out{};
    bool init = false;
    for (const auto& [k, c] : t.kterms()) {
        R2 img = f(t.right_context(), k.second);
        if (!init) {
            out = Tensor<L, R2>(typename Tensor<L, R2>::Context(t.left_context(), img.context()));
            init = true;
        }
        for (const auto& [ik, ic] : img.kterms()) out.add_term({k.first, ik}, c * ic);
    }
    return out;
}

template <class L, class R>
Tensor<R, L> flip(const Tensor<L, R>& t) {
    Tensor<R, L> out(typename Tensor<R, L>::Context(t.right_context(), t.left_context()));
    for (const auto& [k, c] : t.kterms()) out.add_term({k.second, k.first}, c);
    return out;
}

// (A (x) (B (x) C)) -> ((A (x) B) (x) C); keys reassociate, values unchanged.
template <class A, class B, class C>
Tensor<Tensor<A, B>, C> assoc_left(const Tensor<A, Tensor<B, C>>& t) {
    using Out = Tensor<Tensor<A, B>, C>;
    typename Tensor<A, B>::Context abctx(t.left_context(), t.right_context().first);
    Out out(typename Out::Context(abctx, t.right_context().second));
    for (const auto& [k, c] : t.kterms())
        out.add_term({{k.first, k.second.first}, k.second.second}, c);
    return out;
}

template <class A, class B, class C>
Tensor<A, Tensor<B, C>> assoc_right(const Tensor<Tensor<A, B>, C>& t) {
    using Out = Tensor<A, Tensor<B, C>>;
    typename Tensor<B, C>::Context bcctx(t.left_context().second, t.right_context());
    Out out(typename Out::Context(t.left_context().first, bcctx));
    for (const auto& [k, c] : t.kterms())
        out.add_term({k.first.first, {k.first.second, k.second}}, c);
    return out;
}

// Multiplication fold m(a (x) b) = a*b for tensors with equal leg types.
template <class L>
L fold_mul(const Tensor<L, L>& t) {
    L acc = L::from_key(t.left_context(), L::unit_key(t.left_context()),
                        FieldOps<typename L::Coefficient>::make(
                            L::characteristic(t.left_context()), 0));
    for (const auto& [k, c] : t.kterms()) {
        L prod = L::key_mul(t.left_context(), k.first, k.second);
        acc += prod.scaled(c);
    }
    return acc;
}

}  // namespace phopf
