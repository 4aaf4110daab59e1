#pragma once

#include <random>

#include "phopf/poly.hpp"

namespace phopf::testing {

// Deterministic random elements for property tests. Coefficients are small
// integers, exponents respect invertibility and stay inside a window so the
// exact arithmetic stays quick.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    long long integer(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng_);
    }

    Rational rational() {
        long long n = integer(-4, 4);
        long long d = integer(1, 3);
        return Rational(n, d);
    }

    Poly poly(const RingPtr& ring, int max_degree = 2, int max_terms = 3) {
        Poly p = Poly::zero(ring);
        int nterms = int(integer(1, max_terms));
        for (int t = 0; t < nterms; ++t) {
            Exponents e(ring->size(), 0);
            int budget = int(integer(0, max_degree));
            for (int step = 0; step < budget; ++step) {
                int i = int(integer(0, (long long)ring->size() - 1));
                if (ring->invertible(i) && integer(0, 1) == 0)
                    e[i] -= 1;
                else
                    e[i] += 1;
            }
            Rational c = rational();
            if (c.is_zero()) c = 1;
            p += Poly::monomial(ring, e, c);
        }
        return p;
    }

    Poly nonzero_poly(const RingPtr& ring, int max_degree = 2, int max_terms = 3) {
        for (int tries = 0; tries < 10; ++tries) {
            Poly p = poly(ring, max_degree, max_terms);
            if (!p.is_zero()) return p;
        }
        return Poly::one(ring);
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

}  // namespace phopf::testing
