/*
   Copyright 2026 The quadcover authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QUADCOVER_RANDOM_HPP
#define QUADCOVER_RANDOM_HPP

#include <cstdint>
#include <random>

#include "quadcover/binforms.hpp"
#include "quadcover/rings.hpp"

namespace quadcover {

/// Deterministic seeded source for property suites and the CLI.
/// Draws go through explicit modular reduction of the raw engine output, so
/// runs reproduce bit-for-bit across platforms (std::mt19937_64 is pinned by
/// the standard; the distribution adapters are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Inclusive range draw.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
};

/// A small random element; size_hint bounds numerators/residue magnitudes.
inline RingElem random_element(Rng& rng, const Ring& r, int size_hint = 9) {
    switch (r.kind()) {
        case RingKind::Rational:
            return make_fraction(r, BigInt(rng.range(-size_hint, size_hint)),
                                 BigInt(rng.range(1, size_hint)));
        case RingKind::Modular: {
            if (r.modulus().fits_int64() && r.modulus().to_int64() <= (1LL << 60))
                return make_int(r, rng.range(0, r.modulus().to_int64() - 1));
            return make_int(r, BigInt(static_cast<std::int64_t>(rng.raw() >> 1)));
        }
        case RingKind::Polynomial: {
            std::vector<std::pair<Monomial, RingElem>> terms;
            const std::size_t nterms = static_cast<std::size_t>(rng.range(1, 3));
            for (std::size_t t = 0; t < nterms; ++t) {
                Monomial m{std::vector<std::uint32_t>(r.var_count(), 0)};
                for (auto& e : m.exp) e = static_cast<std::uint32_t>(rng.range(0, 2));
                terms.emplace_back(std::move(m), random_element(rng, r.base(), size_hint));
            }
            return poly_from_terms(r, std::move(terms));
        }
        case RingKind::Quotient: {
            Ring base = r.base();
            RingElem rep = random_element(rng, base, size_hint);
            return quotient_class(r, rep);
        }
    }
    throw DomainError("bad_ring", "unknown ring kind");
}

inline RingElem random_nonzero(Rng& rng, const Ring& r, int size_hint = 9) {
    for (int tries = 0; tries < 256; ++tries) {
        RingElem e = random_element(rng, r, size_hint);
        if (!e.is_zero()) return e;
    }
    throw DomainError("rng_exhausted", "could not draw a nonzero element");
}

inline RingElem random_unit(Rng& rng, const Ring& r, int size_hint = 9) {
    for (int tries = 0; tries < 512; ++tries) {
        RingElem e = random_element(rng, r, size_hint);
        if (is_unit(e) == Decision::Yes) return e;
    }
    throw DomainError("rng_exhausted", "could not draw a unit");
}

inline BinaryForm random_form(Rng& rng, const Ring& r, int size_hint = 9) {
    return make_form(r, random_element(rng, r, size_hint), random_element(rng, r, size_hint),
                     random_element(rng, r, size_hint));
}

inline Vec2 random_vec(Rng& rng, const Ring& r, int size_hint = 9) {
    return Vec2{random_element(rng, r, size_hint), random_element(rng, r, size_hint)};
}

/// Random trace-zero matrix [[a, b], [c, -a]].
inline Mat2 random_trace_zero(Rng& rng, const Ring& r, int size_hint = 9) {
    RingElem a = random_element(rng, r, size_hint);
    return Mat2{a, random_element(rng, r, size_hint), random_element(rng, r, size_hint), neg(a)};
}

/// Random theta with regular determinant (retries until decidably regular).
inline Mat2 random_regular_matrix(Rng& rng, const Ring& r, int size_hint = 9) {
    for (int tries = 0; tries < 512; ++tries) {
        Mat2 m{random_element(rng, r, size_hint), random_element(rng, r, size_hint),
               random_element(rng, r, size_hint), random_element(rng, r, size_hint)};
        if (is_regular(m.det()) == Decision::Yes) return m;
    }
    throw DomainError("rng_exhausted", "could not draw a regular matrix");
}

}  // namespace quadcover

#endif  // QUADCOVER_RANDOM_HPP
