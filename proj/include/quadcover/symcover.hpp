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

#ifndef QUADCOVER_SYMCOVER_HPP
#define QUADCOVER_SYMCOVER_HPP

#include <vector>

#include "quadcover/sympoly.hpp"

namespace quadcover {

// ---------------------------------------------------------------------------
// Affine chart of the quotient of n projective lines by the alternating
// group, sitting over the chart of the full symmetric quotient: the
// invariants of the alternating group form a free rank-two module over the
// symmetric functions on the basis {1, V}, with V the Vandermonde product,
// and V^2 is the discriminant of the generic monic polynomial.
// ---------------------------------------------------------------------------

/// V = prod_{i<j} (T_i - T_j) in the given polynomial ring; n >= 2.
inline RingElem vandermonde(const Ring& tring) {
    detail::require_kind(tring, RingKind::Polynomial, "polynomial");
    const std::size_t n = tring.var_count();
    if (n < 2) throw DomainError("bad_index", "vandermonde needs at least two variables");
    RingElem v = one(tring);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            v = mul(v, sub(variable(tring, i), variable(tring, j)));
    return v;
}

namespace detail {

inline int permutation_sign(const std::vector<std::size_t>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

inline std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<std::size_t>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace detail

/// Invariance under the alternating group, exhaustive for n <= 5 (the cap
/// for full-group sweeps), tested on generator words beyond that.
inline bool is_alternating_invariant(const RingElem& p) {
    const std::size_t n = p.ring().var_count();
    if (n <= 5) {
        for (const auto& perm : detail::all_permutations(n)) {
            if (detail::permutation_sign(perm) != 1) continue;
            if (permute_variables(p, perm) != p) return false;
        }
        return true;
    }
    // 3-cycles generate the alternating group; test the standard ones
    for (std::size_t i = 0; i + 2 < n; ++i) {
        std::vector<std::size_t> perm(n);
        for (std::size_t k = 0; k < n; ++k) perm[k] = k;
        perm[i] = i + 1;
        perm[i + 1] = i + 2;
        perm[i + 2] = i;
        if (permute_variables(p, perm) != p) return false;
    }
    return true;
}

struct AlternatingDecomposition {
    Ring s_ring;                    // base[S1..Sn]
    RingElem symmetric_part;        // P+ in S-coordinates
    RingElem vandermonde_cofactor;  // Q with P = P+ + V*Q, in S-coordinates
};

/// Split an alternating-invariant P as P+ + V*Q along the transposition
/// (1 2): P+ = (P + tP)/2 is symmetric, (P - tP)/2 is divisible by V with a
/// symmetric quotient; both parts are returned in elementary symmetric
/// coordinates. A division remainder means the input was not invariant.
inline AlternatingDecomposition alt_decompose(const RingElem& p,
                                              const CancelToken* cancel = nullptr) {
    detail::require_kind(p.ring(), RingKind::Polynomial, "polynomial");
    if (p.ring().var_count() < 2)
        throw DomainError("bad_index", "alternating decomposition needs at least two variables");
    if (!is_alternating_invariant(p))
        throw DomainError("not_alternating", "input is not invariant under even permutations");
    RingElem tp = swap_variables(p, 0, 1);
    RingElem plus = half(add(p, tp));
    RingElem minus = half(sub(p, tp));
    SymmetricReduction sym = symmetric_reduce(plus, "S", cancel);
    RingElem q = minus.is_zero() ? zero(p.ring()) : divide_exact(minus, vandermonde(p.ring()));
    SymmetricReduction cof = symmetric_reduce(q, "S", cancel);
    return AlternatingDecomposition{sym.s_ring, sym.reduced, cof.reduced};
}

/// Discriminant of T^n - S1 T^{n-1} + ... + (-1)^n Sn: the reduction of V^2
/// to elementary symmetric coordinates.
inline SymmetricReduction generic_discriminant(const Ring& base, std::size_t n,
                                               const CancelToken* cancel = nullptr) {
    if (n < 2) throw DomainError("bad_index", "generic discriminant needs n >= 2");
    Ring tring = numbered_poly_ring(base, n, "T");
    RingElem v = vandermonde(tring);
    detail::check_cancel(cancel);
    return symmetric_reduce(mul(v, v), "S", cancel);
}

/// (X1 Y2 - Y1 X2)^2 = (X1 Y2 + Y1 X2)^2 - 4 (X1 X2)(Y1 Y2), expanded in a
/// four-variable polynomial ring.
inline bool p1p1_identity_check() {
    Ring r = Ring::polynomial(Ring::rational(), {"X1", "Y1", "X2", "Y2"});
    RingElem x1 = variable(r, 0), y1 = variable(r, 1), x2 = variable(r, 2), y2 = variable(r, 3);
    RingElem m = sub(mul(x1, y2), mul(y1, x2));
    RingElem pl = add(mul(x1, y2), mul(y1, x2));
    RingElem rhs = sub(mul(pl, pl), mul(make_int(r, 4), mul(mul(x1, x2), mul(y1, y2))));
    return mul(m, m) == rhs;
}

}  // namespace quadcover

#endif  // QUADCOVER_SYMCOVER_HPP
