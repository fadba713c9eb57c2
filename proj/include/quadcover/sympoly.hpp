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

#ifndef QUADCOVER_SYMPOLY_HPP
#define QUADCOVER_SYMPOLY_HPP

#include <atomic>
#include <string>
#include <string_view>
#include <vector>

#include "quadcover/rings.hpp"

namespace quadcover {

/// Cooperative cancellation for the long-running symmetric computations.
struct CancelToken {
    std::atomic<bool> requested{false};

    void cancel() { requested.store(true, std::memory_order_relaxed); }
    bool cancelled() const { return requested.load(std::memory_order_relaxed); }
};

namespace detail {
inline void check_cancel(const CancelToken* token) {
    if (token && token->cancelled()) throw Cancelled();
}
}  // namespace detail

/// base[prefix1..prefixN], e.g. numbered_poly_ring(Q, 3, "T") = Q[T1,T2,T3].
inline Ring numbered_poly_ring(const Ring& base, std::size_t n, std::string_view prefix) {
    std::vector<std::string> vars;
    vars.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) vars.push_back(std::string(prefix) + std::to_string(i));
    return Ring::polynomial(base, std::move(vars));
}

/// k-th elementary symmetric polynomial in all variables of the ring; k=0 is 1.
inline RingElem elem_symmetric(const Ring& poly_ring, std::size_t k) {
    detail::require_kind(poly_ring, RingKind::Polynomial, "polynomial");
    const std::size_t n = poly_ring.var_count();
    if (k > n) throw DomainError("bad_index", "elementary symmetric index out of range");
    if (k == 0) return one(poly_ring);
    // enumerate all k-subsets of the n variables
    std::vector<std::pair<Monomial, RingElem>> terms;
    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;
    while (true) {
        Monomial m{std::vector<std::uint32_t>(n, 0)};
        for (std::size_t i : subset) m.exp[i] = 1;
        terms.emplace_back(std::move(m), one(poly_ring.base()));
        // next combination
        std::size_t i = k;
        while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++subset[i - 1];
        for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return poly_from_terms(poly_ring, std::move(terms));
}

/// Apply the variable permutation i -> perm[i] to a polynomial.
inline RingElem permute_variables(const RingElem& p, const std::vector<std::size_t>& perm) {
    detail::require_kind(p.ring(), RingKind::Polynomial, "polynomial");
    const std::size_t n = p.ring().var_count();
    if (perm.size() != n) throw DomainError("bad_permutation", "permutation arity mismatch");
    std::vector<std::pair<Monomial, RingElem>> terms;
    terms.reserve(p.term_count());
    for (std::size_t i = 0; i < p.term_count(); ++i) {
        Monomial m{std::vector<std::uint32_t>(n, 0)};
        for (std::size_t j = 0; j < n; ++j) m.exp[perm[j]] = p.mono(i).exp[j];
        terms.emplace_back(std::move(m), p.coeff(i));
    }
    return poly_from_terms(p.ring(), std::move(terms));
}

inline RingElem swap_variables(const RingElem& p, std::size_t i, std::size_t j) {
    std::vector<std::size_t> perm(p.ring().var_count());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::swap(perm[i], perm[j]);
    return permute_variables(p, perm);
}

/// Invariance under the full symmetric group, checked on the adjacent
/// transpositions (they generate).
inline bool is_symmetric(const RingElem& p) {
    const std::size_t n = p.ring().var_count();
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (swap_variables(p, i, i + 1) != p) return false;
    return true;
}

/// Embed an element along the natural tower inclusion into target (identity,
/// constant embedding into polynomial rings, class map into quotients).
inline RingElem lift_into(const Ring& target, const RingElem& e) {
    if (e.ring() == target) return e;
    switch (target.kind()) {
        case RingKind::Polynomial:
            return embed_constant(target, lift_into(target.base(), e));
        case RingKind::Quotient:
            return quotient_class(target, lift_into(target.base(), e));
        default:
            throw DomainError("ring_mismatch", "no tower embedding into " + target.description());
    }
}

/// Full evaluation with values in any ring the coefficients embed into.
inline RingElem substitute_into(const RingElem& p, const Ring& target,
                                const std::vector<RingElem>& values) {
    detail::require_kind(p.ring(), RingKind::Polynomial, "polynomial");
    if (values.size() != p.ring().var_count())
        throw DomainError("missing_assignment", "every variable needs a value");
    for (const auto& v : values)
        if (!(v.ring() == target))
            throw DomainError("ring_mismatch", "substitution value not in the target ring");
    RingElem acc = zero(target);
    for (std::size_t i = 0; i < p.term_count(); ++i) {
        RingElem term = lift_into(target, p.coeff(i));
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (p.mono(i).exp[j]) term = mul(term, pow_u(values[j], p.mono(i).exp[j]));
        }
        acc = add(acc, term);
    }
    return acc;
}

/// Full evaluation: every variable gets a value in the base ring.
inline RingElem substitute(const RingElem& p, const std::vector<RingElem>& values) {
    detail::require_kind(p.ring(), RingKind::Polynomial, "polynomial");
    return substitute_into(p, p.ring().base(), values);
}

/// Substitute by variable name map; every variable of p must be covered.
inline RingElem substitute(const RingElem& p,
                           const std::vector<std::pair<std::string, RingElem>>& assignment) {
    const auto& vars = p.ring().vars();
    std::vector<RingElem> values;
    values.reserve(vars.size());
    for (const auto& v : vars) {
        const RingElem* found = nullptr;
        for (const auto& [name, val] : assignment)
            if (name == v) found = &val;
        if (!found) throw DomainError("missing_assignment", "no value for variable '" + v + "'");
        values.push_back(*found);
    }
    return substitute(p, values);
}

/// Exact single-divisor division in lex order. Throws DomainError if the
/// division leaves a remainder or a leading coefficient is not invertible.
inline RingElem divide_exact(const RingElem& p, const RingElem& d) {
    detail::require_same_ring(p, d, "divide_exact");
    if (d.is_zero()) throw DomainError("division_by_zero", "exact division by zero");
    if (is_unit(d.coeff(0)) != Decision::Yes)
        throw DomainError("not_a_unit", "divisor leading coefficient is not invertible");
    const Ring& r = p.ring();
    RingElem lc_inv = inv(d.coeff(0));
    RingElem rem = p;
    std::vector<std::pair<Monomial, RingElem>> qterms;
    while (!rem.is_zero()) {
        const Monomial& lm = rem.mono(0);
        if (!d.mono(0).divides(lm))
            throw DomainError("not_divisible", "exact division has a remainder");
        Monomial qm = lm / d.mono(0);
        RingElem qc = mul(rem.coeff(0), lc_inv);
        rem = sub(rem, mul(poly_from_terms(r, {{qm, qc}}), d));
        qterms.emplace_back(std::move(qm), std::move(qc));
    }
    return poly_from_terms(r, std::move(qterms));
}

struct SymmetricReduction {
    Ring s_ring;      // base[S1..Sn]
    RingElem reduced; // Q with Q(e1..en) = P
};

/// Rewrite a symmetric polynomial in the elementary symmetric polynomials by
/// the classical lex leading-term descent. Deterministic; throws DomainError
/// if the input is not symmetric.
inline SymmetricReduction symmetric_reduce(const RingElem& p, std::string_view out_prefix = "S",
                                           const CancelToken* cancel = nullptr) {
    detail::require_kind(p.ring(), RingKind::Polynomial, "polynomial");
    if (!is_symmetric(p))
        throw DomainError("not_symmetric", "symmetric_reduce needs a symmetric input");
    const Ring& tring = p.ring();
    const std::size_t n = tring.var_count();
    Ring sring = numbered_poly_ring(tring.base(), n, out_prefix);

    std::vector<RingElem> elementary;
    elementary.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) elementary.push_back(elem_symmetric(tring, k));

    RingElem rem = p;
    RingElem out = zero(sring);
    while (!rem.is_zero()) {
        detail::check_cancel(cancel);
        const Monomial& lm = rem.mono(0);
        const RingElem& lc = rem.coeff(0);
        // symmetric input keeps the leading exponents non-increasing
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (lm.exp[i] < lm.exp[i + 1])
                throw DomainError("not_symmetric", "leading term is not dominant");
        Monomial sm{std::vector<std::uint32_t>(n, 0)};
        RingElem subtract = embed_constant(tring, lc);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t e = lm.exp[i] - (i + 1 < n ? lm.exp[i + 1] : 0);
            sm.exp[i] = e;
            if (e) subtract = mul(subtract, pow_u(elementary[i], e));
        }
        out = add(out, poly_from_terms(sring, {{std::move(sm), lc}}));
        rem = sub(rem, subtract);
    }
    return SymmetricReduction{std::move(sring), std::move(out)};
}

}  // namespace quadcover

#endif  // QUADCOVER_SYMPOLY_HPP
