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

#ifndef QUADCOVER_RINGS_HPP
#define QUADCOVER_RINGS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "quadcover/bigint.hpp"
#include "quadcover/errors.hpp"

namespace quadcover {

// ---------------------------------------------------------------------------
// Ring tower: rationals, Z/m (m odd, so 2 is invertible), sparse multivariate
// polynomials over any ring of the tower, and univariate quotients by a monic
// modulus. Every element is kept in canonical form, so structural equality is
// semantic equality, and all values are immutable after construction.
// ---------------------------------------------------------------------------

enum class RingKind { Rational, Modular, Polynomial, Quotient };

class RingElem;

/// Exponent vector of one monomial, aligned with the ring's variable list.
/// The order is lexicographic with earlier variables dominating.
struct Monomial {
    std::vector<std::uint32_t> exp;

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto e : exp) d += e;
        return d;
    }

    bool is_constant() const {
        for (auto e : exp)
            if (e) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }

    /// Lex comparison: a > b when a has the larger exponent at the first
    /// variable where they differ.
    static int compare(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exp.size(); ++i) {
            if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
        }
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += b.exp[i];
        return r;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > other.exp[i]) return false;
        return true;
    }

    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] -= b.exp[i];
        return r;
    }
};

struct MonomialLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) > 0;
    }
};

/// Immutable ring descriptor (shared, structural equality).
class Ring {
public:
    struct Node {
        RingKind kind;
        BigInt modulus;                       // Modular
        std::shared_ptr<const Node> base;     // Polynomial / Quotient
        std::vector<std::string> vars;        // Polynomial
        std::vector<RingElem> quot_modulus;   // Quotient: dense monic, coeffs in scalar ring
    };

    static Ring rational();
    static Ring modular(BigInt m);
    static Ring polynomial(const Ring& base, std::vector<std::string> vars);
    /// base must be a one-variable polynomial ring; modulus a monic element
    /// of it with degree >= 1.
    static Ring quotient(const Ring& base, const RingElem& modulus);

    RingKind kind() const { return node_->kind; }
    const BigInt& modulus() const { return node_->modulus; }
    Ring base() const { return Ring(node_->base); }
    const std::vector<std::string>& vars() const { return node_->vars; }
    std::size_t var_count() const { return node_->vars.size(); }
    /// Quotient modulus as dense coefficients over the scalar ring,
    /// least degree first; back() is one.
    const std::vector<RingElem>& quotient_modulus() const { return node_->quot_modulus; }
    std::size_t quotient_degree() const { return node_->quot_modulus.size() - 1; }
    /// Coefficient ring of a quotient: the base of its polynomial ring.
    Ring scalar_ring() const { return Ring(node_->base->base); }

    std::size_t var_index(std::string_view name) const {
        for (std::size_t i = 0; i < node_->vars.size(); ++i)
            if (node_->vars[i] == name) return i;
        throw DomainError("unknown_variable", "no variable named '" + std::string(name) + "'");
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.node_ == b.node_ || node_equal(*a.node_, *b.node_);
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

    /// Whether this ring is known to be an integral domain.
    Decision integral() const;
    /// Whether this ring is known to be a field.
    Decision field() const;

    std::string description() const;

private:
    explicit Ring(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static bool node_equal(const Node& a, const Node& b);

    std::shared_ptr<const Node> node_;
};

struct RationalPayload {
    BigInt num;
    BigInt den;  // > 0, coprime with num; zero is 0/1
};

struct PolyPayload {
    std::vector<Monomial> monos;   // lex-descending, no duplicates
    std::vector<RingElem> coeffs;  // parallel to monos, all nonzero
};

struct QuotPayload {
    std::vector<RingElem> coeffs;  // dense over scalar ring, trimmed, deg < deg(modulus)
};

/// One value of one ring in the tower. Canonical by construction.
class RingElem {
public:
    const Ring& ring() const { return ring_; }
    RingKind kind() const { return ring_.kind(); }

    const RationalPayload& rat() const { return std::get<RationalPayload>(v_); }
    const BigInt& residue() const { return std::get<BigInt>(v_); }
    const PolyPayload& poly() const { return std::get<PolyPayload>(v_); }
    const QuotPayload& quot() const { return std::get<QuotPayload>(v_); }

    std::size_t term_count() const { return poly().monos.size(); }
    const Monomial& mono(std::size_t i) const { return poly().monos[i]; }
    const RingElem& coeff(std::size_t i) const { return poly().coeffs[i]; }

    bool is_zero() const {
        switch (kind()) {
            case RingKind::Rational: return rat().num.is_zero();
            case RingKind::Modular: return residue().is_zero();
            case RingKind::Polynomial: return poly().monos.empty();
            case RingKind::Quotient: return quot().coeffs.empty();
        }
        return false;
    }

    friend bool operator==(const RingElem& a, const RingElem& b) {
        if (!(a.ring_ == b.ring_)) return false;
        if (a.v_.index() != b.v_.index()) return false;
        switch (a.kind()) {
            case RingKind::Rational:
                return a.rat().num == b.rat().num && a.rat().den == b.rat().den;
            case RingKind::Modular:
                return a.residue() == b.residue();
            case RingKind::Polynomial:
                return a.poly().monos == b.poly().monos && a.poly().coeffs == b.poly().coeffs;
            case RingKind::Quotient:
                return a.quot().coeffs == b.quot().coeffs;
        }
        return false;
    }
    friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

    // construction goes through the free factory functions below
    RingElem(Ring r, RationalPayload p) : ring_(std::move(r)), v_(std::move(p)) {}
    RingElem(Ring r, BigInt p) : ring_(std::move(r)), v_(std::move(p)) {}
    RingElem(Ring r, PolyPayload p) : ring_(std::move(r)), v_(std::move(p)) {}
    RingElem(Ring r, QuotPayload p) : ring_(std::move(r)), v_(std::move(p)) {}

private:
    Ring ring_;
    std::variant<RationalPayload, BigInt, PolyPayload, QuotPayload> v_;
};

// --- factories -------------------------------------------------------------

RingElem zero(const Ring& r);
RingElem one(const Ring& r);
RingElem make_int(const Ring& r, const BigInt& v);
inline RingElem make_int(const Ring& r, std::int64_t v) { return make_int(r, BigInt(v)); }
RingElem make_fraction(const Ring& r, BigInt num, BigInt den);
/// The i-th variable of a polynomial ring.
RingElem variable(const Ring& r, std::size_t index);
inline RingElem variable(const Ring& r, std::string_view name) {
    return variable(r, r.var_index(name));
}
/// Embed an element of the base ring as a constant polynomial.
RingElem embed_constant(const Ring& poly_ring, const RingElem& base_value);
/// Build a polynomial from (monomial, coefficient) pairs in any order.
RingElem poly_from_terms(const Ring& poly_ring,
                         std::vector<std::pair<Monomial, RingElem>> terms);
/// Class of a base-polynomial-ring element in the quotient.
RingElem quotient_class(const Ring& quot_ring, const RingElem& rep);

// --- arithmetic ------------------------------------------------------------

RingElem add(const RingElem& a, const RingElem& b);
RingElem sub(const RingElem& a, const RingElem& b);
RingElem mul(const RingElem& a, const RingElem& b);
RingElem neg(const RingElem& a);
/// The unique y with 2y = x; total because 2 is a unit in every ring here.
RingElem half(const RingElem& a);
RingElem pow_u(const RingElem& a, std::uint64_t e);

inline RingElem operator+(const RingElem& a, const RingElem& b) { return add(a, b); }
inline RingElem operator-(const RingElem& a, const RingElem& b) { return sub(a, b); }
inline RingElem operator*(const RingElem& a, const RingElem& b) { return mul(a, b); }
inline RingElem operator-(const RingElem& a) { return neg(a); }
inline RingElem operator*(std::int64_t k, const RingElem& a) {
    return mul(make_int(a.ring(), k), a);
}

Decision is_unit(const RingElem& a);
/// Throws DomainError unless is_unit(a) == Yes.
RingElem inv(const RingElem& a);
/// Nonzerodivisor test; Undecided where the menu gives no procedure.
Decision is_regular(const RingElem& a);
/// Square detection: decidable over Q and over Z/m with m <= 10^6
/// (exhaustive); constants recurse; otherwise Undecided.
std::pair<Decision, std::optional<RingElem>> square_root(const RingElem& a);

std::string to_string(const RingElem& a);

// ===========================================================================
// implementation
// ===========================================================================

inline bool Ring::node_equal(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case RingKind::Rational: return true;
        case RingKind::Modular: return a.modulus == b.modulus;
        case RingKind::Polynomial:
            return a.vars == b.vars && node_equal(*a.base, *b.base);
        case RingKind::Quotient: {
            if (!node_equal(*a.base, *b.base)) return false;
            if (a.quot_modulus.size() != b.quot_modulus.size()) return false;
            for (std::size_t i = 0; i < a.quot_modulus.size(); ++i)
                if (a.quot_modulus[i] != b.quot_modulus[i]) return false;
            return true;
        }
    }
    return false;
}

inline Ring Ring::rational() {
    static const std::shared_ptr<const Node> node =
        std::make_shared<Node>(Node{RingKind::Rational, BigInt(), nullptr, {}, {}});
    return Ring(node);
}

inline Ring Ring::modular(BigInt m) {
    if (m < BigInt(3) || m.is_even())
        throw DomainError("even_modulus",
                          "modular ring needs an odd modulus >= 3 (2 must be invertible), got " +
                              m.to_string());
    auto node = std::make_shared<Node>(Node{RingKind::Modular, std::move(m), nullptr, {}, {}});
    return Ring(node);
}

inline Ring Ring::polynomial(const Ring& base, std::vector<std::string> vars) {
    if (vars.empty())
        throw DomainError("no_variables", "polynomial ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw DomainError("duplicate_variable", "duplicate variable '" + vars[i] + "'");
    auto node = std::make_shared<Node>(
        Node{RingKind::Polynomial, BigInt(), base.node_, std::move(vars), {}});
    return Ring(node);
}

inline Decision Ring::integral() const {
    switch (kind()) {
        case RingKind::Rational: return Decision::Yes;
        case RingKind::Modular:
            return BigInt::is_probable_prime(modulus()) ? Decision::Yes : Decision::No;
        case RingKind::Polynomial: return base().integral();
        case RingKind::Quotient: return Decision::Undecided;
    }
    return Decision::Undecided;
}

inline Decision Ring::field() const {
    switch (kind()) {
        case RingKind::Rational: return Decision::Yes;
        case RingKind::Modular:
            return BigInt::is_probable_prime(modulus()) ? Decision::Yes : Decision::No;
        case RingKind::Polynomial: return Decision::No;
        case RingKind::Quotient: return Decision::Undecided;
    }
    return Decision::Undecided;
}

namespace detail {

inline void require_same_ring(const RingElem& a, const RingElem& b, const char* where) {
    if (!(a.ring() == b.ring()))
        throw DomainError("ring_mismatch",
                          std::string("operands live in different rings in ") + where);
}

inline void require_kind(const Ring& r, RingKind k, const char* what) {
    if (r.kind() != k)
        throw DomainError("wrong_ring_kind", std::string("expected a ") + what + " ring");
}

// dense univariate helpers over the scalar ring; index = degree, trimmed
inline void upoly_trim(std::vector<RingElem>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline std::vector<RingElem> upoly_add(const std::vector<RingElem>& a,
                                       const std::vector<RingElem>& b) {
    std::vector<RingElem> r;
    const std::size_t n = std::max(a.size(), b.size());
    r.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < a.size() && i < b.size()) r.push_back(add(a[i], b[i]));
        else r.push_back(i < a.size() ? a[i] : b[i]);
    }
    upoly_trim(r);
    return r;
}

inline std::vector<RingElem> upoly_neg(const std::vector<RingElem>& a) {
    std::vector<RingElem> r;
    r.reserve(a.size());
    for (const auto& c : a) r.push_back(neg(c));
    return r;
}

inline std::vector<RingElem> upoly_mul(const std::vector<RingElem>& a,
                                       const std::vector<RingElem>& b, const Ring& k) {
    if (a.empty() || b.empty()) return {};
    std::vector<RingElem> r(a.size() + b.size() - 1, zero(k));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = add(r[i + j], mul(a[i], b[j]));
    upoly_trim(r);
    return r;
}

/// Reduce a modulo a monic modulus (in place semantics via return).
inline std::vector<RingElem> upoly_mod_monic(std::vector<RingElem> a,
                                             const std::vector<RingElem>& m) {
    const std::size_t d = m.size() - 1;
    while (a.size() > d) {
        RingElem lead = a.back();
        std::size_t shift = a.size() - 1 - d;
        if (!lead.is_zero()) {
            for (std::size_t i = 0; i < m.size(); ++i)
                a[shift + i] = sub(a[shift + i], mul(lead, m[i]));
        }
        a.pop_back();
        upoly_trim(a);
        if (a.size() <= d) break;
    }
    upoly_trim(a);
    return a;
}

/// Division with remainder; requires the leading coefficient of b to be a
/// decidable unit. Returns false without touching q/r when it is not.
inline bool upoly_divmod(const std::vector<RingElem>& a, const std::vector<RingElem>& b,
                         const Ring& k, std::vector<RingElem>& q, std::vector<RingElem>& r) {
    if (b.empty()) throw DomainError("division_by_zero", "univariate division by zero");
    if (is_unit(b.back()) != Decision::Yes) return false;
    RingElem lc_inv = inv(b.back());
    r = a;
    upoly_trim(r);
    if (r.size() < b.size()) {
        q.clear();
        return true;
    }
    q.assign(r.size() - b.size() + 1, zero(k));
    while (r.size() >= b.size()) {
        RingElem factor = mul(r.back(), lc_inv);
        std::size_t shift = r.size() - b.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] = sub(r[shift + i], mul(factor, b[i]));
        upoly_trim(r);
        if (r.empty()) break;
    }
    upoly_trim(q);
    return true;
}

/// Extended gcd over a field k: g = s*a + t*b with g monic (or zero).
inline bool upoly_ext_gcd(std::vector<RingElem> a, std::vector<RingElem> b, const Ring& k,
                          std::vector<RingElem>& g, std::vector<RingElem>& s,
                          std::vector<RingElem>& t) {
    std::vector<RingElem> old_r = std::move(a), r = std::move(b);
    upoly_trim(old_r);
    upoly_trim(r);
    std::vector<RingElem> old_s = {one(k)}, ss = {};
    std::vector<RingElem> old_t = {}, tt = {one(k)};
    while (!r.empty()) {
        std::vector<RingElem> q, rem;
        if (!upoly_divmod(old_r, r, k, q, rem)) return false;
        old_r = std::exchange(r, rem);
        std::vector<RingElem> ns = upoly_add(old_s, upoly_neg(upoly_mul(q, ss, k)));
        old_s = std::exchange(ss, ns);
        std::vector<RingElem> nt = upoly_add(old_t, upoly_neg(upoly_mul(q, tt, k)));
        old_t = std::exchange(tt, nt);
    }
    if (!old_r.empty() && is_unit(old_r.back()) == Decision::Yes) {
        RingElem scale = inv(old_r.back());
        for (auto& c : old_r) c = mul(c, scale);
        for (auto& c : old_s) c = mul(c, scale);
        for (auto& c : old_t) c = mul(c, scale);
    }
    g = std::move(old_r);
    s = std::move(old_s);
    t = std::move(old_t);
    return true;
}

inline std::vector<RingElem> poly_to_dense(const RingElem& p) {
    // one-variable polynomial -> dense coefficient vector over the base
    const Ring k = p.ring().base();
    std::vector<RingElem> out;
    for (std::size_t i = 0; i < p.term_count(); ++i) {
        std::size_t d = p.mono(i).exp[0];
        while (out.size() <= d) out.push_back(zero(k));
        out[d] = p.coeff(i);
    }
    upoly_trim(out);
    return out;
}

inline RingElem dense_to_poly(const Ring& poly_ring, const std::vector<RingElem>& coeffs) {
    std::vector<std::pair<Monomial, RingElem>> terms;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d].is_zero()) continue;
        Monomial m{std::vector<std::uint32_t>(1, static_cast<std::uint32_t>(d))};
        terms.emplace_back(std::move(m), coeffs[d]);
    }
    return poly_from_terms(poly_ring, std::move(terms));
}

}  // namespace detail

inline Ring Ring::quotient(const Ring& base, const RingElem& modulus) {
    detail::require_kind(base, RingKind::Polynomial, "one-variable polynomial");
    if (base.var_count() != 1)
        throw DomainError("multivariate_quotient",
                          "quotient base must be a polynomial ring in one variable");
    if (!(modulus.ring() == base))
        throw DomainError("ring_mismatch", "quotient modulus must live in the base ring");
    std::vector<RingElem> dense = detail::poly_to_dense(modulus);
    if (dense.size() < 2)
        throw DomainError("bad_modulus", "quotient modulus must have degree >= 1");
    if (dense.back() != one(base.base()))
        throw DomainError("bad_modulus", "quotient modulus must be monic");
    auto node = std::make_shared<Node>(
        Node{RingKind::Quotient, BigInt(), base.node_, {}, std::move(dense)});
    return Ring(node);
}

inline std::string Ring::description() const {
    switch (kind()) {
        case RingKind::Rational: return "Q";
        case RingKind::Modular: return "Z/" + modulus().to_string();
        case RingKind::Polynomial: {
            std::string s = base().description() + "[";
            for (std::size_t i = 0; i < vars().size(); ++i) {
                if (i) s += ",";
                s += vars()[i];
            }
            return s + "]";
        }
        case RingKind::Quotient: {
            Ring b = base();
            return b.description() + "/(" +
                   to_string(detail::dense_to_poly(b, quotient_modulus())) + ")";
        }
    }
    return "?";
}

// --- factories -------------------------------------------------------------

inline RingElem make_fraction(const Ring& r, BigInt num, BigInt den) {
    detail::require_kind(r, RingKind::Rational, "rational");
    if (den.is_zero()) throw DomainError("zero_denominator", "fraction with zero denominator");
    if (den.is_negative()) {
        num = -num;
        den = -den;
    }
    if (num.is_zero()) return RingElem(r, RationalPayload{BigInt(0), BigInt(1)});
    BigInt g = BigInt::gcd(num, den);
    return RingElem(r, RationalPayload{num / g, den / g});
}

inline RingElem make_int(const Ring& r, const BigInt& v) {
    switch (r.kind()) {
        case RingKind::Rational: return RingElem(r, RationalPayload{v, BigInt(1)});
        case RingKind::Modular: return RingElem(r, BigInt::mod_floor(v, r.modulus()));
        case RingKind::Polynomial: return embed_constant(r, make_int(r.base(), v));
        case RingKind::Quotient: {
            RingElem c = make_int(r.scalar_ring(), v);
            if (c.is_zero()) return RingElem(r, QuotPayload{});
            return RingElem(r, QuotPayload{{c}});
        }
    }
    throw DomainError("bad_ring", "unknown ring kind");
}

inline RingElem zero(const Ring& r) { return make_int(r, 0); }
inline RingElem one(const Ring& r) { return make_int(r, 1); }

inline RingElem poly_from_terms(const Ring& poly_ring,
                                std::vector<std::pair<Monomial, RingElem>> terms) {
    detail::require_kind(poly_ring, RingKind::Polynomial, "polynomial");
    const std::size_t n = poly_ring.var_count();
    std::map<Monomial, RingElem, MonomialLexGreater> acc;
    for (auto& [m, c] : terms) {
        if (m.exp.size() != n)
            throw DomainError("bad_monomial", "monomial arity does not match the variable list");
        if (!(c.ring() == poly_ring.base()))
            throw DomainError("ring_mismatch", "polynomial coefficient not in the base ring");
        if (c.is_zero()) continue;
        auto it = acc.find(m);
        if (it == acc.end())
            acc.emplace(std::move(m), std::move(c));
        else {
            it->second = add(it->second, c);
            if (it->second.is_zero()) acc.erase(it);
        }
    }
    PolyPayload p;
    p.monos.reserve(acc.size());
    p.coeffs.reserve(acc.size());
    for (auto& [m, c] : acc) {
        p.monos.push_back(m);
        p.coeffs.push_back(c);
    }
    return RingElem(poly_ring, std::move(p));
}

inline RingElem embed_constant(const Ring& poly_ring, const RingElem& base_value) {
    detail::require_kind(poly_ring, RingKind::Polynomial, "polynomial");
    if (!(base_value.ring() == poly_ring.base()))
        throw DomainError("ring_mismatch", "constant is not in the base ring");
    if (base_value.is_zero()) return RingElem(poly_ring, PolyPayload{});
    Monomial m{std::vector<std::uint32_t>(poly_ring.var_count(), 0)};
    return RingElem(poly_ring, PolyPayload{{std::move(m)}, {base_value}});
}

inline RingElem variable(const Ring& r, std::size_t index) {
    detail::require_kind(r, RingKind::Polynomial, "polynomial");
    if (index >= r.var_count())
        throw DomainError("unknown_variable", "variable index out of range");
    Monomial m{std::vector<std::uint32_t>(r.var_count(), 0)};
    m.exp[index] = 1;
    return RingElem(r, PolyPayload{{std::move(m)}, {one(r.base())}});
}

inline RingElem quotient_class(const Ring& quot_ring, const RingElem& rep) {
    detail::require_kind(quot_ring, RingKind::Quotient, "quotient");
    if (!(rep.ring() == quot_ring.base()))
        throw DomainError("ring_mismatch", "representative not in the quotient's base ring");
    std::vector<RingElem> dense = detail::poly_to_dense(rep);
    dense = detail::upoly_mod_monic(std::move(dense), quot_ring.quotient_modulus());
    return RingElem(quot_ring, QuotPayload{std::move(dense)});
}

// --- arithmetic ------------------------------------------------------------

inline RingElem add(const RingElem& a, const RingElem& b) {
    detail::require_same_ring(a, b, "add");
    const Ring& r = a.ring();
    switch (a.kind()) {
        case RingKind::Rational: {
            const auto& x = a.rat();
            const auto& y = b.rat();
            return make_fraction(r, x.num * y.den + y.num * x.den, x.den * y.den);
        }
        case RingKind::Modular:
            return RingElem(r, BigInt::mod_floor(a.residue() + b.residue(), r.modulus()));
        case RingKind::Polynomial: {
            // merge two descending term lists
            PolyPayload out;
            const auto& pa = a.poly();
            const auto& pb = b.poly();
            std::size_t i = 0, j = 0;
            while (i < pa.monos.size() || j < pb.monos.size()) {
                int c;
                if (i >= pa.monos.size()) c = -1;
                else if (j >= pb.monos.size()) c = 1;
                else c = Monomial::compare(pa.monos[i], pb.monos[j]);
                if (c > 0) {
                    out.monos.push_back(pa.monos[i]);
                    out.coeffs.push_back(pa.coeffs[i]);
                    ++i;
                } else if (c < 0) {
                    out.monos.push_back(pb.monos[j]);
                    out.coeffs.push_back(pb.coeffs[j]);
                    ++j;
                } else {
                    RingElem s = add(pa.coeffs[i], pb.coeffs[j]);
                    if (!s.is_zero()) {
                        out.monos.push_back(pa.monos[i]);
                        out.coeffs.push_back(std::move(s));
                    }
                    ++i;
                    ++j;
                }
            }
            return RingElem(r, std::move(out));
        }
        case RingKind::Quotient: {
            auto s = detail::upoly_add(a.quot().coeffs, b.quot().coeffs);
            return RingElem(r, QuotPayload{std::move(s)});
        }
    }
    throw DomainError("bad_ring", "unknown ring kind");
}

inline RingElem neg(const RingElem& a) {
    const Ring& r = a.ring();
    switch (a.kind()) {
        case RingKind::Rational: {
            auto p = a.rat();
            return RingElem(r, RationalPayload{-p.num, p.den});
        }
        case RingKind::Modular:
            return RingElem(r, BigInt::mod_floor(-a.residue(), r.modulus()));
        case RingKind::Polynomial: {
            PolyPayload out = a.poly();
            for (auto& c : out.coeffs) c = neg(c);
            return RingElem(r, std::move(out));
        }
        case RingKind::Quotient: {
            QuotPayload out = a.quot();
            for (auto& c : out.coeffs) c = neg(c);
            return RingElem(r, std::move(out));
        }
    }
    throw DomainError("bad_ring", "unknown ring kind");
}

inline RingElem sub(const RingElem& a, const RingElem& b) { return add(a, neg(b)); }

inline RingElem mul(const RingElem& a, const RingElem& b) {
    detail::require_same_ring(a, b, "mul");
    const Ring& r = a.ring();
    switch (a.kind()) {
        case RingKind::Rational: {
            const auto& x = a.rat();
            const auto& y = b.rat();
            return make_fraction(r, x.num * y.num, x.den * y.den);
        }
        case RingKind::Modular:
            return RingElem(r, BigInt::mod_floor(a.residue() * b.residue(), r.modulus()));
        case RingKind::Polynomial: {
            const auto& pa = a.poly();
            const auto& pb = b.poly();
            std::map<Monomial, RingElem, MonomialLexGreater> acc;
            for (std::size_t i = 0; i < pa.monos.size(); ++i) {
                for (std::size_t j = 0; j < pb.monos.size(); ++j) {
                    Monomial m = pa.monos[i] * pb.monos[j];
                    RingElem c = mul(pa.coeffs[i], pb.coeffs[j]);
                    if (c.is_zero()) continue;
                    auto it = acc.find(m);
                    if (it == acc.end())
                        acc.emplace(std::move(m), std::move(c));
                    else {
                        it->second = add(it->second, c);
                        if (it->second.is_zero()) acc.erase(it);
                    }
                }
            }
            PolyPayload out;
            out.monos.reserve(acc.size());
            out.coeffs.reserve(acc.size());
            for (auto& [m, c] : acc) {
                out.monos.push_back(m);
                out.coeffs.push_back(c);
            }
            return RingElem(r, std::move(out));
        }
        case RingKind::Quotient: {
            auto prod = detail::upoly_mul(a.quot().coeffs, b.quot().coeffs, r.scalar_ring());
            prod = detail::upoly_mod_monic(std::move(prod), r.quotient_modulus());
            return RingElem(r, QuotPayload{std::move(prod)});
        }
    }
    throw DomainError("bad_ring", "unknown ring kind");
}

inline RingElem half(const RingElem& a) {
    const Ring& r = a.ring();
    switch (a.kind()) {
        case RingKind::Rational: {
            const auto& p = a.rat();
            return make_fraction(r, p.num, p.den * BigInt(2));
        }
        case RingKind::Modular: {
            // (m+1)/2 is the inverse of 2 mod odd m
            BigInt inv2 = (r.modulus() + BigInt(1)) / BigInt(2);
            return RingElem(r, BigInt::mod_floor(a.residue() * inv2, r.modulus()));
        }
        case RingKind::Polynomial: {
            PolyPayload out = a.poly();
            for (auto& c : out.coeffs) c = half(c);
            return RingElem(r, std::move(out));
        }
        case RingKind::Quotient: {
            QuotPayload out = a.quot();
            for (auto& c : out.coeffs) c = half(c);
            return RingElem(r, std::move(out));
        }
    }
    throw DomainError("bad_ring", "unknown ring kind");
}

inline RingElem pow_u(const RingElem& a, std::uint64_t e) {
    RingElem result = one(a.ring());
    RingElem base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        if (e >>= 1) base = mul(base, base);
    }
    return result;
}

// --- unit / regularity / square questions ----------------------------------

inline Decision is_unit(const RingElem& a) {
    const Ring& r = a.ring();
    switch (a.kind()) {
        case RingKind::Rational:
            return a.is_zero() ? Decision::No : Decision::Yes;
        case RingKind::Modular:
            return BigInt::gcd(a.residue(), r.modulus()) == BigInt(1) ? Decision::Yes
                                                                      : Decision::No;
        case RingKind::Polynomial: {
            if (a.is_zero()) return Decision::No;
            if (a.term_count() == 1 && a.mono(0).is_constant()) return is_unit(a.coeff(0));
            // nonconstant: never a unit over an integral base, unknown otherwise
            // (e.g. 1+3T is a unit in (Z/9)[T])
            return r.base().integral() == Decision::Yes ? Decision::No : Decision::Undecided;
        }
        case RingKind::Quotient: {
            if (a.is_zero()) return Decision::No;
            const Ring k = r.scalar_ring();
            if (a.quot().coeffs.size() == 1) return is_unit(a.quot().coeffs[0]);
            if (k.field() == Decision::Yes) {
                std::vector<RingElem> g, s, t;
                if (detail::upoly_ext_gcd(a.quot().coeffs, r.quotient_modulus(), k, g, s, t))
                    return g.size() == 1 ? Decision::Yes : Decision::No;
            }
            return Decision::Undecided;
        }
    }
    return Decision::Undecided;
}

inline RingElem inv(const RingElem& a) {
    const Ring& r = a.ring();
    if (is_unit(a) != Decision::Yes)
        throw DomainError("not_a_unit", "element is not (decidably) a unit in " + r.description());
    switch (a.kind()) {
        case RingKind::Rational: {
            const auto& p = a.rat();
            return make_fraction(r, p.den, p.num);
        }
        case RingKind::Modular: {
            BigInt x, y;
            BigInt::ext_gcd(a.residue(), r.modulus(), x, y);
            return RingElem(r, BigInt::mod_floor(x, r.modulus()));
        }
        case RingKind::Polynomial:
            return embed_constant(r, inv(a.coeff(0)));
        case RingKind::Quotient: {
            const Ring k = r.scalar_ring();
            if (a.quot().coeffs.size() == 1)
                return RingElem(r, QuotPayload{{inv(a.quot().coeffs[0])}});
            std::vector<RingElem> g, s, t;
            detail::upoly_ext_gcd(a.quot().coeffs, r.quotient_modulus(), k, g, s, t);
            // g is the constant 1 after monic normalization
            s = detail::upoly_mod_monic(std::move(s), r.quotient_modulus());
            return RingElem(r, QuotPayload{std::move(s)});
        }
    }
    throw DomainError("bad_ring", "unknown ring kind");
}

inline Decision is_regular(const RingElem& a) {
    if (a.is_zero()) return Decision::No;
    const Ring& r = a.ring();
    switch (a.kind()) {
        case RingKind::Rational: return Decision::Yes;
        case RingKind::Modular:
            // in Z/m the regular elements are exactly the units
            return is_unit(a);
        case RingKind::Polynomial: {
            if (r.base().integral() == Decision::Yes) return Decision::Yes;
            if (r.base().kind() == RingKind::Modular) {
                // McCoy: over Z/m a polynomial is a zerodivisor iff one ring
                // element kills every coefficient, i.e. gcd(content, m) > 1
                BigInt g = r.base().modulus();
                for (std::size_t i = 0; i < a.term_count(); ++i)
                    g = BigInt::gcd(g, a.coeff(i).residue());
                return g == BigInt(1) ? Decision::Yes : Decision::No;
            }
            return Decision::Undecided;
        }
        case RingKind::Quotient:
            return is_unit(a) == Decision::Yes ? Decision::Yes : Decision::Undecided;
    }
    return Decision::Undecided;
}

inline std::pair<Decision, std::optional<RingElem>> square_root(const RingElem& a) {
    const Ring& r = a.ring();
    if (a.is_zero()) return {Decision::Yes, zero(r)};
    switch (a.kind()) {
        case RingKind::Rational: {
            const auto& p = a.rat();
            if (p.num.is_negative()) return {Decision::No, std::nullopt};
            BigInt sn = BigInt::isqrt(p.num), sd = BigInt::isqrt(p.den);
            if (sn * sn == p.num && sd * sd == p.den)
                return {Decision::Yes, make_fraction(r, sn, sd)};
            return {Decision::No, std::nullopt};
        }
        case RingKind::Modular: {
            if (r.modulus() > BigInt(1000000)) return {Decision::Undecided, std::nullopt};
            std::int64_t m = r.modulus().to_int64();
            std::int64_t v = a.residue().to_int64();
            for (std::int64_t w = 0; w <= m / 2; ++w) {
                if ((w * w) % m == v) return {Decision::Yes, make_int(r, w)};
            }
            return {Decision::No, std::nullopt};
        }
        case RingKind::Polynomial: {
            if (a.term_count() == 1 && a.mono(0).is_constant()) {
                auto [d, w] = square_root(a.coeff(0));
                if (d == Decision::Yes) return {d, embed_constant(r, *w)};
                return {d, std::nullopt};
            }
            return {Decision::Undecided, std::nullopt};
        }
        case RingKind::Quotient: {
            if (a.quot().coeffs.size() == 1) {
                auto [d, w] = square_root(a.quot().coeffs[0]);
                if (d == Decision::Yes) return {d, RingElem(r, QuotPayload{{*w}})};
                return {d, std::nullopt};
            }
            return {Decision::Undecided, std::nullopt};
        }
    }
    return {Decision::Undecided, std::nullopt};
}

// --- rendering ---------------------------------------------------------------

namespace detail {

inline bool needs_parens(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '+' || (s[i] == '-' && i > 0)) return true;
    }
    return false;
}

inline std::string render_monomial(const Ring& r, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (!m.exp[i]) continue;
        if (!s.empty()) s += "*";
        s += r.vars()[i];
        if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
    }
    return s;
}

}  // namespace detail

inline std::string to_string(const RingElem& a) {
    const Ring& r = a.ring();
    switch (a.kind()) {
        case RingKind::Rational: {
            const auto& p = a.rat();
            if (p.den == BigInt(1)) return p.num.to_string();
            return p.num.to_string() + "/" + p.den.to_string();
        }
        case RingKind::Modular:
            return a.residue().to_string();
        case RingKind::Polynomial: {
            if (a.is_zero()) return "0";
            std::string out;
            for (std::size_t i = 0; i < a.term_count(); ++i) {
                std::string cs = to_string(a.coeff(i));
                std::string ms = detail::render_monomial(r, a.mono(i));
                std::string term;
                if (ms.empty()) {
                    term = detail::needs_parens(cs) ? "(" + cs + ")" : cs;
                } else if (cs == "1") {
                    term = ms;
                } else if (cs == "-1") {
                    term = "-" + ms;
                } else if (detail::needs_parens(cs)) {
                    term = "(" + cs + ")*" + ms;
                } else {
                    term = cs + "*" + ms;
                }
                if (out.empty())
                    out = term;
                else if (!term.empty() && term[0] == '-')
                    out += term;
                else
                    out += "+" + term;
            }
            return out;
        }
        case RingKind::Quotient:
            return to_string(detail::dense_to_poly(r.base(), a.quot().coeffs));
    }
    return "?";
}

}  // namespace quadcover

#endif  // QUADCOVER_RINGS_HPP
