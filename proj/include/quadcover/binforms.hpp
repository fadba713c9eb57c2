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

#ifndef QUADCOVER_BINFORMS_HPP
#define QUADCOVER_BINFORMS_HPP

#include <array>
#include <optional>
#include <string>

#include "quadcover/linalg.hpp"
#include "quadcover/quadalg.hpp"
#include "quadcover/rings.hpp"

namespace quadcover {

// ---------------------------------------------------------------------------
// Binary quadratic forms on a free rank-two module, valued in a trivialized
// line: the triple (a, b, c) of values on e1^2, e1e2, e2^2. The orientation
// is fixed project-wide by the isomorphism y -> (x -> x wedge y) and the
// positive basis e1^e2, so all signs below are pinned.
// ---------------------------------------------------------------------------

/// phi: the stored b is the value on e1e2 (so the homogeneous middle
/// coefficient is 2b). gamma2b: the stored b is half of that value; a
/// lossless tag conversion since 2 is a unit.
enum class FormConvention { Phi, Gamma2b };

struct BinaryForm {
    Ring ring;
    RingElem a, b, c;
    FormConvention convention = FormConvention::Phi;

    friend bool operator==(const BinaryForm& f, const BinaryForm& g) {
        return f.ring == g.ring && f.convention == g.convention && f.a == g.a && f.b == g.b &&
               f.c == g.c;
    }
};

inline BinaryForm make_form(const Ring& r, RingElem a, RingElem b, RingElem c,
                            FormConvention conv = FormConvention::Phi) {
    if (!(a.ring() == r) || !(b.ring() == r) || !(c.ring() == r))
        throw DomainError("ring_mismatch", "form coefficients must live in the declared ring");
    return BinaryForm{r, std::move(a), std::move(b), std::move(c), conv};
}

inline BinaryForm to_phi(const BinaryForm& f) {
    if (f.convention == FormConvention::Phi) return f;
    return BinaryForm{f.ring, f.a, add(f.b, f.b), f.c, FormConvention::Phi};
}

inline BinaryForm to_gamma2b(const BinaryForm& f) {
    if (f.convention == FormConvention::Gamma2b) return f;
    return BinaryForm{f.ring, f.a, half(f.b), f.c, FormConvention::Gamma2b};
}

/// q(x, y) = (a x^2 + 2b xy + c y^2) / 2, the quadratic map of the form.
inline RingElem eval_quadratic(const BinaryForm& form, const RingElem& x, const RingElem& y) {
    BinaryForm f = to_phi(form);
    RingElem s = mul(f.a, mul(x, x));
    s = add(s, mul(add(f.b, f.b), mul(x, y)));
    s = add(s, mul(f.c, mul(y, y)));
    return half(s);
}

inline RingElem eval_quadratic(const BinaryForm& form, const Vec2& v) {
    return eval_quadratic(form, v.x, v.y);
}

/// The symmetric bilinear value phi(v.w) recovered from q by polarization:
/// q(v+w) - q(v) - q(w).
inline RingElem polarize(const BinaryForm& form, const Vec2& v, const Vec2& w) {
    return sub(sub(eval_quadratic(form, v + w), eval_quadratic(form, v)),
               eval_quadratic(form, w));
}

/// Does the ideal generated by the values reach the whole ring?
/// Decided by gcd over Q and Z/m; by an explicit combination witness
/// (u*a + v*b + w*c = 1) or a decidably-unit value elsewhere.
inline Decision coefficients_generate_unit_ideal(
    const Ring& r, const std::array<RingElem, 3>& vals,
    const std::optional<std::array<RingElem, 3>>& witness = std::nullopt) {
    if (witness) {
        RingElem s = zero(r);
        for (int i = 0; i < 3; ++i) s = add(s, mul((*witness)[i], vals[i]));
        if (s == one(r)) return Decision::Yes;
    }
    switch (r.kind()) {
        case RingKind::Rational: {
            for (const auto& v : vals)
                if (!v.is_zero()) return Decision::Yes;
            return Decision::No;
        }
        case RingKind::Modular: {
            BigInt g = r.modulus();
            for (const auto& v : vals) g = BigInt::gcd(g, v.residue());
            return g == BigInt(1) ? Decision::Yes : Decision::No;
        }
        default: {
            bool all_zero = true;
            for (const auto& v : vals) {
                if (is_unit(v) == Decision::Yes) return Decision::Yes;
                all_zero = all_zero && v.is_zero();
            }
            return all_zero ? Decision::No : Decision::Undecided;
        }
    }
}

inline Decision is_primitive(const BinaryForm& form,
                             const std::optional<std::array<RingElem, 3>>& witness = std::nullopt) {
    BinaryForm f = to_phi(form);
    return coefficients_generate_unit_ideal(f.ring, {f.a, f.b, f.c}, witness);
}

/// The action of the distinguished trace-zero generator alpha on the module,
/// as a 2x2 matrix with trace 0 and M^2 = d*I for the scalar d = mu(alpha^2).
struct ModuleAction {
    Ring ring;
    Mat2 m;
    RingElem d;

    friend bool operator==(const ModuleAction& p, const ModuleAction& q) {
        return p.ring == q.ring && p.m == q.m && p.d == q.d;
    }
};

inline ModuleAction make_action(const Ring& r, Mat2 m, RingElem d) {
    if (!(d.ring() == r))
        throw DomainError("ring_mismatch", "action scalar must live in the declared ring");
    if (!m.trace().is_zero())
        throw DomainError("bad_action", "module action matrix must have trace zero");
    Mat2 sq = m * m;
    Mat2 dI = scale(d, Mat2::identity(r));
    if (!(sq == dI))
        throw DomainError("bad_action", "module action matrix must square to d*I");
    return ModuleAction{r, std::move(m), std::move(d)};
}

/// M = 1/2 [[-b, -c], [a, b]] and d = (b^2 - ac)/4. The defining exterior
/// identity e_i ^ M e_j = psi(e_i e_j)/2 * e1^e2 holds on all basis pairs.
inline ModuleAction alpha_matrix(const BinaryForm& form) {
    BinaryForm f = to_phi(form);
    const Ring& r = f.ring;
    Mat2 m{half(neg(f.b)), half(neg(f.c)), half(f.a), half(f.b)};
    RingElem d = half(half(sub(mul(f.b, f.b), mul(f.a, f.c))));
    return make_action(r, std::move(m), std::move(d));
}

/// Exterior pairing check e_i ^ M e_j = psi(e_i e_j)/2 on the four basis
/// pairs; true for every action produced by alpha_matrix.
inline bool defining_relation_holds(const BinaryForm& form, const ModuleAction& act) {
    BinaryForm f = to_phi(form);
    const Ring& r = f.ring;
    Vec2 e1{one(r), zero(r)}, e2{zero(r), one(r)};
    const Vec2 basis[2] = {e1, e2};
    const RingElem psi[2][2] = {{f.a, f.b}, {f.b, f.c}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (wedge(basis[i], act.m.apply(basis[j])) != half(psi[i][j])) return false;
        }
    return true;
}

struct Covering {
    QuadraticAlgebra algebra;        // d = (b^2 - ac)/4 on the basis alpha
    ModuleAction action;
    RingElem t_disc;                 // b^2 - ac, the T = 2 alpha scale
    Ring t_presentation;             // R[T]/(T^2 - (b^2 - ac))
    Decision etale;                  // b^2 - ac a unit
    bool presentations_isomorphic;   // alpha -> T/2 verified multiplicative
};

/// The double cover attached to a form: the algebra R + R alpha with
/// alpha^2 = (b^2-ac)/4 acting on the original module through alpha_matrix,
/// together with its rescaled presentation R[T]/(T^2-(b^2-ac)), T = 2 alpha.
inline Covering covering_from_form(const BinaryForm& form) {
    BinaryForm f = to_phi(form);
    const Ring& r = f.ring;
    ModuleAction act = alpha_matrix(f);
    QuadraticAlgebra alg{r, act.d};
    RingElem t_disc = sub(mul(f.b, f.b), mul(f.a, f.c));

    Ring poly = Ring::polynomial(r, {"T"});
    RingElem tvar = variable(poly, 0);
    Ring pres = Ring::quotient(poly, sub(mul(tvar, tvar), embed_constant(poly, t_disc)));

    // alpha -> T/2: squares match ((T/2)^2 = (b^2-ac)/4 = d), and products of
    // samples transported through the map agree
    RingElem t_half = half(quotient_class(pres, tvar));
    auto lift = [&](const RingElem& e) {
        return quotient_class(pres, embed_constant(poly, e));
    };
    bool iso = mul(t_half, t_half) == lift(act.d);
    QuadraticAlgebra ext{pres, lift(act.d)};
    std::vector<AlgebraElement> sample = {alg_one(ext), alg_alpha(ext), {lift(f.a), lift(f.b)},
                                          {lift(f.c), one(pres)}};
    auto phi_map = [&](const AlgebraElement& e) {  // a + x alpha -> a + x*(T/2)
        return add(e.a, mul(e.x, t_half));
    };
    for (const auto& u : sample)
        for (const auto& v : sample) {
            RingElem lhs = phi_map(alg_mul(ext, u, v));
            RingElem rhs = mul(phi_map(u), phi_map(v));
            iso = iso && lhs == rhs;
        }

    return Covering{std::move(alg), std::move(act), std::move(t_disc), std::move(pres),
                    is_unit(sub(mul(f.b, f.b), mul(f.a, f.c))), iso};
}

struct GeneratorCertificate {
    Vec2 generator;       // x with psi(x.x) a unit
    RingElem value;       // psi(x.x)
    RingElem change_det;  // det [x | Mx] = psi(x.x)/2, a unit: {x, Mx} is a basis
};

struct GeneratorSearch {
    Decision found;
    std::optional<GeneratorCertificate> certificate;
};

/// Search e1, e2, e1+e2 for a module generator over the cover; the value of
/// the form on a candidate is a unit exactly when the candidate works, and
/// the basis certificate det[x | Mx] is computed and checked. Requires a
/// primitive form.
inline GeneratorSearch invertible_generator(const BinaryForm& form, const ModuleAction& act) {
    BinaryForm f = to_phi(form);
    if (is_primitive(f) == Decision::No)
        throw DomainError("not_primitive", "invertible_generator needs a primitive form");
    const Ring& r = f.ring;
    Vec2 e1{one(r), zero(r)}, e2{zero(r), one(r)};
    const std::array<std::pair<Vec2, RingElem>, 3> candidates = {{
        {e1, f.a},
        {e2, f.c},
        {e1 + e2, add(add(f.a, add(f.b, f.b)), f.c)},  // psi((e1+e2)^2) = a + 2b + c
    }};
    for (const auto& [x, value] : candidates) {
        if (is_unit(value) != Decision::Yes) continue;
        RingElem det = wedge(x, act.m.apply(x));
        if (det != half(value) || is_unit(det) != Decision::Yes)
            throw DomainError("internal_inconsistency",
                              "generator certificate failed the exterior identity");
        return GeneratorSearch{Decision::Yes, GeneratorCertificate{x, value, det}};
    }
    // a generator may still exist locally (non-local base); never claim "no"
    return GeneratorSearch{Decision::Undecided, std::nullopt};
}

}  // namespace quadcover

#endif  // QUADCOVER_BINFORMS_HPP
