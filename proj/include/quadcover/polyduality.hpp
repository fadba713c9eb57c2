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

#ifndef QUADCOVER_POLYDUALITY_HPP
#define QUADCOVER_POLYDUALITY_HPP

#include <array>
#include <vector>

#include "quadcover/binforms.hpp"
#include "quadcover/linalg.hpp"

namespace quadcover {

// ---------------------------------------------------------------------------
// Degree-two homogeneous polynomials on the module are dual to symmetric
// forms through the pairing
//   (x1 x2, x3 x4) -> (x1^x3)(x2^x4) + (x1^x4)(x2^x3),
// whose matrix on the bases {e1^2, e1e2, e2^2} is [[0,0,2],[0,-1,0],[2,0,0]].
// This file carries the two directions, the kernel of Sym^2 -> Sym^2_A, and
// the identification of the degree-two divisor on the projective line bundle
// with the spectrum of the quotient algebra.
// ---------------------------------------------------------------------------

/// gamma_b: gamma = a e1^2 + b e1e2 + c e2^2 (stored b is the literal middle
/// coefficient). gamma2b: gamma = a X^2 + 2b XY + c Y^2 (stored b is half of
/// it). The conversion only needs 2 invertible and loses nothing.
enum class PolyConvention { GammaB, Gamma2b };

struct QuadraticPolynomial {
    Ring ring;
    RingElem a, b, c;
    PolyConvention convention = PolyConvention::GammaB;
};

inline QuadraticPolynomial make_polynomial(const Ring& r, RingElem a, RingElem b, RingElem c,
                                           PolyConvention conv = PolyConvention::GammaB) {
    if (!(a.ring() == r) || !(b.ring() == r) || !(c.ring() == r))
        throw DomainError("ring_mismatch", "polynomial coefficients must live in the ring");
    return QuadraticPolynomial{r, std::move(a), std::move(b), std::move(c), conv};
}

inline QuadraticPolynomial to_gamma_b(const QuadraticPolynomial& g) {
    if (g.convention == PolyConvention::GammaB) return g;
    return QuadraticPolynomial{g.ring, g.a, add(g.b, g.b), g.c, PolyConvention::GammaB};
}

inline QuadraticPolynomial to_gamma2b(const QuadraticPolynomial& g) {
    if (g.convention == PolyConvention::Gamma2b) return g;
    return QuadraticPolynomial{g.ring, g.a, half(g.b), g.c, PolyConvention::Gamma2b};
}

/// Matrix of the duality pairing on {e1^2, e1e2, e2^2} and the dual basis.
inline std::vector<std::vector<RingElem>> duality_matrix(const Ring& r) {
    const RingElem z = zero(r), two = make_int(r, 2), mone = make_int(r, -1);
    return {{z, z, two}, {z, mone, z}, {two, z, z}};
}

/// The symmetric form dual to gamma: phi = 2a phi_22 - b phi_12 + 2c phi_11,
/// i.e. the triple (2c, -b, 2a) in the phi convention.
inline BinaryForm dual_form(const QuadraticPolynomial& poly) {
    QuadraticPolynomial g = to_gamma_b(poly);
    return make_form(g.ring, add(g.c, g.c), neg(g.b), add(g.a, g.a));
}

/// Action of alpha computed directly from the polynomial:
/// alpha(e1) = b/2 e1 + c e2, alpha(e2) = -a e1 - b/2 e2.
/// Always equals alpha_matrix(dual_form(gamma)).
inline ModuleAction alpha_from_polynomial(const QuadraticPolynomial& poly) {
    QuadraticPolynomial g = to_gamma_b(poly);
    const Ring& r = g.ring;
    Mat2 m{half(g.b), neg(g.a), g.c, half(neg(g.b))};
    RingElem d = sub(mul(half(g.b), half(g.b)), mul(g.a, g.c));
    return make_action(r, std::move(m), std::move(d));
}

struct KernelGenerator {
    std::array<RingElem, 3> sym2_coords;  // e1*alpha(e2) - alpha(e1)*e2 on {e1^2, e1e2, e2^2}
    bool equals_minus_gamma;
};

/// The kernel of Sym^2(E) -> Sym^2_A(E) is generated by
/// e1*alpha(e2) - alpha(e1)*e2, which must come out as -gamma exactly.
inline KernelGenerator kernel_generator(const QuadraticPolynomial& poly) {
    QuadraticPolynomial g = to_gamma_b(poly);
    ModuleAction act = alpha_from_polynomial(g);
    // columns of the action matrix are alpha(e1), alpha(e2)
    const RingElem& p1 = act.m.a;  // alpha(e1) = p1 e1 + q1 e2
    const RingElem& q1 = act.m.c;
    const RingElem& p2 = act.m.b;  // alpha(e2) = p2 e1 + q2 e2
    const RingElem& q2 = act.m.d;
    // e1*(p2 e1 + q2 e2) = p2 e1^2 + q2 e1e2 ; (p1 e1 + q1 e2)*e2 = p1 e1e2 + q1 e2^2
    std::array<RingElem, 3> k = {p2, sub(q2, p1), neg(q1)};
    bool matches = k[0] == neg(g.a) && k[1] == neg(g.b) && k[2] == neg(g.c);
    if (!matches)
        throw DomainError("internal_inconsistency",
                          "kernel generator does not equal -gamma (sign convention broken)");
    return KernelGenerator{std::move(k), matches};
}

struct ProjSpecReport {
    Ring algebra;              // R[T]/(T^2 - (b^2 - ac))
    RingElem disc;             // b^2 - ac
    Mat2 action;               // [[b, -a], [c, -b]], the action of the class of T
    Vec2 generator;            // module generator among (1,0), (0,1), (1,1)
    RingElem generator_value;  // G(z) = c x^2 - 2b xy + a y^2, a unit
    bool relation_in_span;     // a e1@e1 + 2b e1@e2 + c e2@e2 lies in the bilinearity span
    Decision etale;
};

/// Identify the degree-two divisor of gamma = aX^2 + 2bXY + cY^2 inside the
/// projective line bundle with the spectrum of R[T]/(T^2-(b^2-ac)):
/// exhibits a module generator with unit value of G(X,Y) = cX^2 - 2bXY + aY^2
/// and verifies by exact rank computation that the defining relation of gamma
/// is spanned by the four bilinearity relations (M e_i)@e_j - e_i@(M e_j).
/// Needs a primitive gamma over a rational or modular base.
inline ProjSpecReport proj_spec_check(const QuadraticPolynomial& poly) {
    QuadraticPolynomial g = to_gamma2b(poly);
    const Ring& r = g.ring;
    if (r.kind() != RingKind::Rational && r.kind() != RingKind::Modular)
        throw DomainError("unsupported_ring",
                          "proj/spec identification needs a rational or modular base");
    if (coefficients_generate_unit_ideal(r, {g.a, g.b, g.c}) != Decision::Yes)
        throw DomainError("not_primitive", "proj/spec identification needs a primitive gamma");

    RingElem disc = sub(mul(g.b, g.b), mul(g.a, g.c));
    Ring polyring = Ring::polynomial(r, {"T"});
    RingElem tvar = variable(polyring, 0);
    Ring algebra = Ring::quotient(polyring, sub(mul(tvar, tvar), embed_constant(polyring, disc)));
    Mat2 act{g.b, neg(g.a), g.c, neg(g.b)};

    // generator search in the order (1,0), (0,1), (1,1)
    Vec2 e1{one(r), zero(r)}, e2{zero(r), one(r)};
    auto G = [&](const Vec2& v) {
        RingElem s = mul(g.c, mul(v.x, v.x));
        s = sub(s, mul(add(g.b, g.b), mul(v.x, v.y)));
        return add(s, mul(g.a, mul(v.y, v.y)));
    };
    const std::array<Vec2, 3> candidates = {e1, e2, e1 + e2};
    const Vec2* found = nullptr;
    for (const auto& z : candidates) {
        if (is_unit(G(z)) == Decision::Yes) {
            found = &z;
            break;
        }
    }
    if (!found)
        throw DomainError("internal_inconsistency",
                          "no unit generator among (1,0), (0,1), (1,1) for a primitive gamma");
    // {z, Mz} is then a basis: det of the change matrix is G(z)
    RingElem change = wedge(*found, act.apply(*found));
    if (is_unit(change) != Decision::Yes)
        throw DomainError("internal_inconsistency", "generator change-of-basis is not a unit");

    // relation membership on coordinates (e1@e1, e1@e2, e2@e1, e2@e2)
    const std::array<Vec2, 2> basis = {e1, e2};
    std::vector<std::vector<RingElem>> span;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Vec2 mi = act.apply(basis[i]);
            Vec2 mj = act.apply(basis[j]);
            std::vector<RingElem> row(4, zero(r));
            // (M e_i) @ e_j contributes on (e1@e_j, e2@e_j)
            row[0 * 2 + j] = add(row[0 * 2 + j], mi.x);
            row[1 * 2 + j] = add(row[1 * 2 + j], mi.y);
            // - e_i @ (M e_j) contributes on (e_i@e1, e_i@e2)
            row[i * 2 + 0] = sub(row[i * 2 + 0], mj.x);
            row[i * 2 + 1] = sub(row[i * 2 + 1], mj.y);
            span.push_back(std::move(row));
        }
    std::vector<RingElem> rel = {g.a, add(g.b, g.b), zero(r), g.c};
    bool in_span = in_row_span(std::move(span), rel);

    return ProjSpecReport{std::move(algebra), std::move(disc), std::move(act), *found,
                          G(*found),          in_span,         is_unit(sub(mul(g.b, g.b), mul(g.a, g.c)))};
}

}  // namespace quadcover

#endif  // QUADCOVER_POLYDUALITY_HPP
