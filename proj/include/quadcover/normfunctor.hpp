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

#ifndef QUADCOVER_NORMFUNCTOR_HPP
#define QUADCOVER_NORMFUNCTOR_HPP

#include <string>

#include "quadcover/binforms.hpp"
#include "quadcover/linalg.hpp"
#include "quadcover/quadalg.hpp"

namespace quadcover {

// ---------------------------------------------------------------------------
// The inverse direction: from a rank-two module with an action of the cover
// back to the quadratic form, via the norm x -> (1^alpha -> x ^ alpha x).
// In the trivialized chart all the natural identifications collapse to exact
// matrix equalities, which is what these routines verify.
// ---------------------------------------------------------------------------

/// A quadratic algebra together with an invertible module over it, both
/// trivialized; the action matrix must realize multiplication by alpha.
struct CoverModulePair {
    QuadraticAlgebra algebra;
    ModuleAction action;
};

inline CoverModulePair make_cover_module(QuadraticAlgebra algebra, ModuleAction action) {
    if (!(algebra.ring == action.ring))
        throw DomainError("ring_mismatch", "algebra and action must share the base ring");
    if (algebra.d != action.d)
        throw DomainError("bad_action", "action scalar differs from the algebra's d");
    return CoverModulePair{std::move(algebra), std::move(action)};
}

/// nu(v) = coefficient of v ^ Mv on e1^e2: m21 x^2 + (m22 - m11) xy - m12 y^2.
inline RingElem norm_value(const CoverModulePair& p, const Vec2& v) {
    return wedge(v, p.action.m.apply(v));
}

inline RingElem norm_value(const CoverModulePair& p, const RingElem& x, const RingElem& y) {
    return norm_value(p, Vec2{x, y});
}

/// The quadratic form recovered from the action: the value of phi on
/// e_i e_j is 2 * (e_i ^ M e_j), read off on the basis e1^e2.
inline BinaryForm norm_form(const CoverModulePair& p) {
    const Ring& r = p.algebra.ring;
    Vec2 e1{one(r), zero(r)}, e2{zero(r), one(r)};
    RingElem a = wedge(e1, p.action.m.apply(e1));
    RingElem b = wedge(e1, p.action.m.apply(e2));
    RingElem c = wedge(e2, p.action.m.apply(e2));
    return make_form(r, add(a, a), add(b, b), add(c, c));
}

struct RoundtripReport {
    bool pass;
    std::string first_difference;  // empty when pass
};

/// form -> cover -> norm form must return the identical triple, and the
/// action rebuilt from the recovered form must equal the original matrix.
inline RoundtripReport roundtrip_form(const BinaryForm& form) {
    BinaryForm f = to_phi(form);
    Covering cov = covering_from_form(f);
    BinaryForm back = norm_form(CoverModulePair{cov.algebra, cov.action});
    if (back.a != f.a) return {false, "a"};
    if (back.b != f.b) return {false, "b"};
    if (back.c != f.c) return {false, "c"};
    ModuleAction rebuilt = alpha_matrix(back);
    if (!(rebuilt.m == cov.action.m)) return {false, "action matrix"};
    if (rebuilt.d != cov.action.d) return {false, "action scalar"};
    return {true, ""};
}

/// Module action recovered through the norm: norm_form then alpha_matrix.
inline ModuleAction action_from_norm(const CoverModulePair& p) {
    return alpha_matrix(norm_form(p));
}

/// theta : E -> E' with q = q' o theta (checked via Gram matrices) and
/// injective, i.e. regular determinant where decidable.
struct FormMorphism {
    Mat2 theta;
    BinaryForm source;
    BinaryForm target;
    Decision det_regularity;  // Yes where checked, Undecided = trusted
};

/// Gram(f) = [[a, b], [b, c]] / 2.
inline std::array<std::array<RingElem, 2>, 2> gram(const BinaryForm& form) {
    BinaryForm f = to_phi(form);
    return {{{half(f.a), half(f.b)}, {half(f.b), half(f.c)}}};
}

/// Pull a form back along theta: Gram(result) = theta^T Gram(f) theta.
inline BinaryForm pullback_form(const Mat2& theta, const BinaryForm& target) {
    BinaryForm f = to_phi(target);
    const Ring& r = f.ring;
    auto g = gram(f);
    // columns of theta
    Vec2 c1{theta.a, theta.c}, c2{theta.b, theta.d};
    auto pair = [&](const Vec2& u, const Vec2& v) {
        RingElem s = mul(u.x, mul(g[0][0], v.x));
        s = add(s, mul(u.x, mul(g[0][1], v.y)));
        s = add(s, mul(u.y, mul(g[1][0], v.x)));
        s = add(s, mul(u.y, mul(g[1][1], v.y)));
        return s;
    };
    RingElem a = pair(c1, c1), b = pair(c1, c2), c = pair(c2, c2);
    return make_form(r, add(a, a), add(b, b), add(c, c));
}

inline FormMorphism make_morphism(Mat2 theta, const BinaryForm& source, const BinaryForm& target) {
    BinaryForm s = to_phi(source), t = to_phi(target);
    if (!(s.ring == t.ring))
        throw DomainError("ring_mismatch", "source and target forms must share the ring");
    RingElem det = theta.det();
    Decision reg = is_regular(det);
    if (reg == Decision::No)
        throw DomainError("not_regular", "morphism needs an injective theta (regular determinant)");
    if (!(pullback_form(theta, t) == s))
        throw DomainError("not_a_morphism", "q != q' o theta: Gram condition fails");
    return FormMorphism{std::move(theta), std::move(s), std::move(t), reg};
}

struct TransferResult {
    RingElem psi_scalar;      // det(theta): the matrix of psi on the bases alpha, alpha'
    bool action_square_ok;    // theta M = det(theta) M' theta
    bool multiplication_ok;   // d = det(theta)^2 d'
};

/// The algebra morphism induced by a morphism of forms: on the trace-zero
/// part it is multiplication by det(theta), the commuting square with the
/// module actions and the compatibility of the multiplications are verified
/// exactly.
inline TransferResult transfer_morphism(const FormMorphism& mor) {
    ModuleAction src = alpha_matrix(mor.source);
    ModuleAction tgt = alpha_matrix(mor.target);
    RingElem det = mor.theta.det();
    Mat2 lhs = mor.theta * src.m;
    Mat2 rhs = scale(det, tgt.m * mor.theta);
    bool square_ok = lhs == rhs;
    bool mult_ok = src.d == mul(mul(det, det), tgt.d);
    return TransferResult{std::move(det), square_ok, mult_ok};
}

/// v ^ Mw = w ^ Mv for every trace-zero M; rejects nonzero trace.
inline bool skew_symmetry_check(const Mat2& m, const Vec2& v, const Vec2& w) {
    if (!m.trace().is_zero())
        throw DomainError("bad_action", "skew symmetry check needs a trace-zero matrix");
    return wedge(v, m.apply(w)) == wedge(w, m.apply(v));
}

}  // namespace quadcover

#endif  // QUADCOVER_NORMFUNCTOR_HPP
