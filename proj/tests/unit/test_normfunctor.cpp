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

#include <doctest.h>

#include "quadcover/normfunctor.hpp"
#include "quadcover/random.hpp"

using namespace quadcover;

namespace {
Ring q() { return Ring::rational(); }

BinaryForm form_i(const Ring& r, std::int64_t a, std::int64_t b, std::int64_t c) {
    return make_form(r, make_int(r, a), make_int(r, b), make_int(r, c));
}

CoverModulePair pair_of(const BinaryForm& f) {
    Covering cov = covering_from_form(f);
    return make_cover_module(cov.algebra, cov.action);
}
}  // namespace

TEST_CASE("norm_value examples") {
    Mat2 rot{zero(q()), make_int(q(), -1), one(q()), zero(q())};
    CoverModulePair p = make_cover_module(make_algebra(q(), make_int(q(), -1)),
                                          make_action(q(), rot, make_int(q(), -1)));
    CHECK(norm_value(p, one(q()), zero(q())) == one(q()));  // e1 ^ M e1 = e1 ^ e2
    CHECK(norm_value(p, zero(q()), zero(q())) == zero(q()));

    // nu = q symbolically: the norm of the action of a generic form is the
    // quadratic map of that form
    Ring g = Ring::polynomial(q(), {"a", "b", "c", "x", "y"});
    BinaryForm f = make_form(g, variable(g, 0), variable(g, 1), variable(g, 2));
    ModuleAction act = alpha_matrix(f);
    CoverModulePair gp = make_cover_module(make_algebra(g, act.d), act);
    CHECK(norm_value(gp, variable(g, 3), variable(g, 4)) ==
          eval_quadratic(f, variable(g, 3), variable(g, 4)));
}

TEST_CASE("norm_form examples") {
    Mat2 rot{zero(q()), make_int(q(), -1), one(q()), zero(q())};
    CoverModulePair p = make_cover_module(make_algebra(q(), make_int(q(), -1)),
                                          make_action(q(), rot, make_int(q(), -1)));
    BinaryForm f = norm_form(p);
    CHECK(f == form_i(q(), 2, 0, 2));
    CHECK(alpha_matrix(f).m == rot);  // round-trips to the action

    CoverModulePair z = make_cover_module(make_algebra(q(), zero(q())),
                                          make_action(q(), Mat2::zero_matrix(q()), zero(q())));
    CHECK(norm_form(z) == form_i(q(), 0, 0, 0));

    Mat2 halfm{make_fraction(q(), -1, 2), zero(q()), one(q()), make_fraction(q(), 1, 2)};
    CoverModulePair hp = make_cover_module(make_algebra(q(), make_fraction(q(), 1, 4)),
                                           make_action(q(), halfm, make_fraction(q(), 1, 4)));
    CHECK(norm_form(hp) == form_i(q(), 2, 1, 0));

    // the recovered form evaluates like the norm everywhere
    Rng rng(53);
    for (int i = 0; i < 40; ++i) {
        Mat2 m = random_trace_zero(rng, q());
        RingElem d = neg(m.det());
        CoverModulePair mp = make_cover_module(make_algebra(q(), d), make_action(q(), m, d));
        BinaryForm nf = norm_form(mp);
        Vec2 v = random_vec(rng, q());
        CHECK(eval_quadratic(nf, v) == norm_value(mp, v));
    }
}

TEST_CASE("mismatched pair is rejected") {
    Mat2 rot{zero(q()), make_int(q(), -1), one(q()), zero(q())};
    CHECK_THROWS_AS(make_cover_module(make_algebra(q(), one(q())),
                                      make_action(q(), rot, make_int(q(), -1))),
                    DomainError);
}

TEST_CASE("roundtrip_form") {
    CHECK(roundtrip_form(form_i(q(), 2, 1, 0)).pass);
    CHECK(roundtrip_form(form_i(q(), 0, 0, 0)).pass);

    Rng rng(59);
    Ring z97 = Ring::modular(97);
    int pass = 0;
    for (int i = 0; i < 200; ++i)
        if (roundtrip_form(random_form(rng, z97)).pass) ++pass;
    CHECK(pass == 200);

    // reverse direction: module-with-action -> form -> the same action
    for (const Ring& r : {q(), z97}) {
        for (int i = 0; i < 60; ++i) {
            Mat2 m = random_trace_zero(rng, r);
            RingElem d = neg(m.det());
            CoverModulePair p = make_cover_module(make_algebra(r, d), make_action(r, m, d));
            CHECK(action_from_norm(p) == p.action);
        }
    }
}

TEST_CASE("transfer_morphism worked example") {
    BinaryForm target = form_i(q(), 1, 0, 1);
    Mat2 theta{one(q()), one(q()), zero(q()), one(q())};
    BinaryForm source = pullback_form(theta, target);
    CHECK(source == form_i(q(), 1, 1, 2));

    FormMorphism mor = make_morphism(theta, source, target);
    TransferResult res = transfer_morphism(mor);
    CHECK(res.psi_scalar == one(q()));
    CHECK(res.action_square_ok);
    CHECK(res.multiplication_ok);
    // theta M = M' theta = [[0,-1],[1,1]] / 2
    Mat2 prod = theta * alpha_matrix(source).m;
    CHECK(prod == (Mat2{zero(q()), make_fraction(q(), -1, 2), make_fraction(q(), 1, 2),
                        make_fraction(q(), 1, 2)}));
}

TEST_CASE("transfer_morphism identity and scaling") {
    Rng rng(61);
    BinaryForm f = random_form(rng, q());
    FormMorphism idm = make_morphism(Mat2::identity(q()), f, f);
    TransferResult idr = transfer_morphism(idm);
    CHECK(idr.psi_scalar == one(q()));
    CHECK(idr.action_square_ok);
    CHECK(idr.multiplication_ok);

    // theta = t*I: source = t^2 * target, psi = t^2, d = t^4 d'
    RingElem t = make_int(q(), 3);
    BinaryForm target = form_i(q(), 2, -1, 5);
    Mat2 theta{t, zero(q()), zero(q()), t};
    BinaryForm source = pullback_form(theta, target);
    RingElem t2 = mul(t, t);
    CHECK(source.a == mul(t2, target.a));
    CHECK(source.b == mul(t2, target.b));
    CHECK(source.c == mul(t2, target.c));
    TransferResult res = transfer_morphism(make_morphism(theta, source, target));
    CHECK(res.psi_scalar == t2);
    CHECK(alpha_matrix(source).d == mul(mul(t2, t2), alpha_matrix(target).d));
}

TEST_CASE("morphism construction rejects bad data") {
    BinaryForm f = form_i(q(), 1, 0, 1);
    BinaryForm g = form_i(q(), 1, 1, 1);
    CHECK_THROWS_AS(make_morphism(Mat2::identity(q()), f, g), DomainError);  // Gram fails
    Mat2 singular{one(q()), one(q()), one(q()), one(q())};
    CHECK_THROWS_AS(make_morphism(singular, pullback_form(singular, f), f), DomainError);
}

TEST_CASE("transfer composes multiplicatively") {
    Rng rng(67);
    for (int i = 0; i < 40; ++i) {
        BinaryForm f3 = random_form(rng, q());
        Mat2 t2 = random_regular_matrix(rng, q());
        Mat2 t1 = random_regular_matrix(rng, q());
        BinaryForm f2 = pullback_form(t2, f3);
        BinaryForm f1 = pullback_form(t1, f2);
        TransferResult r1 = transfer_morphism(make_morphism(t1, f1, f2));
        TransferResult r2 = transfer_morphism(make_morphism(t2, f2, f3));
        TransferResult rc = transfer_morphism(make_morphism(t2 * t1, f1, f3));
        CHECK(rc.psi_scalar == mul(r1.psi_scalar, r2.psi_scalar));
    }
}

TEST_CASE("skew symmetry") {
    Mat2 diag{one(q()), zero(q()), zero(q()), make_int(q(), -1)};
    Vec2 e1{one(q()), zero(q())}, e2{zero(q()), one(q())};
    CHECK(skew_symmetry_check(diag, e1, e2));
    CHECK(wedge(e1, diag.apply(e2)) == make_int(q(), -1));

    Rng rng(71);
    Vec2 v = random_vec(rng, q());
    CHECK(skew_symmetry_check(random_trace_zero(rng, q()), v, v));  // v = w

    Ring z11 = Ring::modular(11);
    for (int i = 0; i < 100; ++i)
        CHECK(skew_symmetry_check(random_trace_zero(rng, z11), random_vec(rng, z11),
                                  random_vec(rng, z11)));

    Mat2 traceful{one(q()), zero(q()), zero(q()), one(q())};
    CHECK_THROWS_AS(skew_symmetry_check(traceful, e1, e2), DomainError);
}

TEST_CASE("norm of the covering action evaluates like the original form") {
    Rng rng(73);
    for (int i = 0; i < 60; ++i) {
        BinaryForm f = random_form(rng, q());
        CoverModulePair p = pair_of(f);
        Vec2 v = random_vec(rng, q());
        CHECK(norm_value(p, v) == eval_quadratic(f, v));
    }
}
