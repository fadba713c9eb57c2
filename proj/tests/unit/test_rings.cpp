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

#include "quadcover/parse.hpp"
#include "quadcover/random.hpp"
#include "quadcover/rings.hpp"
#include "quadcover/sympoly.hpp"

using namespace quadcover;

namespace {
Ring q() { return Ring::rational(); }

std::vector<Ring> ring_menu() {
    Ring poly = Ring::polynomial(q(), {"T"});
    RingElem t = variable(poly, 0);
    return {q(), Ring::modular(97), Ring::modular(15), Ring::polynomial(q(), {"u", "v"}),
            Ring::quotient(poly, sub(mul(t, t), make_int(poly, 5)))};
}
}  // namespace

TEST_CASE("descriptor invariants") {
    CHECK_THROWS_AS(Ring::modular(8), DomainError);   // 2 must stay invertible
    CHECK_THROWS_AS(Ring::modular(1), DomainError);
    CHECK_THROWS_AS(Ring::modular(-7), DomainError);
    CHECK_THROWS_AS(Ring::polynomial(q(), {}), DomainError);
    CHECK_THROWS_AS(Ring::polynomial(q(), {"T", "T"}), DomainError);

    Ring poly = Ring::polynomial(q(), {"T"});
    RingElem t = variable(poly, 0);
    CHECK_THROWS_AS(Ring::quotient(poly, make_int(poly, 5)), DomainError);          // degree 0
    CHECK_THROWS_AS(Ring::quotient(poly, mul(make_int(poly, 2), t)), DomainError);  // not monic
    Ring two_vars = Ring::polynomial(q(), {"T", "U"});
    CHECK_THROWS_AS(Ring::quotient(two_vars, variable(two_vars, 0)), DomainError);

    CHECK(Ring::modular(15) == Ring::modular(15));
    CHECK(Ring::modular(15) != Ring::modular(17));
    CHECK(Ring::quotient(poly, sub(mul(t, t), make_int(poly, 5))) ==
          Ring::quotient(poly, sub(mul(t, t), make_int(poly, 5))));
}

TEST_CASE("arith examples") {
    Ring z5 = Ring::modular(5);
    RingElem h = half(one(z5));
    CHECK(h == make_int(z5, 3));
    CHECK(add(h, h) == one(z5));  // 2*3 = 6 = 1 mod 5

    CHECK(half(zero(q())) == zero(q()));

    Ring z15 = Ring::modular(15);
    CHECK(is_unit(make_int(z15, 3)) == Decision::No);  // gcd(3,15) = 3
    CHECK(is_unit(make_int(z15, 2)) == Decision::Yes);
    CHECK(mul(make_int(z15, 2), inv(make_int(z15, 2))) == one(z15));
    CHECK_THROWS_AS(inv(make_int(z15, 3)), DomainError);
    CHECK_THROWS_AS(inv(zero(q())), DomainError);

    CHECK_THROWS_AS(add(one(q()), one(z15)), DomainError);  // descriptor mismatch
}

TEST_CASE("canonical form is idempotent and stable under serialization") {
    Rng rng(7);
    for (const Ring& r : ring_menu()) {
        for (int i = 0; i < 40; ++i) {
            RingElem e = random_element(rng, r);
            CHECK(add(e, zero(r)) == e);
            CHECK(mul(e, one(r)) == e);
            CHECK(sub(e, e).is_zero());
            CHECK(parse_element(r, to_string(e)) == e);
        }
    }
}

TEST_CASE("half laws") {
    Rng rng(11);
    for (const Ring& r : ring_menu()) {
        for (int i = 0; i < 40; ++i) {
            RingElem e = random_element(rng, r);
            CHECK(add(half(e), half(e)) == e);
            CHECK(half(add(e, e)) == e);
        }
    }
}

TEST_CASE("unit detection across the tower") {
    // nonconstant polynomials over an integral base are never units
    Ring p = Ring::polynomial(q(), {"T"});
    CHECK(is_unit(variable(p, 0)) == Decision::No);
    CHECK(is_unit(make_int(p, 7)) == Decision::Yes);
    // 1 + 3T over Z/9 is a unit ((1+3T)(1-3T) = 1), so "no" would be wrong
    Ring p9 = Ring::polynomial(Ring::modular(9), {"T"});
    RingElem u9 = add(one(p9), mul(make_int(p9, 3), variable(p9, 0)));
    CHECK(is_unit(u9) == Decision::Undecided);
    // quotient over a field decides by extended gcd
    RingElem t = variable(p, 0);
    Ring k = Ring::quotient(p, sub(mul(t, t), make_int(p, 5)));
    RingElem golden = add(quotient_class(k, t), one(k));
    CHECK(is_unit(golden) == Decision::Yes);
    CHECK(mul(golden, inv(golden)) == one(k));
    // T in Q[T]/(T^2): zero divisor, not a unit
    Ring dual = Ring::quotient(p, mul(t, t));
    CHECK(is_unit(quotient_class(dual, t)) == Decision::No);
    // quotient over a non-field base: undecided for nonconstant classes
    Ring p15 = Ring::polynomial(Ring::modular(15), {"T"});
    RingElem t15 = variable(p15, 0);
    Ring k15 = Ring::quotient(p15, sub(mul(t15, t15), make_int(p15, 2)));
    CHECK(is_unit(quotient_class(k15, t15)) == Decision::Undecided);
}

TEST_CASE("regularity") {
    Ring z15 = Ring::modular(15);
    CHECK(is_regular(make_int(z15, 2)) == Decision::Yes);
    CHECK(is_regular(make_int(z15, 3)) == Decision::No);
    Ring p15 = Ring::polynomial(z15, {"T"});
    RingElem f = add(mul(make_int(p15, 3), variable(p15, 0)), make_int(p15, 5));
    CHECK(is_regular(f) == Decision::Yes);  // content is 1
    RingElem g = add(mul(make_int(p15, 3), variable(p15, 0)), make_int(p15, 6));
    CHECK(is_regular(g) == Decision::No);   // 5 * g = 0
    CHECK(is_regular(zero(q())) == Decision::No);
    CHECK(is_regular(make_fraction(q(), -3, 7)) == Decision::Yes);
}

TEST_CASE("large modulus arithmetic") {
    Ring big = Ring::modular(BigInt("1000000000000066600000000000001"));  // odd
    RingElem a = make_int(big, BigInt("123456789123456789123456789"));
    CHECK(is_unit(a) == Decision::Yes);
    CHECK(mul(a, inv(a)) == one(big));
    CHECK(add(half(a), half(a)) == a);
}

TEST_CASE("square roots") {
    auto [d1, w1] = square_root(make_fraction(q(), 9, 4));
    CHECK(d1 == Decision::Yes);
    CHECK(*w1 == make_fraction(q(), 3, 2));
    CHECK(square_root(make_int(q(), -1)).first == Decision::No);
    CHECK(square_root(make_int(q(), 2)).first == Decision::No);
    Ring z7 = Ring::modular(7);
    auto [d2, w2] = square_root(make_int(z7, 2));
    CHECK(d2 == Decision::Yes);
    CHECK(mul(*w2, *w2) == make_int(z7, 2));
    CHECK(square_root(make_int(z7, 3)).first == Decision::No);
    Ring big = Ring::modular(BigInt("1000003"));
    CHECK(square_root(make_int(big, 2)).first == Decision::Undecided);
}

TEST_CASE("elem_symmetric examples") {
    Ring t2 = numbered_poly_ring(q(), 2, "T");
    CHECK(elem_symmetric(t2, 1) == add(variable(t2, 0), variable(t2, 1)));
    Ring t3 = numbered_poly_ring(q(), 3, "T");
    CHECK(elem_symmetric(t3, 3) ==
          mul(variable(t3, 0), mul(variable(t3, 1), variable(t3, 2))));
    CHECK(elem_symmetric(t3, 0) == one(t3));
    CHECK_THROWS_AS(elem_symmetric(t3, 4), DomainError);
}

TEST_CASE("symmetric_reduce examples") {
    Ring t2 = numbered_poly_ring(q(), 2, "T");
    RingElem t1 = variable(t2, 0), u2 = variable(t2, 1);
    auto red = symmetric_reduce(add(mul(t1, t1), mul(u2, u2)));
    Ring s2 = red.s_ring;
    CHECK(red.reduced == sub(mul(variable(s2, 0), variable(s2, 0)),
                             mul(make_int(s2, 2), variable(s2, 1))));

    Ring t3 = numbered_poly_ring(q(), 3, "T");
    auto red2 = symmetric_reduce(elem_symmetric(t3, 2));
    CHECK(red2.reduced == variable(red2.s_ring, 1));

    CHECK_THROWS_AS(symmetric_reduce(t1), DomainError);

    // squared Vandermonde for n = 3, with the numeric crosscheck at the
    // roots (0, 1, 2), where the direct product of squared differences is 4
    RingElem v = mul(mul(sub(variable(t3, 0), variable(t3, 1)),
                         sub(variable(t3, 0), variable(t3, 2))),
                     sub(variable(t3, 1), variable(t3, 2)));
    auto disc = symmetric_reduce(mul(v, v));
    Ring s3 = disc.s_ring;
    RingElem s1 = variable(s3, 0), sS2 = variable(s3, 1), sS3 = variable(s3, 2);
    RingElem expected = mul(mul(s1, s1), mul(sS2, sS2));
    expected = add(expected, mul(make_int(s3, -4), mul(sS2, mul(sS2, sS2))));
    expected = add(expected, mul(make_int(s3, -4), mul(mul(s1, mul(s1, s1)), sS3)));
    expected = add(expected, mul(make_int(s3, 18), mul(s1, mul(sS2, sS3))));
    expected = add(expected, mul(make_int(s3, -27), mul(sS3, sS3)));
    CHECK(disc.reduced == expected);
    std::vector<RingElem> roots = {make_int(q(), 0), make_int(q(), 1), make_int(q(), 2)};
    std::vector<RingElem> evals;
    for (std::size_t k = 1; k <= 3; ++k) evals.push_back(substitute(elem_symmetric(t3, k), roots));
    CHECK(substitute(disc.reduced, evals) == make_int(q(), 4));
    CHECK(substitute(mul(v, v), roots) == make_int(q(), 4));
}

TEST_CASE("substitute examples") {
    Ring t2 = numbered_poly_ring(q(), 2, "T");
    CHECK(substitute(elem_symmetric(t2, 1), {make_int(q(), 1), make_int(q(), 2)}) ==
          make_int(q(), 3));
    Ring s2 = numbered_poly_ring(q(), 2, "S");
    RingElem p = sub(mul(variable(s2, 0), variable(s2, 0)),
                     mul(make_int(s2, 4), variable(s2, 1)));
    CHECK(substitute(p, {make_int(q(), 3), make_int(q(), 2)}) == one(q()));
    CHECK(substitute(zero(t2), {make_int(q(), 5), make_int(q(), -5)}) == zero(q()));
    CHECK_THROWS_AS(substitute(p, {make_int(q(), 3)}), DomainError);
}

TEST_CASE("symmetric_reduce is a ring map") {
    Rng rng(23);
    Ring t3 = numbered_poly_ring(q(), 3, "T");
    Ring s3 = numbered_poly_ring(q(), 3, "S");
    std::vector<RingElem> elem;
    for (std::size_t k = 1; k <= 3; ++k) elem.push_back(elem_symmetric(t3, k));
    auto random_sym = [&] {
        std::vector<std::pair<Monomial, RingElem>> terms;
        for (int t = 0; t < 2; ++t) {
            Monomial m{std::vector<std::uint32_t>(3, 0)};
            for (auto& e : m.exp) e = static_cast<std::uint32_t>(rng.range(0, 2));
            terms.emplace_back(std::move(m), random_element(rng, q(), 5));
        }
        return substitute_into(poly_from_terms(s3, std::move(terms)), t3, elem);
    };
    for (int i = 0; i < 10; ++i) {
        RingElem a = random_sym(), b = random_sym();
        CHECK(symmetric_reduce(mul(a, b)).reduced ==
              mul(symmetric_reduce(a).reduced, symmetric_reduce(b).reduced));
        CHECK(symmetric_reduce(add(a, b)).reduced ==
              add(symmetric_reduce(a).reduced, symmetric_reduce(b).reduced));
        // evaluation compatibility at random tuples
        std::vector<RingElem> tv = {random_element(rng, q(), 5), random_element(rng, q(), 5),
                                    random_element(rng, q(), 5)};
        std::vector<RingElem> ev;
        for (std::size_t k = 1; k <= 3; ++k) ev.push_back(substitute(elem_symmetric(t3, k), tv));
        CHECK(substitute(symmetric_reduce(a).reduced, ev) == substitute(a, tv));
    }
}

TEST_CASE("quotient tower arithmetic") {
    // Z/13 [T] / (T^2 - 2), then polynomials over that
    Ring z13 = Ring::modular(13);
    Ring p = Ring::polynomial(z13, {"T"});
    RingElem t = variable(p, 0);
    Ring k = Ring::quotient(p, sub(mul(t, t), make_int(p, 2)));
    RingElem rt2 = quotient_class(k, t);
    CHECK(mul(rt2, rt2) == make_int(k, 2));
    Ring kp = Ring::polynomial(k, {"X"});
    RingElem x = variable(kp, 0);
    RingElem f = add(mul(x, x), embed_constant(kp, rt2));  // X^2 + sqrt(2)
    CHECK(mul(f, f) != zero(kp));
    CHECK(half(add(f, f)) == f);
}

TEST_CASE("inverse in a quotient over a prime field") {
    // (Z/13)[T]/(T^2 - 2): extended gcd decides units and produces inverses
    Ring z13 = Ring::modular(13);
    Ring p = Ring::polynomial(z13, {"T"});
    RingElem t = variable(p, 0);
    Ring k = Ring::quotient(p, sub(mul(t, t), make_int(p, 2)));
    Rng rng(127);
    int units = 0;
    for (int i = 0; i < 80; ++i) {
        RingElem e = random_element(rng, k);
        Decision u = is_unit(e);
        CHECK(u != Decision::Undecided);  // scalar field: always decided
        if (u == Decision::Yes) {
            CHECK(mul(e, inv(e)) == one(k));
            ++units;
        }
    }
    CHECK(units > 0);
    // 2 is not a square mod 13, so T^2 - 2 is irreducible and every nonzero
    // class must be a unit
    for (std::int64_t a = 0; a < 13; ++a)
        for (std::int64_t b = 0; b < 13; ++b) {
            if (a == 0 && b == 0) continue;
            RingElem e = add(make_int(k, a), mul(make_int(k, b), quotient_class(k, t)));
            CHECK(is_unit(e) == Decision::Yes);
        }
}

TEST_CASE("deep tower: polynomials over a quotient over a polynomial ring") {
    Ring p = Ring::polynomial(q(), {"T"});
    RingElem t = variable(p, 0);
    Ring k = Ring::quotient(p, sub(mul(t, t), make_int(p, 5)));  // Q[T]/(T^2-5)
    Ring kp = Ring::polynomial(k, {"X", "Y"});
    RingElem x = variable(kp, 0), y = variable(kp, 1);
    RingElem rt5 = embed_constant(kp, quotient_class(k, t));
    // (X + sqrt5 Y)(X - sqrt5 Y) = X^2 - 5 Y^2
    RingElem prod = mul(add(x, mul(rt5, y)), sub(x, mul(rt5, y)));
    CHECK(prod == sub(mul(x, x), mul(make_int(kp, 5), mul(y, y))));
    Rng rng(131);
    for (int i = 0; i < 20; ++i) {
        RingElem e = random_element(rng, kp);
        CHECK(half(add(e, e)) == e);
        CHECK(mul(e, one(kp)) == e);
    }
}

TEST_CASE("parser") {
    Ring p = Ring::polynomial(q(), {"T"});
    RingElem t = variable(p, 0);
    CHECK(parse_element(p, "T^2-5") == sub(mul(t, t), make_int(p, 5)));
    CHECK(parse_element(p, " (T+1)*(T-1) ") == sub(mul(t, t), one(p)));
    CHECK(parse_element(q(), "-3/4") == make_fraction(q(), -3, 4));
    CHECK(parse_element(p, "1/2*T") == half(t));
    CHECK_THROWS_AS(parse_element(p, "T^"), ParseError);
    CHECK_THROWS_AS(parse_element(p, "U+1"), ParseError);
    CHECK_THROWS_AS(parse_element(q(), "T"), ParseError);
    CHECK_THROWS_AS(parse_element(p, "(T+1"), ParseError);
    CHECK_THROWS_AS(parse_element(p, "T 5"), ParseError);
}

TEST_CASE("divide_exact") {
    Ring t2 = numbered_poly_ring(q(), 2, "T");
    RingElem t1 = variable(t2, 0), u2 = variable(t2, 1);
    RingElem num = sub(mul(t1, t1), mul(u2, u2));
    CHECK(divide_exact(num, sub(t1, u2)) == add(t1, u2));
    CHECK_THROWS_AS(divide_exact(add(num, one(t2)), sub(t1, u2)), DomainError);
    CHECK_THROWS_AS(divide_exact(num, zero(t2)), DomainError);
}
