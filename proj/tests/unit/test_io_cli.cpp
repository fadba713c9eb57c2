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

#include "quadcover/clirun.hpp"
#include "quadcover/random.hpp"

using namespace quadcover;

namespace {
Ring q() { return Ring::rational(); }
}

TEST_CASE("ring descriptors round-trip through JSON") {
    std::vector<json> descriptors = {
        json::parse(R"({"kind":"rational"})"),
        json::parse(R"({"kind":"modular","m":15})"),
        json::parse(R"({"kind":"polynomial","base":{"kind":"rational"},"vars":["T1","T2"]})"),
        json::parse(R"({"kind":"quotient","base":{"kind":"polynomial","base":{"kind":"rational"},
                        "vars":["T"]},"modulus":"T^2-5"})"),
    };
    for (const auto& d : descriptors) {
        Ring r = ring_from_json(d);
        CHECK(ring_from_json(ring_to_json(r)) == r);
    }
    CHECK(ring_from_json(descriptors[1]).modulus() == BigInt(15));
    CHECK(ring_from_json(descriptors[3]).kind() == RingKind::Quotient);

    CHECK_THROWS_AS(ring_from_json(json::parse(R"({"kind":"modular","m":4})")), DomainError);
    CHECK_THROWS_AS(ring_from_json(json::parse(R"({"kind":"nope"})")), ParseError);
    CHECK_THROWS_AS(ring_from_json(json::parse(R"({"m":15})")), ParseError);
}

TEST_CASE("elements round-trip through JSON across the tower") {
    Rng rng(107);
    Ring poly = Ring::polynomial(q(), {"T"});
    RingElem t = variable(poly, 0);
    std::vector<Ring> menu = {q(), Ring::modular(97), Ring::polynomial(q(), {"u", "v"}),
                              Ring::quotient(poly, sub(mul(t, t), make_int(poly, 5)))};
    for (const Ring& r : menu) {
        for (int i = 0; i < 40; ++i) {
            RingElem e = random_element(rng, r);
            CHECK(elem_from_json(r, elem_to_json(e)) == e);
        }
    }
    // convenience inputs: numbers and expression strings
    CHECK(elem_from_json(q(), json(7)) == make_int(q(), 7));
    CHECK(elem_from_json(q(), json("5/3")) == make_fraction(q(), 5, 3));
    CHECK(elem_from_json(menu[2], json("u*v-2")) ==
          sub(mul(variable(menu[2], 0), variable(menu[2], 1)), make_int(menu[2], 2)));
}

TEST_CASE("algebra elements round-trip") {
    Rng rng(113);
    Ring r = Ring::modular(97);
    for (int i = 0; i < 20; ++i) {
        AlgebraElement e{random_element(rng, r), random_element(rng, r)};
        json j = alg_element_to_json(e);
        CHECK(j.contains("a"));
        CHECK(j.contains("x"));
        CHECK(alg_element_from_json(r, j) == e);
    }
    CHECK_THROWS_AS(alg_element_from_json(r, json{{"a", 1}}), ParseError);
}

TEST_CASE("forms, algebras, actions round-trip") {
    Rng rng(109);
    for (int i = 0; i < 25; ++i) {
        BinaryForm f = random_form(rng, q());
        CHECK(form_from_json(form_to_json(f)) == f);
        Covering cov = covering_from_form(f);
        CHECK(algebra_from_json(algebra_to_json(cov.algebra)) == cov.algebra);
        CHECK(action_from_json(action_to_json(cov.action)) == cov.action);
    }
    QuadraticPolynomial g = make_polynomial(q(), one(q()), zero(q()), make_int(q(), -1),
                                            PolyConvention::Gamma2b);
    json gj = qpoly_to_json(g);
    CHECK(gj["convention"] == "gamma2b");
    QuadraticPolynomial g2 = qpoly_from_json(gj);
    CHECK((g2.a == g.a && g2.b == g.b && g2.c == g.c));
    CHECK(g2.convention == PolyConvention::Gamma2b);
}

TEST_CASE("form-to-cover command") {
    json payload = json::parse(R"({"ring":{"kind":"rational"},"a":2,"b":0,"c":2})");
    CommandOutcome res = run_command("form-to-cover", payload);
    REQUIRE(res.exit_code == 0);
    CHECK(res.document["d"] == "-1");
    CHECK(res.document["presentation"] == "T^2+4");
    CHECK(res.document["etale"] == true);
    CHECK(res.document["presentations_isomorphic"] == true);

    // outputs are self-consumable: feed the action back into cover-to-form
    CommandOutcome back = run_command("cover-to-form", res.document["action"]);
    REQUIRE(back.exit_code == 0);
    CHECK(form_from_json(back.document["form"]) == form_from_json(res.document["form"]));
    CHECK(back.document["action_recovered"] == true);
}

TEST_CASE("roundtrip command over modular 97") {
    json payload = json::parse(R"({"ring":{"kind":"modular","m":97},"count":200})");
    CommandOutcome res = run_command("roundtrip", payload, CommandOptions{0, 5});
    REQUIRE(res.exit_code == 0);
    CHECK(res.document["pass"] == 200);
    CHECK(res.document["fail"] == 0);

    // single-form mode
    json single = json::parse(R"({"form":{"ring":{"kind":"rational"},"a":2,"b":1,"c":0}})");
    CHECK(run_command("roundtrip", single).document["pass"] == 1);
}

TEST_CASE("dual and kernel-gen commands") {
    json payload = json::parse(
        R"({"ring":{"kind":"rational"},"a":1,"b":0,"c":1,"convention":"gamma_b"})");
    CommandOutcome res = run_command("dual", payload);
    REQUIRE(res.exit_code == 0);
    CHECK(res.document["form"]["a"] == "2");
    CHECK(res.document["routes_agree"] == true);

    CommandOutcome kg = run_command("kernel-gen", payload);
    REQUIRE(kg.exit_code == 0);
    CHECK(kg.document["equals_minus_gamma"] == true);
    CHECK(kg.document["kernel"][0] == "-1");
}

TEST_CASE("proj-check command") {
    json payload = json::parse(
        R"({"ring":{"kind":"rational"},"a":1,"b":0,"c":-1,"convention":"gamma2b"})");
    CommandOutcome res = run_command("proj-check", payload);
    REQUIRE(res.exit_code == 0);
    CHECK(res.document["relation_in_span"] == true);
    CHECK(res.document["algebra_text"] == "Q[T]/(T^2-1)");

    // non-primitive input is a domain error: exit 2
    json bad = json::parse(
        R"({"ring":{"kind":"modular","m":9},"a":3,"b":3,"c":3,"convention":"gamma2b"})");
    CommandOutcome err = run_command("proj-check", bad);
    CHECK(err.exit_code == 2);
    CHECK(err.document["error"]["code"] == "not_primitive");
}

TEST_CASE("discriminant command") {
    CommandOutcome res = run_command("discriminant", json{{"n", 2}});
    REQUIRE(res.exit_code == 0);
    CHECK(res.document["text"] == "S1^2-4*S2");
    CHECK(res.document["module_degree"] == -1);  // O(1-n)

    CommandOutcome capped = run_command("discriminant", json{{"n", 9}}, CommandOptions{0, 5});
    CHECK(capped.exit_code == 2);
    CHECK(capped.document["error"]["code"] == "n_too_large");

    CommandOutcome missing = run_command("discriminant", json::object());
    CHECK(missing.exit_code == 1);
}

TEST_CASE("standard, pinch, split, differentials commands") {
    CommandOutcome sc = run_command(
        "standard", json::parse(R"({"ring":{"kind":"rational"},"u":3})"));
    REQUIRE(sc.exit_code == 0);
    CHECK(sc.document["d"] == "9");
    CHECK(sc.document["embed_alpha"][0] == "-3");
    CHECK(sc.document["homomorphism_verified"] == true);

    CommandOutcome wit = run_command(
        "standard", json::parse(R"({"ring":{"kind":"modular","m":7},"d":2,"witness":3})"));
    REQUIRE(wit.exit_code == 0);
    CHECK(wit.document["accepted"] == true);
    CommandOutcome rej = run_command(
        "standard", json::parse(R"({"ring":{"kind":"rational"},"d":2,"witness":1})"));
    CHECK(rej.document["accepted"] == false);

    CommandOutcome pn = run_command(
        "pinch", json::parse(R"({"ring":{"kind":"rational"},"d":1,"t":5})"));
    REQUIRE(pn.exit_code == 0);
    CHECK(pn.document["d"] == "25");
    CHECK(pn.document["inclusion_verified"] == true);
    CHECK(pn.document["regularity_warning"] == false);

    CommandOutcome zd = run_command(
        "pinch", json::parse(R"({"ring":{"kind":"modular","m":15},"d":1,"t":3})"));
    CHECK(zd.exit_code == 2);

    CommandOutcome sp = run_command(
        "split", json::parse(R"({"ring":{"kind":"modular","m":5},"d1":3,"d2":2,"t":4})"));
    REQUIRE(sp.exit_code == 0);
    CHECK(sp.document["iso_verified"] == true);

    CommandOutcome df = run_command(
        "differentials", json::parse(R"({"ring":{"kind":"rational"},"d":"1/4"})"));
    REQUIRE(df.exit_code == 0);
    CHECK(df.document["etale"] == true);
    CHECK(df.document["annihilation_verified"] == true);
}

TEST_CASE("verify-identities command") {
    CommandOutcome res = run_command("verify-identities", json{{"trials", 6}});
    INFO(res.document.dump(2));
    CHECK(res.exit_code == 0);
    CHECK(res.document["fail"] == 0);
    CHECK(res.document["identities"].size() >= 20);
}

TEST_CASE("error handling and exit codes") {
    CHECK(run_command("no-such-command", json::object()).exit_code == 1);
    CHECK(run_command("form-to-cover", json::object()).exit_code == 1);  // missing fields
    json err = run_command("form-to-cover", json::object()).document;
    CHECK(err.contains("error"));
    CHECK(err["error"].contains("code"));
    CHECK(err["error"].contains("message"));
    CHECK(err["error"].contains("location"));

    // request-document entry point
    CommandOutcome res = run_request(json::parse(
        R"({"command":"discriminant","payload":{"n":2}})"));
    CHECK(res.exit_code == 0);
    CHECK(run_request(json::parse(R"({"payload":{}})")).exit_code == 1);
}
