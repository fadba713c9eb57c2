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

#ifndef QUADCOVER_CLIRUN_HPP
#define QUADCOVER_CLIRUN_HPP

#include <cstdint>
#include <string>

#include "quadcover/identities.hpp"
#include "quadcover/io.hpp"
#include "quadcover/normfunctor.hpp"
#include "quadcover/random.hpp"
#include "quadcover/symcover.hpp"

namespace quadcover {

// Batch front end: one JSON document in, one JSON document out.
// Exit codes: 0 success, 1 malformed input, 2 domain error.

struct CommandOutcome {
    json document;
    int exit_code = 0;
};

struct CommandOptions {
    std::uint64_t seed = 0;
    std::size_t max_n = 5;  // cap for symmetric-group sizes (QUADCOVER_MAX_N)
};

namespace cli_detail {

inline json error_document(const Error& e, const char* fallback_location) {
    return json{{"error",
                 {{"code", e.code()},
                  {"message", e.what()},
                  {"location", e.location().empty() ? fallback_location : e.location()}}}};
}

inline json covering_to_json(const BinaryForm& f, const Covering& cov) {
    RingElem tvar_poly = detail::dense_to_poly(
        cov.t_presentation.base(), cov.t_presentation.quotient_modulus());
    return json{{"d", elem_to_json(cov.algebra.d)},
                {"presentation", to_string(tvar_poly)},
                {"t_disc", elem_to_json(cov.t_disc)},
                {"etale", decision_to_json(cov.etale)},
                {"presentations_isomorphic", cov.presentations_isomorphic},
                {"algebra", algebra_to_json(cov.algebra)},
                {"action", action_to_json(cov.action)},
                {"form", form_to_json(to_phi(f))}};
}

inline json run_form_to_cover(const json& payload) {
    BinaryForm f = form_from_json(payload.contains("form") ? payload["form"] : payload);
    return covering_to_json(f, covering_from_form(f));
}

inline json run_cover_to_form(const json& payload) {
    ModuleAction act = action_from_json(payload);
    QuadraticAlgebra alg{act.ring, act.d};
    CoverModulePair pair = make_cover_module(alg, act);
    BinaryForm f = norm_form(pair);
    ModuleAction rebuilt = alpha_matrix(f);
    return json{{"form", form_to_json(f)},
                {"a", elem_to_json(f.a)},
                {"b", elem_to_json(f.b)},
                {"c", elem_to_json(f.c)},
                {"action_recovered", rebuilt == act}};
}

inline json run_roundtrip(const json& payload, const CommandOptions& opt) {
    if (payload.contains("form")) {
        BinaryForm f = form_from_json(payload["form"]);
        RoundtripReport rep = roundtrip_form(f);
        return json{{"pass", rep.pass ? 1 : 0},
                    {"fail", rep.pass ? 0 : 1},
                    {"first_difference", rep.first_difference}};
    }
    if (!payload.contains("ring"))
        throw ParseError("bad_request", "roundtrip needs a 'form' or a 'ring' with 'count'");
    Ring r = ring_from_json(payload["ring"]);
    const int count = payload.value("count", 200);
    Rng rng(opt.seed);
    int pass = 0, fail = 0;
    json first;
    for (int i = 0; i < count; ++i) {
        BinaryForm f = random_form(rng, r);
        RoundtripReport rep = roundtrip_form(f);
        if (rep.pass)
            ++pass;
        else {
            if (fail == 0)
                first = json{{"form", form_to_json(f)}, {"difference", rep.first_difference}};
            ++fail;
        }
    }
    json out{{"pass", pass}, {"fail", fail}};
    if (fail) out["first_failure"] = first;
    return out;
}

inline json run_dual(const json& payload) {
    QuadraticPolynomial g = qpoly_from_json(payload.contains("gamma") ? payload["gamma"] : payload);
    BinaryForm f = dual_form(g);
    ModuleAction direct = alpha_from_polynomial(g);
    return json{{"form", form_to_json(f)},
                {"action", action_to_json(direct)},
                {"routes_agree", direct == alpha_matrix(f)}};
}

inline json run_kernel_gen(const json& payload) {
    QuadraticPolynomial g = qpoly_from_json(payload.contains("gamma") ? payload["gamma"] : payload);
    KernelGenerator k = kernel_generator(g);
    return json{{"kernel",
                 json::array({elem_to_json(k.sym2_coords[0]), elem_to_json(k.sym2_coords[1]),
                              elem_to_json(k.sym2_coords[2])})},
                {"equals_minus_gamma", k.equals_minus_gamma}};
}

inline json run_proj_check(const json& payload) {
    QuadraticPolynomial g = qpoly_from_json(payload.contains("gamma") ? payload["gamma"] : payload);
    ProjSpecReport rep = proj_spec_check(g);
    return json{{"algebra", ring_to_json(rep.algebra)},
                {"algebra_text", rep.algebra.description()},
                {"disc", elem_to_json(rep.disc)},
                {"action", mat2_to_json(rep.action)},
                {"generator", json::array({elem_to_json(rep.generator.x),
                                           elem_to_json(rep.generator.y)})},
                {"generator_value", elem_to_json(rep.generator_value)},
                {"relation_in_span", rep.relation_in_span},
                {"etale", decision_to_json(rep.etale)}};
}

inline json run_discriminant(const json& payload, const CommandOptions& opt) {
    if (!payload.contains("n"))
        throw ParseError("bad_request", "discriminant needs the field 'n'");
    const std::int64_t n = payload["n"].get<std::int64_t>();
    if (n < 2) throw DomainError("bad_index", "discriminant needs n >= 2");
    if (static_cast<std::size_t>(n) > opt.max_n)
        throw DomainError("n_too_large",
                          "n exceeds the configured cap (QUADCOVER_MAX_N = " +
                              std::to_string(opt.max_n) + ")");
    Ring base = payload.contains("ring") ? ring_from_json(payload["ring"]) : Ring::rational();
    SymmetricReduction disc = generic_discriminant(base, static_cast<std::size_t>(n));
    return json{{"n", n},
                {"ring", ring_to_json(disc.s_ring)},
                {"poly", elem_to_json(disc.reduced)},
                {"text", to_string(disc.reduced)},
                // the associated invertible module of the cover is O(1-n)
                {"module_degree", 1 - n}};
}

inline json run_standard(const json& payload, const CommandOptions& opt) {
    if (!payload.contains("ring"))
        throw ParseError("bad_request", "standard needs a 'ring'");
    Ring r = ring_from_json(payload["ring"]);
    if (payload.contains("u")) {
        StandardCover sc = standard_cover(r, elem_from_json(r, payload["u"]));
        Rng rng(opt.seed);
        bool hom = true;
        for (int i = 0; i < 50; ++i) {
            AlgebraElement a{random_element(rng, r), random_element(rng, r)};
            AlgebraElement b{random_element(rng, r), random_element(rng, r)};
            auto pa = sc.embed(a), pb = sc.embed(b), pm = sc.embed(alg_mul(sc.algebra, a, b));
            hom = hom && pm.first == mul(pa.first, pb.first) &&
                  pm.second == mul(pa.second, pb.second);
        }
        auto alpha_image = sc.embed(alg_alpha(sc.algebra));
        return json{{"d", elem_to_json(sc.algebra.d)},
                    {"algebra", algebra_to_json(sc.algebra)},
                    {"embed_alpha", json::array({elem_to_json(alpha_image.first),
                                                 elem_to_json(alpha_image.second)})},
                    {"homomorphism_verified", hom}};
    }
    if (payload.contains("d")) {
        QuadraticAlgebra alg = make_algebra(r, elem_from_json(r, payload["d"]));
        if (payload.contains("witness")) {
            auto sec = section_witness_check(alg, elem_from_json(r, payload["witness"]));
            json out{{"accepted", sec.has_value()}};
            if (sec) out["section_of_alpha"] = elem_to_json(sec->witness);
            return out;
        }
        auto [dec, wit] = find_section_witness(alg);
        json out{{"standard", decision_to_json(dec)}};
        if (wit) out["witness"] = elem_to_json(wit->witness);
        return out;
    }
    throw ParseError("bad_request", "standard needs 'u' (construct) or 'd' [+ 'witness'] (check)");
}

inline json run_pinch(const json& payload) {
    if (!payload.contains("ring") || !payload.contains("d") || !payload.contains("t"))
        throw ParseError("bad_request", "pinch needs 'ring', 'd' and 't'");
    Ring r = ring_from_json(payload["ring"]);
    QuadraticAlgebra aprime = make_algebra(r, elem_from_json(r, payload["d"]));
    PinchResult res = pinch(aprime, elem_from_json(r, payload["t"]));
    return json{{"d", elem_to_json(res.algebra.d)},
                {"algebra", algebra_to_json(res.algebra)},
                {"regularity", decision_to_json(res.regularity)},
                {"regularity_warning", res.regularity != Decision::Yes},
                {"inclusion_verified", res.inclusion_verified}};
}

inline json run_split(const json& payload) {
    if (!payload.contains("ring") || !payload.contains("d1") || !payload.contains("d2") ||
        !payload.contains("t"))
        throw ParseError("bad_request", "split needs 'ring', 'd1', 'd2' and 't'");
    Ring r = ring_from_json(payload["ring"]);
    QuadraticAlgebra a1 = make_algebra(r, elem_from_json(r, payload["d1"]));
    QuadraticAlgebra a2 = make_algebra(r, elem_from_json(r, payload["d2"]));
    SplittingBaseChange res = splitting_base_change(a1, a2, elem_from_json(r, payload["t"]));
    return json{{"extension", ring_to_json(res.extension)},
                {"extension_text", res.extension.description()},
                {"iso_verified", res.iso_verified}};
}

inline json run_differentials(const json& payload) {
    if (!payload.contains("ring") || !payload.contains("d"))
        throw ParseError("bad_request", "differentials needs 'ring' and 'd'");
    Ring r = ring_from_json(payload["ring"]);
    DifferentialsReport rep =
        differentials_annihilator(make_algebra(r, elem_from_json(r, payload["d"])));
    return json{{"annihilator", elem_to_json(rep.annihilator)},
                {"etale", decision_to_json(rep.etale)},
                {"annihilation_verified", rep.annihilation_verified}};
}

inline json run_verify_identities(const json& payload, const CommandOptions& opt) {
    const int trials = payload.is_object() ? payload.value("trials", 50) : 50;
    auto results = run_identity_suite(opt.seed, trials);
    json items = json::array();
    int passed = 0;
    for (const auto& r : results) {
        json item{{"name", r.name}, {"pass", r.pass}};
        if (!r.detail.empty()) item["detail"] = r.detail;
        items.push_back(std::move(item));
        if (r.pass) ++passed;
    }
    return json{{"identities", items},
                {"pass", passed},
                {"fail", static_cast<int>(results.size()) - passed}};
}

}  // namespace cli_detail

inline CommandOutcome run_command(const std::string& command, const json& payload,
                                  const CommandOptions& opt = {}) {
    using namespace cli_detail;
    try {
        if (command == "form-to-cover") return {run_form_to_cover(payload), 0};
        if (command == "cover-to-form") return {run_cover_to_form(payload), 0};
        if (command == "roundtrip") return {run_roundtrip(payload, opt), 0};
        if (command == "dual") return {run_dual(payload), 0};
        if (command == "kernel-gen") return {run_kernel_gen(payload), 0};
        if (command == "proj-check") return {run_proj_check(payload), 0};
        if (command == "discriminant") return {run_discriminant(payload, opt), 0};
        if (command == "standard") return {run_standard(payload, opt), 0};
        if (command == "pinch") return {run_pinch(payload), 0};
        if (command == "split") return {run_split(payload), 0};
        if (command == "differentials") return {run_differentials(payload), 0};
        if (command == "verify-identities") {
            json doc = run_verify_identities(payload, opt);
            return {doc, doc["fail"].get<int>() == 0 ? 0 : 2};
        }
        return {json{{"error",
                      {{"code", "unknown_command"},
                       {"message", "unknown command '" + command + "'"},
                       {"location", "command"}}}},
                1};
    } catch (const ParseError& e) {
        return {error_document(e, "payload"), 1};
    } catch (const DomainError& e) {
        return {error_document(e, "payload"), 2};
    } catch (const Cancelled& e) {
        return {error_document(e, "payload"), 2};
    } catch (const json::exception& e) {
        return {json{{"error",
                      {{"code", "bad_json"}, {"message", e.what()}, {"location", "payload"}}}},
                1};
    }
}

/// Whole-document entry point: {"command": ..., "payload": ...}.
inline CommandOutcome run_request(const json& request, const CommandOptions& opt = {}) {
    if (!request.is_object() || !request.contains("command") || !request["command"].is_string())
        return {json{{"error",
                      {{"code", "bad_request"},
                       {"message", "request needs a string field 'command'"},
                       {"location", "request"}}}},
                1};
    json payload = request.contains("payload") ? request["payload"] : json::object();
    return run_command(request["command"].get<std::string>(), payload, opt);
}

}  // namespace quadcover

#endif  // QUADCOVER_CLIRUN_HPP
