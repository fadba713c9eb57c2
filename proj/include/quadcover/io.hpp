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

#ifndef QUADCOVER_IO_HPP
#define QUADCOVER_IO_HPP

#include <string>

#include <json.hpp>

#include "quadcover/binforms.hpp"
#include "quadcover/linalg.hpp"
#include "quadcover/parse.hpp"
#include "quadcover/polyduality.hpp"
#include "quadcover/quadalg.hpp"
#include "quadcover/rings.hpp"

namespace quadcover {

using json = nlohmann::json;

// Ring descriptors:
//   {"kind":"rational"}
//   {"kind":"modular","m":15}
//   {"kind":"polynomial","base":...,"vars":["T1","T2"]}
//   {"kind":"quotient","base":...,"modulus":"T^2-5"}
// Elements: integer-string scalars; polynomials as sparse monomial lists
// [{"m":[2,0],"c":"1"}, ...]. Inputs also accept plain integers and
// expression strings; outputs always use the canonical shape.

inline json ring_to_json(const Ring& r) {
    switch (r.kind()) {
        case RingKind::Rational: return json{{"kind", "rational"}};
        case RingKind::Modular: {
            json j{{"kind", "modular"}};
            if (r.modulus().fits_int64())
                j["m"] = r.modulus().to_int64();
            else
                j["m"] = r.modulus().to_string();
            return j;
        }
        case RingKind::Polynomial:
            return json{{"kind", "polynomial"}, {"base", ring_to_json(r.base())},
                        {"vars", r.vars()}};
        case RingKind::Quotient: {
            Ring base = r.base();
            RingElem mod = detail::dense_to_poly(base, r.quotient_modulus());
            return json{{"kind", "quotient"}, {"base", ring_to_json(base)},
                        {"modulus", to_string(mod)}};
        }
    }
    throw DomainError("bad_ring", "unknown ring kind");
}

inline RingElem elem_from_json(const Ring& r, const json& j);

inline Ring ring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("bad_ring", "ring descriptor needs a string field 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "rational") return Ring::rational();
    if (kind == "modular") {
        if (!j.contains("m")) throw ParseError("bad_ring", "modular descriptor needs 'm'");
        BigInt m = j["m"].is_string() ? BigInt(j["m"].get<std::string>())
                                      : BigInt(j["m"].get<std::int64_t>());
        return Ring::modular(std::move(m));
    }
    if (kind == "polynomial") {
        if (!j.contains("base") || !j.contains("vars"))
            throw ParseError("bad_ring", "polynomial descriptor needs 'base' and 'vars'");
        std::vector<std::string> vars = j["vars"].get<std::vector<std::string>>();
        return Ring::polynomial(ring_from_json(j["base"]), std::move(vars));
    }
    if (kind == "quotient") {
        if (!j.contains("base") || !j.contains("modulus"))
            throw ParseError("bad_ring", "quotient descriptor needs 'base' and 'modulus'");
        Ring base = ring_from_json(j["base"]);
        RingElem mod = elem_from_json(base, j["modulus"]);
        return Ring::quotient(base, mod);
    }
    throw ParseError("bad_ring", "unknown ring kind '" + kind + "'");
}

inline json elem_to_json(const RingElem& e) {
    switch (e.kind()) {
        case RingKind::Rational:
        case RingKind::Modular:
            return to_string(e);
        case RingKind::Polynomial: {
            json terms = json::array();
            for (std::size_t i = 0; i < e.term_count(); ++i) {
                terms.push_back(json{{"m", e.mono(i).exp}, {"c", elem_to_json(e.coeff(i))}});
            }
            return terms;
        }
        case RingKind::Quotient: {
            json terms = json::array();
            const auto& coeffs = e.quot().coeffs;
            for (std::size_t d = 0; d < coeffs.size(); ++d) {
                if (coeffs[d].is_zero()) continue;
                terms.push_back(json{{"m", json::array({d})}, {"c", elem_to_json(coeffs[d])}});
            }
            return terms;
        }
    }
    throw DomainError("bad_ring", "unknown ring kind");
}

inline RingElem elem_from_json(const Ring& r, const json& j) {
    if (j.is_number_integer()) return make_int(r, j.get<std::int64_t>());
    if (j.is_string()) return parse_element(r, j.get<std::string>());
    if (j.is_array()) {
        const Ring poly_ring = r.kind() == RingKind::Quotient ? r.base() : r;
        if (poly_ring.kind() != RingKind::Polynomial)
            throw ParseError("bad_element", "sparse term lists need a polynomial ring");
        std::vector<std::pair<Monomial, RingElem>> terms;
        for (const auto& t : j) {
            if (!t.is_object() || !t.contains("m") || !t.contains("c"))
                throw ParseError("bad_element", "each term needs fields 'm' and 'c'");
            Monomial m{t["m"].get<std::vector<std::uint32_t>>()};
            terms.emplace_back(std::move(m), elem_from_json(poly_ring.base(), t["c"]));
        }
        RingElem rep = poly_from_terms(poly_ring, std::move(terms));
        return r.kind() == RingKind::Quotient ? quotient_class(r, rep) : rep;
    }
    throw ParseError("bad_element", "element must be an integer, a string or a term list");
}

inline json decision_to_json(Decision d) {
    switch (d) {
        case Decision::Yes: return true;
        case Decision::No: return false;
        default: return "undecided";
    }
}

// --- algebra / form / matrix shapes ----------------------------------------

inline json algebra_to_json(const QuadraticAlgebra& a) {
    return json{{"ring", ring_to_json(a.ring)}, {"d", elem_to_json(a.d)}};
}

inline QuadraticAlgebra algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("d"))
        throw ParseError("bad_algebra", "algebra needs 'ring' and 'd'");
    Ring r = ring_from_json(j["ring"]);
    return make_algebra(r, elem_from_json(r, j["d"]));
}

inline json alg_element_to_json(const AlgebraElement& e) {
    return json{{"a", elem_to_json(e.a)}, {"x", elem_to_json(e.x)}};
}

inline AlgebraElement alg_element_from_json(const Ring& r, const json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("x"))
        throw ParseError("bad_element", "algebra element needs 'a' and 'x'");
    return AlgebraElement{elem_from_json(r, j["a"]), elem_from_json(r, j["x"])};
}

inline json form_to_json(const BinaryForm& f) {
    return json{{"ring", ring_to_json(f.ring)},
                {"a", elem_to_json(f.a)},
                {"b", elem_to_json(f.b)},
                {"c", elem_to_json(f.c)},
                {"convention", f.convention == FormConvention::Phi ? "phi" : "gamma2b"}};
}

inline BinaryForm form_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ring"))
        throw ParseError("bad_form", "form needs 'ring', 'a', 'b', 'c'");
    Ring r = ring_from_json(j["ring"]);
    for (const char* k : {"a", "b", "c"})
        if (!j.contains(k)) throw ParseError("bad_form", std::string("form needs '") + k + "'");
    FormConvention conv = FormConvention::Phi;
    if (j.contains("convention")) {
        const std::string c = j["convention"].get<std::string>();
        if (c == "phi") conv = FormConvention::Phi;
        else if (c == "gamma2b") conv = FormConvention::Gamma2b;
        else throw ParseError("bad_form", "unknown form convention '" + c + "'");
    }
    return make_form(r, elem_from_json(r, j["a"]), elem_from_json(r, j["b"]),
                     elem_from_json(r, j["c"]), conv);
}

inline json mat2_to_json(const Mat2& m) {
    return json::array({json::array({elem_to_json(m.a), elem_to_json(m.b)}),
                        json::array({elem_to_json(m.c), elem_to_json(m.d)})});
}

inline Mat2 mat2_from_json(const Ring& r, const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw ParseError("bad_matrix", "matrix must be a row-major 2x2 array");
    return Mat2{elem_from_json(r, j[0][0]), elem_from_json(r, j[0][1]),
                elem_from_json(r, j[1][0]), elem_from_json(r, j[1][1])};
}

inline json action_to_json(const ModuleAction& a) {
    return json{{"ring", ring_to_json(a.ring)}, {"matrix", mat2_to_json(a.m)},
                {"d", elem_to_json(a.d)}};
}

inline ModuleAction action_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("matrix") || !j.contains("d"))
        throw ParseError("bad_action", "action needs 'ring', 'matrix' and 'd'");
    Ring r = ring_from_json(j["ring"]);
    return make_action(r, mat2_from_json(r, j["matrix"]), elem_from_json(r, j["d"]));
}

inline json qpoly_to_json(const QuadraticPolynomial& g) {
    return json{{"ring", ring_to_json(g.ring)},
                {"a", elem_to_json(g.a)},
                {"b", elem_to_json(g.b)},
                {"c", elem_to_json(g.c)},
                {"convention", g.convention == PolyConvention::GammaB ? "gamma_b" : "gamma2b"}};
}

inline QuadraticPolynomial qpoly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ring"))
        throw ParseError("bad_polynomial", "polynomial needs 'ring', 'a', 'b', 'c'");
    Ring r = ring_from_json(j["ring"]);
    for (const char* k : {"a", "b", "c"})
        if (!j.contains(k))
            throw ParseError("bad_polynomial", std::string("polynomial needs '") + k + "'");
    PolyConvention conv = PolyConvention::GammaB;
    if (j.contains("convention")) {
        const std::string c = j["convention"].get<std::string>();
        if (c == "gamma_b") conv = PolyConvention::GammaB;
        else if (c == "gamma2b") conv = PolyConvention::Gamma2b;
        else throw ParseError("bad_polynomial", "unknown polynomial convention '" + c + "'");
    }
    return make_polynomial(r, elem_from_json(r, j["a"]), elem_from_json(r, j["b"]),
                           elem_from_json(r, j["c"]), conv);
}

}  // namespace quadcover

#endif  // QUADCOVER_IO_HPP
