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

#ifndef QUADCOVER_IDENTITIES_HPP
#define QUADCOVER_IDENTITIES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "quadcover/binforms.hpp"
#include "quadcover/normfunctor.hpp"
#include "quadcover/polyduality.hpp"
#include "quadcover/quadalg.hpp"
#include "quadcover/random.hpp"
#include "quadcover/symcover.hpp"
#include "quadcover/sympoly.hpp"

namespace quadcover {

// Executable form of the per-module laws: every formula the library relies
// on, run against seeded random data plus the decisive symbolic instances.
// The CLI's verify-identities subcommand reports one line per entry.

struct IdentityResult {
    std::string name;
    bool pass;
    std::string detail;
};

namespace detail {

inline std::vector<Ring> identity_ring_menu() {
    Ring q = Ring::rational();
    Ring poly = Ring::polynomial(q, {"T"});
    RingElem t = variable(poly, 0);
    return {q, Ring::modular(97), Ring::modular(15),
            Ring::polynomial(q, {"u", "v"}),
            Ring::quotient(poly, sub(mul(t, t), make_int(poly, 5)))};
}

/// Random symmetric polynomial: a random S-polynomial evaluated at the
/// elementary symmetric polynomials.
inline RingElem random_symmetric(Rng& rng, const Ring& tring, int sterms = 2) {
    const std::size_t n = tring.var_count();
    Ring sring = numbered_poly_ring(tring.base(), n, "S");
    std::vector<std::pair<Monomial, RingElem>> terms;
    for (int t = 0; t < sterms; ++t) {
        Monomial m{std::vector<std::uint32_t>(n, 0)};
        for (auto& e : m.exp) e = static_cast<std::uint32_t>(rng.range(0, 2));
        terms.emplace_back(std::move(m), random_element(rng, tring.base(), 5));
    }
    RingElem spoly = poly_from_terms(sring, std::move(terms));
    std::vector<RingElem> elem;
    for (std::size_t k = 1; k <= n; ++k) elem.push_back(elem_symmetric(tring, k));
    return substitute_into(spoly, tring, elem);
}

}  // namespace detail

inline std::vector<IdentityResult> run_identity_suite(std::uint64_t seed, int trials = 50) {
    std::vector<IdentityResult> out;
    auto check = [&](const std::string& name, const std::function<bool(Rng&)>& body) {
        Rng rng(seed ^ std::hash<std::string>{}(name));
        try {
            bool ok = body(rng);
            out.push_back({name, ok, ok ? "" : "identity violated"});
        } catch (const std::exception& e) {
            out.push_back({name, false, e.what()});
        }
    };
    const std::vector<Ring> menu = detail::identity_ring_menu();
    const Ring q = Ring::rational();

    // ----- rings ------------------------------------------------------------
    check("rings.neutral_elements", [&](Rng& rng) {
        for (const Ring& r : menu)
            for (int i = 0; i < trials; ++i) {
                RingElem e = random_element(rng, r);
                if (add(e, zero(r)) != e || mul(e, one(r)) != e) return false;
            }
        return true;
    });
    check("rings.half_doubling", [&](Rng& rng) {
        for (const Ring& r : menu)
            for (int i = 0; i < trials; ++i) {
                RingElem e = random_element(rng, r);
                if (add(half(e), half(e)) != e) return false;
                if (half(add(e, e)) != e) return false;
            }
        return true;
    });
    check("rings.symmetric_reduce_ring_map", [&](Rng& rng) {
        Ring t3 = numbered_poly_ring(q, 3, "T");
        for (int i = 0; i < 8; ++i) {
            RingElem p = detail::random_symmetric(rng, t3);
            RingElem s = detail::random_symmetric(rng, t3);
            auto rp = symmetric_reduce(p), rs = symmetric_reduce(s);
            if (symmetric_reduce(mul(p, s)).reduced != mul(rp.reduced, rs.reduced)) return false;
            if (symmetric_reduce(add(p, s)).reduced != add(rp.reduced, rs.reduced)) return false;
        }
        return true;
    });
    check("rings.reduce_substitute_compat", [&](Rng& rng) {
        Ring t3 = numbered_poly_ring(q, 3, "T");
        for (int i = 0; i < 8; ++i) {
            RingElem p = detail::random_symmetric(rng, t3);
            auto red = symmetric_reduce(p);
            std::vector<RingElem> tvals;
            for (std::size_t k = 0; k < 3; ++k) tvals.push_back(random_element(rng, q, 5));
            std::vector<RingElem> evals;
            for (std::size_t k = 1; k <= 3; ++k)
                evals.push_back(substitute(elem_symmetric(t3, k), tvals));
            if (substitute(red.reduced, evals) != substitute(p, tvals)) return false;
        }
        return true;
    });

    // ----- quadalg ----------------------------------------------------------
    check("quadalg.mul_commutative_associative_unital", [&](Rng& rng) {
        for (const Ring& r : menu)
            for (int i = 0; i < trials / 2; ++i) {
                QuadraticAlgebra alg{r, random_element(rng, r)};
                AlgebraElement u{random_element(rng, r), random_element(rng, r)};
                AlgebraElement v{random_element(rng, r), random_element(rng, r)};
                AlgebraElement w{random_element(rng, r), random_element(rng, r)};
                if (!(alg_mul(alg, u, v) == alg_mul(alg, v, u))) return false;
                if (!(alg_mul(alg, alg_mul(alg, u, v), w) ==
                      alg_mul(alg, u, alg_mul(alg, v, w))))
                    return false;
                if (!(alg_mul(alg, u, alg_one(alg)) == u)) return false;
            }
        return true;
    });
    check("quadalg.trace_norm_conjugation", [&](Rng& rng) {
        for (const Ring& r : menu)
            for (int i = 0; i < trials / 2; ++i) {
                QuadraticAlgebra alg{r, random_element(rng, r)};
                AlgebraElement u{random_element(rng, r), random_element(rng, r)};
                CharData cd = char_data(alg, u);
                if (!(alg_mul(alg, u, cd.conj) == AlgebraElement{cd.norm, zero(r)})) return false;
                if (!(alg_add(u, cd.conj) == AlgebraElement{cd.trace, zero(r)})) return false;
                AlgebraElement pure{zero(r), random_element(rng, r)};
                CharData pd = char_data(alg, pure);
                if (!(alg_mul(alg, pure, pure) == AlgebraElement{neg(pd.norm), zero(r)}))
                    return false;
            }
        return true;
    });
    check("quadalg.polarization", [&](Rng& rng) {
        for (const Ring& r : menu)
            for (int i = 0; i < trials / 2; ++i) {
                RingElem d = random_element(rng, r);
                RingElem x = random_element(rng, r), y = random_element(rng, r);
                RingElem lhs = mul(mul(x, y), d);
                RingElem sum = mul(mul(add(x, y), add(x, y)), d);
                RingElem rhs = half(sub(sub(sum, mul(mul(x, x), d)), mul(mul(y, y), d)));
                if (lhs != rhs) return false;
            }
        return true;
    });
    check("quadalg.standard_embed_homomorphism", [&](Rng& rng) {
        for (const Ring& r : menu)
            for (int i = 0; i < trials / 2; ++i) {
                StandardCover sc = standard_cover(r, random_element(rng, r));
                AlgebraElement u{random_element(rng, r), random_element(rng, r)};
                AlgebraElement v{random_element(rng, r), random_element(rng, r)};
                auto pu = sc.embed(u), pv = sc.embed(v), pm = sc.embed(alg_mul(sc.algebra, u, v));
                auto ps = sc.embed(alg_add(u, v));
                if (pm.first != mul(pu.first, pv.first) || pm.second != mul(pu.second, pv.second))
                    return false;
                if (ps.first != add(pu.first, pv.first) || ps.second != add(pu.second, pv.second))
                    return false;
                if (char_data(sc.algebra, u).trace != add(pu.first, pu.second)) return false;
            }
        return true;
    });
    check("quadalg.section_iff_square", [&](Rng&) {
        for (std::int64_t p : {3, 5, 7, 11, 13}) {
            Ring zp = Ring::modular(p);
            for (std::int64_t d = 0; d < p; ++d) {
                QuadraticAlgebra alg{zp, make_int(zp, d)};
                bool square = false;  // independent enumeration of squares
                for (std::int64_t w = 0; w < p; ++w) square = square || (w * w) % p == d;
                auto [dec, wit] = find_section_witness(alg);
                if ((dec == Decision::Yes) != square) return false;
                if (wit && !section_witness_check(alg, wit->witness)) return false;
            }
        }
        return true;
    });
    check("quadalg.differentials_match_diramation", [&](Rng&) {
        Ring z15 = Ring::modular(15);
        for (std::int64_t d = 0; d < 15; ++d) {
            auto rep = differentials_annihilator(QuadraticAlgebra{z15, make_int(z15, d)});
            auto dir = diramation(QuadraticAlgebra{z15, make_int(z15, d)});
            if (rep.annihilator != dir.generator || !rep.annihilation_verified) return false;
        }
        Ring qs = Ring::polynomial(q, {"s"});
        auto rep = differentials_annihilator(QuadraticAlgebra{qs, variable(qs, 0)});
        return rep.annihilator == variable(qs, 0) && rep.annihilation_verified;
    });

    // ----- binforms ---------------------------------------------------------
    check("binforms.determinant_law", [&](Rng& rng) {
        for (const Ring& r : menu)
            for (int i = 0; i < trials; ++i) {
                ModuleAction act = alpha_matrix(random_form(rng, r));
                if (act.d != neg(act.m.det())) return false;
            }
        return true;
    });
    check("binforms.action_squares_to_d", [&](Rng& rng) {
        for (int i = 0; i < trials; ++i) {
            ModuleAction act = alpha_matrix(random_form(rng, q));
            Vec2 v = random_vec(rng, q);
            Vec2 lhs = act.m.apply(act.m.apply(v));
            if (!(lhs == Vec2{mul(act.d, v.x), mul(act.d, v.y)})) return false;
        }
        return true;
    });
    check("binforms.defining_relation", [&](Rng& rng) {
        for (const Ring& r : menu)
            for (int i = 0; i < trials / 2; ++i) {
                BinaryForm f = random_form(rng, r);
                if (!defining_relation_holds(f, alpha_matrix(f))) return false;
            }
        return true;
    });
    check("binforms.exterior_symmetry", [&](Rng& rng) {
        const Ring r = Ring::modular(97);
        for (int i = 0; i < trials; ++i) {
            ModuleAction act = alpha_matrix(random_form(rng, r));
            Vec2 e1{one(r), zero(r)}, e2{zero(r), one(r)};
            if (wedge(e1, act.m.apply(e2)) != wedge(e2, act.m.apply(e1))) return false;
        }
        return true;
    });
    check("binforms.etale_iff_disc_unit", [&](Rng& rng) {
        for (const Ring& r : menu)
            for (int i = 0; i < trials / 2; ++i) {
                BinaryForm f = random_form(rng, r);
                Covering cov = covering_from_form(f);
                RingElem disc = sub(mul(f.b, f.b), mul(f.a, f.c));
                if (cov.etale != is_unit(disc)) return false;
                if (!cov.presentations_isomorphic) return false;
            }
        return true;
    });

    // ----- normfunctor ------------------------------------------------------
    check("normfunctor.nu_equals_q_symbolic", [&](Rng&) {
        Ring g = Ring::polynomial(q, {"a", "b", "c", "x", "y"});
        RingElem a = variable(g, 0), b = variable(g, 1), c = variable(g, 2);
        RingElem x = variable(g, 3), y = variable(g, 4);
        BinaryForm f = make_form(g, a, b, c);
        ModuleAction act = alpha_matrix(f);
        RingElem nu = norm_value(CoverModulePair{QuadraticAlgebra{g, act.d}, act}, x, y);
        return nu == eval_quadratic(f, x, y);
    });
    check("normfunctor.roundtrip_both_ways", [&](Rng& rng) {
        for (const Ring& r : {q, Ring::modular(97)})
            for (int i = 0; i < trials; ++i) {
                if (!roundtrip_form(random_form(rng, r)).pass) return false;
                // arbitrary trace-zero matrix squares to a scalar: a valid pair
                Mat2 m = random_trace_zero(rng, r);
                RingElem d = neg(m.det());
                CoverModulePair p{QuadraticAlgebra{r, d}, make_action(r, m, d)};
                if (!(action_from_norm(p) == p.action)) return false;
            }
        return true;
    });
    check("normfunctor.skew_symmetry_symbolic", [&](Rng& rng) {
        Ring g = Ring::polynomial(q, {"m11", "m12", "m21", "x1", "x2", "y1", "y2"});
        RingElem m11 = variable(g, 0), m12 = variable(g, 1), m21 = variable(g, 2);
        Mat2 m{m11, m12, m21, neg(m11)};
        Vec2 v{variable(g, 3), variable(g, 4)}, w{variable(g, 5), variable(g, 6)};
        if (!skew_symmetry_check(m, v, w)) return false;
        Ring z11 = Ring::modular(11);
        for (int i = 0; i < trials; ++i) {
            if (!skew_symmetry_check(random_trace_zero(rng, z11), random_vec(rng, z11),
                                     random_vec(rng, z11)))
                return false;
        }
        return true;
    });
    check("normfunctor.transfer_composition", [&](Rng& rng) {
        for (int i = 0; i < trials / 2; ++i) {
            BinaryForm f3 = random_form(rng, q);
            Mat2 t2 = random_regular_matrix(rng, q);
            Mat2 t1 = random_regular_matrix(rng, q);
            BinaryForm f2 = pullback_form(t2, f3);
            BinaryForm f1 = pullback_form(t1, f2);
            auto m1 = make_morphism(t1, f1, f2);
            auto m2 = make_morphism(t2, f2, f3);
            auto comp = make_morphism(t2 * t1, f1, f3);
            auto r1 = transfer_morphism(m1), r2 = transfer_morphism(m2),
                 rc = transfer_morphism(comp);
            if (rc.psi_scalar != mul(r1.psi_scalar, r2.psi_scalar)) return false;
            if (!r1.action_square_ok || !r2.action_square_ok || !rc.action_square_ok) return false;
            if (!r1.multiplication_ok || !r2.multiplication_ok || !rc.multiplication_ok)
                return false;
        }
        return true;
    });

    // ----- polyduality ------------------------------------------------------
    check("polyduality.duality_matrix_unit_and_square", [&](Rng&) {
        auto m = duality_matrix(q);
        RingElem det = det3(m);
        if (is_unit(det) != Decision::Yes) return false;
        // matrix^2 = diag(4, 1, 4)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                RingElem s = zero(q);
                for (int k = 0; k < 3; ++k) s = add(s, mul(m[i][k], m[k][j]));
                RingElem want = i != j ? zero(q) : (i == 1 ? one(q) : make_int(q, 4));
                if (s != want) return false;
            }
        return true;
    });
    check("polyduality.route_independence", [&](Rng& rng) {
        for (const Ring& r : menu)
            for (int i = 0; i < trials / 2; ++i) {
                QuadraticPolynomial g = make_polynomial(r, random_element(rng, r),
                                                        random_element(rng, r),
                                                        random_element(rng, r));
                if (!(alpha_from_polynomial(g) == alpha_matrix(dual_form(g)))) return false;
            }
        return true;
    });
    check("polyduality.kernel_generator_symbolic", [&](Rng& rng) {
        Ring g = Ring::polynomial(q, {"a", "b", "c"});
        QuadraticPolynomial gamma =
            make_polynomial(g, variable(g, 0), variable(g, 1), variable(g, 2));
        if (!kernel_generator(gamma).equals_minus_gamma) return false;
        Ring z13 = Ring::modular(13);
        for (int i = 0; i < trials; ++i) {
            QuadraticPolynomial h = make_polynomial(z13, random_element(rng, z13),
                                                    random_element(rng, z13),
                                                    random_element(rng, z13));
            if (!kernel_generator(h).equals_minus_gamma) return false;
        }
        return true;
    });
    check("polyduality.proj_spec_small_fields", [&](Rng&) {
        for (std::int64_t p : {3, 5, 7}) {
            Ring zp = Ring::modular(p);
            for (std::int64_t a = 0; a < p; ++a)
                for (std::int64_t b = 0; b < p; ++b)
                    for (std::int64_t c = 0; c < p; ++c) {
                        if (a == 0 && b == 0 && c == 0) continue;
                        auto rep = proj_spec_check(make_polynomial(
                            zp, make_int(zp, a), make_int(zp, b), make_int(zp, c),
                            PolyConvention::Gamma2b));
                        if (!rep.relation_in_span) return false;
                    }
        }
        return true;
    });

    // ----- symcover -----------------------------------------------------------
    check("symcover.v_squared_symmetric", [&](Rng&) {
        for (std::size_t n = 2; n <= 4; ++n) {
            RingElem v = vandermonde(numbered_poly_ring(q, n, "T"));
            if (!is_symmetric(mul(v, v))) return false;
        }
        return true;
    });
    check("symcover.sigma_v_sign", [&](Rng&) {
        for (std::size_t n = 2; n <= 4; ++n) {
            RingElem v = vandermonde(numbered_poly_ring(q, n, "T"));
            for (const auto& perm : detail::all_permutations(n)) {
                RingElem pv = permute_variables(v, perm);
                if (detail::permutation_sign(perm) == 1 ? pv != v : pv != neg(v)) return false;
            }
        }
        return true;
    });
    check("symcover.one_v_basis_reconstruction", [&](Rng& rng) {
        for (std::size_t n = 2; n <= 3; ++n) {
            Ring tring = numbered_poly_ring(q, n, "T");
            RingElem v = vandermonde(tring);
            for (int i = 0; i < 6; ++i) {
                RingElem a = detail::random_symmetric(rng, tring);
                RingElem b = detail::random_symmetric(rng, tring);
                auto dec = alt_decompose(add(a, mul(v, b)));
                if (dec.symmetric_part != symmetric_reduce(a).reduced) return false;
                if (dec.vandermonde_cofactor != symmetric_reduce(b).reduced) return false;
            }
        }
        return true;
    });
    check("symcover.discriminant_integer_coefficients", [&](Rng&) {
        for (std::size_t n = 2; n <= 4; ++n) {
            auto disc = generic_discriminant(q, n);
            for (std::size_t i = 0; i < disc.reduced.term_count(); ++i)
                if (disc.reduced.coeff(i).rat().den != BigInt(1)) return false;
        }
        return true;
    });
    check("symcover.p1p1_identity", [&](Rng&) { return p1p1_identity_check(); });

    return out;
}

}  // namespace quadcover

#endif  // QUADCOVER_IDENTITIES_HPP
