#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numbers>

#include "../support/gen.hpp"
#include "hyperalg/classifier.hpp"

using namespace hyperalg;
using testgen::Gen;

namespace {

constexpr double kPi = std::numbers::pi;

SymbolSpec squares_product(Cplx a, int M) {
    std::vector<Cplx> zeros;
    for (int n = 1; n <= M; ++n) zeros.emplace_back(double(n) * n, 0.0);
    return SymbolSpec::hadamard(a, {}, std::move(zeros), 0, static_cast<std::size_t>(M));
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("progression evidence for cos") {
    const T2Evidence e = check_T2(SymbolSpec::cos(), 8);
    CHECK(std::abs(e.second_deriv_margin - 1.0) <= 1e-8);
    CHECK(e.passes);
    REQUIRE(e.progressions.size() == 7);
    for (const auto& [m, a] : e.progressions) {
        REQUIRE(a.has_value());
        for (int j = 1; j <= m; ++j) CHECK(std::abs(std::cos(double(j) * *a)) < 1.0);
    }
}

TEST_CASE("progression evidence for sin(pi z)/(pi z)") {
    const T2Evidence e = check_T2(SymbolSpec::sinc_pi(), 6);
    CHECK(std::abs(e.second_deriv_margin - kPi * kPi / 3.0) <= 1e-8);
    CHECK(e.passes);
    // the positive integers lie in the preimage of the disk, so a = 1 would do
    for (int j = 1; j <= 6; ++j) CHECK(std::abs(eval_symbol(SymbolSpec::sinc_pi(), double(j) + 0.5)) < 1.0);
}

TEST_CASE("progression evidence for exp fails on the second-derivative margin") {
    const T2Evidence e = check_T2(SymbolSpec::exp(1.0), 4);
    CHECK(e.second_deriv_margin <= 1e-9);
    CHECK_FALSE(e.margin_ok);
    CHECK_FALSE(e.passes);
    CHECK_THROWS_AS(check_T2(SymbolSpec::exp_poly(ExpPoly::constant(2.0)), 4), HypothesisError);
}

TEST_CASE("structural verdicts") {
    const Verdict e2 = classify(SymbolSpec::exp(2.0));
    CHECK(e2.outcome == Outcome::NoAlgebra);
    CHECK(e2.route == "T:Ts(b)1");

    const Verdict pe = classify(SymbolSpec::exp_times_poly(1.0, {1.0, Cplx(0.0, 1.0)}));
    CHECK(pe.outcome == Outcome::HasAlgebra);
    CHECK(pe.route == "T:Ts(b)2");
    REQUIRE(pe.find("a1_over_a") != nullptr);

    const SymbolSpec sq = squares_product(1.0, 2000);
    const Verdict h = classify(sq);
    CHECK(h.outcome == Outcome::HasAlgebra);
    CHECK(h.route == "T:Ts(b)3(i)");
    const ZeroSetSummary z = summarize_zeros(sq.as<HadamardTrunc>()->zeros, 2000);
    CHECK(std::abs(z.sum_inv_sq - std::pow(kPi, 4) / 90.0) <= 1e-9);
    CHECK(z.genus_guess == 0);
}

TEST_CASE("subexponential symbols are decided exactly") {
    const Verdict v = classify(SymbolSpec::poly_times_exp({1.0, -1.0, 0.0, 1.0}, 0.0));
    CHECK(v.outcome == Outcome::HasAlgebra);
    CHECK(v.route == "T:Ts(a)");
    CHECK(v.confidence == Confidence::Exact);
}

TEST_CASE("catalog verdicts") {
    const auto t0 = std::chrono::steady_clock::now();
    CHECK(classify(SymbolSpec::cos()).outcome == Outcome::HasAlgebra);
    CHECK(classify(SymbolSpec::sin_plus_exp_neg()).outcome == Outcome::HasAlgebra);
    const Verdict s = classify(SymbolSpec::sinc_pi());
    CHECK(s.outcome == Outcome::HasAlgebra);
    CHECK(s.route == "T:2");
    CHECK(classify(SymbolSpec::exp(Cplx(0.5, 2.0))).outcome == Outcome::NoAlgebra);
    CHECK(classify(SymbolSpec::exp_times_poly(1.0, {1.0, Cplx(0.0, 1.0)})).outcome == Outcome::HasAlgebra);
    CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 10.0);
}

TEST_CASE("unknown outcomes") {
    CHECK(classify(SymbolSpec::exp_poly(ExpPoly::constant(2.0))).outcome == Outcome::Unknown);
    CHECK(classify(SymbolSpec::gaussian()).outcome == Outcome::Unknown);
    CHECK(classify(SymbolSpec::exp_poly(ExpPoly::constant(1.0))).outcome == Outcome::Unknown);

    // zeros +-1, +-i give sum z^-2 = 0
    const SymbolSpec cancel = SymbolSpec::hadamard(1.0, {}, {1.0, -1.0, Cplx(0, 1), Cplx(0, -1)}, 0, 4);
    const Verdict v = classify(cancel);
    CHECK(v.route != "T:Ts(b)3(i)");
    CHECK(v.route != "T:Ts(b)3(ii)");
}

TEST_CASE("unimodular rotation is recorded") {
    const Cplx u = std::polar(1.0, 0.7);
    const SymbolSpec rotated = SymbolSpec::exp_poly(ExpPoly({{u / 2.0, Cplx(0, 1)}, {u / 2.0, Cplx(0, -1)}}));
    const Verdict v = classify(rotated);
    CHECK(v.outcome == Outcome::HasAlgebra);
    CHECK(std::abs(v.rotation - u) <= 1e-12);
}

TEST_CASE("free-generation evidence") {
    const TIGEvidence a = check_TIG(SymbolSpec::poly_times_exp({1.0, 1.0}, 0.0));
    CHECK(a.first_nonzero_index == 1);
    CHECK(a.a_holds);

    const TIGEvidence b = check_TIG(SymbolSpec::exp_times_poly(1.0, {1.0, 1.0, 1.0}));
    CHECK(std::abs(2.0 * b.a2 - b.a1 * b.a1 - 1.0) <= 1e-12);
    CHECK(std::abs(b.a1 + b.a - 2.0) <= 1e-12);
    CHECK(b.b_holds);
    CHECK(b.holds.find('b') != std::string::npos);

    const TIGEvidence c = check_TIG(SymbolSpec::cos());
    CHECK(c.first_nonzero_index == 2);
    CHECK_FALSE(c.a_holds);

    const TIGEvidence h = check_TIG(squares_product(1.0, 500));
    CHECK(h.c_applicable);
    CHECK(h.c_holds);
}

TEST_CASE("free-generation ray criterion") {
    const TIGEvidence p = check_TIG(SymbolSpec::poly_times_exp({1.0, -1.0, 0.0, 1.0}, 0.0));
    CHECK(p.first_nonzero_index == 1);
    REQUIRE(p.free_generation_ray.has_value());
    CHECK(p.free_generation_holds);
    const auto& ray = *p.free_generation_ray;
    const SymbolSpec s = SymbolSpec::poly_times_exp({1.0, -1.0, 0.0, 1.0}, 0.0);
    CHECK(std::abs(eval_symbol(s, std::polar(ray.R, ray.theta))) > 1.0);
    CHECK(std::abs(eval_symbol(s, std::polar(ray.r / 2, ray.theta))) < 1.0);
    CHECK(tig_evidence_to_json(p).contains("free_generation_ray"));

    // even first index
    CHECK_FALSE(check_TIG(SymbolSpec::cos()).free_generation_holds);
    // |e^z| never exceeds e^{h R} on a ray
    CHECK_FALSE(check_TIG(SymbolSpec::exp(1.0)).free_generation_holds);
}

TEST_CASE("rescaling") {
    const SymbolSpec e2 = rescale_symbol(SymbolSpec::exp(1.0), 2.0);
    CHECK(std::abs(eval_symbol(e2, Cplx(0.3, 0.2)) - std::exp(2.0 * Cplx(0.3, 0.2))) <= 1e-14);

    const SymbolSpec h = SymbolSpec::hadamard(0.5, {}, {Cplx(1, 1), Cplx(-2, 3)}, 1, 2);
    const Cplx a(0.5, -1.5);
    const SymbolSpec hr = rescale_symbol(h, a);
    const auto& zr = hr.as<HadamardTrunc>()->zeros;
    CHECK(std::abs(zr[0] - Cplx(1, 1) / a) <= 1e-15);
    CHECK(std::abs(zr[1] - Cplx(-2, 3) / a) <= 1e-15);

    const SymbolSpec id = rescale_symbol(SymbolSpec::cos(), 1.0);
    CHECK(symbol_to_json(id) == symbol_to_json(SymbolSpec::cos()));
    CHECK_THROWS_AS(rescale_symbol(SymbolSpec::cos(), 0.0), InputError);
}

TEST_CASE("property: rescaling evaluates as phi(a z)") {
    Gen g(91);
    const SymbolSpec symbols[] = {SymbolSpec::cos(), SymbolSpec::sinc_pi(),
                                  SymbolSpec::exp_times_poly(Cplx(0.5, 0.1), {1.0, 0.3, Cplx(0, 0.2)}),
                                  SymbolSpec::exp_poly(ExpPoly({{0.5, 1.0}, {0.5, Cplx(0, 2)}})),
                                  SymbolSpec::hadamard(0.2, {}, {Cplx(1, 1), 3.0, Cplx(0, -2)}, 1, 3)};
    for (const auto& s : symbols) {
        for (int trial = 0; trial < 20; ++trial) {
            const Cplx a = g.log_polar(0.2, 3.0);
            const Cplx z = g.disk(1.5);
            const SymbolSpec r = rescale_symbol(s, a);
            const Cplx want = eval_symbol(s, a * z);
            CHECK(std::abs(eval_symbol(r, z) - want) <= 1e-11 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("property: structural outcomes are invariant under rescaling") {
    Gen g(55);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<SymbolSpec> symbols = {
            SymbolSpec::exp(g.log_polar(0.3, 3.0)),
            SymbolSpec::poly_times_exp({1.0, g.square(1.0), g.square(1.0)}, g.log_polar(0.3, 3.0)),
        };
        std::vector<Cplx> zeros;
        for (int n = 1; n <= 50; ++n) zeros.push_back(double(n) * n * g.log_polar(0.5, 2.0));
        symbols.push_back(SymbolSpec::hadamard(g.log_polar(0.3, 2.0), {}, zeros, 0, zeros.size()));
        for (const auto& s : symbols) {
            const Verdict v = classify(s);
            if (v.route != "T:Ts(b)1" && v.route != "T:Ts(b)2" && v.route.rfind("T:Ts(b)3", 0) != 0) continue;
            const Cplx a = g.log_polar(0.2, 5.0);
            CHECK(classify(rescale_symbol(s, a)).outcome == v.outcome);
        }
    }
}

TEST_CASE("property: NoAlgebra only for zero-free symbols") {
    Gen g(17);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<SymbolSpec> symbols = {
            SymbolSpec::exp(g.square(2.0)),
            SymbolSpec::poly_times_exp({1.0, g.square(1.0)}, g.square(2.0)),
            SymbolSpec::exp_poly(ExpPoly({{0.5, g.square(2.0)}, {0.5, g.square(2.0)}})),
        };
        for (const auto& s : symbols) {
            const Verdict v = classify(s);
            if (v.outcome != Outcome::NoAlgebra) continue;
            CHECK(structurally_zero_free(structural_form(s)));
            CHECK(v.route == "T:Ts(b)1");
            CHECK_FALSE(v.find("subexponential")->value.get<bool>());
        }
    }
}

TEST_CASE("verdict json") {
    const Json j = verdict_to_json(classify(SymbolSpec::cos()));
    CHECK(j["outcome"] == "HasAlgebra");
    CHECK(j["route"] == "T:2");
    CHECK(j["confidence"] == "numerical");
    CHECK(j["evidence"].is_array());
}

}  // TEST_SUITE
