#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "../support/gen.hpp"
#include "hyperalg/dynamics.hpp"
#include "hyperalg/growth.hpp"
#include "hyperalg/lattice.hpp"
#include "hyperalg/witness.hpp"
#include "hyperalg/witness_params.hpp"

using namespace hyperalg;
using testgen::Gen;

namespace {

LatticeTuple tuple1(int u, int v) { return {{IntVec{u}}, IntVec{v}, {}}; }

const DiskGrid kGrid{3.0, 32, 4};

// Shared by several cases; the construction is deterministic.
const WitnessParams& gaussian_params_m2() {
    static const WitnessParams p = prepare_params_T2(SymbolSpec::gaussian(), 2, kGrid, 1e-6, 1LL << 20);
    return p;
}

const WitnessReport& gaussian_witness_m2() {
    static const WitnessReport r = [] {
        const WitnessParams& p = gaussian_params_m2();
        return construct_witness_T2(SymbolSpec::gaussian(), 2, ExpPoly::exponential(1.0, p.w),
                                    ExpPoly::exponential(1.0, p.w0), 1e-6, kGrid, 1LL << 20, p);
    }();
    return r;
}

const ExponentSet kMultiA{{{2, 0}, {1, 1}, {0, 1}}};

const WitnessReport& gaussian_witness_multi() {
    static const WitnessReport r = [] {
        const WitnessParams p = prepare_params_multi(SymbolSpec::gaussian(), kMultiA, kGrid, 1e-5, 1LL << 20);
        const ExpPoly L = ExpPoly::exponential(1.0, p.lambda_hi);
        return construct_witness_multi(SymbolSpec::gaussian(), kMultiA, ExpPoly::exponential(1.0, p.gamma_hi), {L, L},
                                       1e-5, kGrid, 1LL << 20, p);
    }();
    return r;
}

}  // namespace

TEST_SUITE("witness") {

TEST_CASE("compositions") {
    const auto c = compositions(2, 2);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == IntVec{2, 0});
    CHECK(c[1] == IntVec{1, 1});
    CHECK(c[2] == IntVec{0, 2});
    CHECK(compositions(0, 3).size() == 1);
    CHECK(compositions(4, 3).size() == 15);
}

TEST_CASE("lattice for one term") {
    const LatticeSet s = enumerate_lattice(1, 2);
    REQUIRE(s.star.size() == 2);
    CHECK(s.star[0] == tuple1(2, 0));
    CHECK(s.star[1] == tuple1(1, 1));
    REQUIRE(s.survivors.size() == 1);
    CHECK(s.survivors[0] == tuple1(0, 2));
    REQUIRE(s.lower.size() == 1);
    REQUIRE(s.lower[0].size() == 2);
    CHECK(s.lower[0][0] == tuple1(1, 0));
    CHECK(s.lower[0][1] == tuple1(0, 1));
}

TEST_CASE("lattice counts for two terms") {
    const LatticeSet s = enumerate_lattice(2, 2);
    CHECK(s.star.size() + s.survivors.size() == 10);
    CHECK(s.survivors.size() == 2);
    CHECK(s.star.size() == 8);
}

TEST_CASE("property: lattice levels have stars-and-bars size") {
    for (int pu = 1; pu <= 3; ++pu)
        for (int pv = 1; pv <= 3; ++pv)
            for (int m = 2; m <= 4; ++m) {
                const LatticeSet s = enumerate_lattice(pu, pv, m);
                const int d = pu + pv - 1;
                CHECK(double(s.star.size() + s.survivors.size()) == binomial(m + d, d));
                CHECK(s.survivors.size() == std::size_t(pv));
                for (int j = 1; j < m; ++j) {
                    const auto& level = s.lower[std::size_t(j - 1)];
                    CHECK(double(level.size()) == binomial(j + d, d));
                    std::set<std::pair<IntVec, IntVec>> seen;
                    for (const auto& t : level) {
                        CHECK(t.u_total() + t.v_total() == j);
                        seen.insert({t.u[0], t.v});
                    }
                    CHECK(seen.size() == level.size());
                }
                for (const auto& t : s.star) CHECK_FALSE(is_survivor(t, m));
                for (const auto& t : s.survivors) CHECK(is_survivor(t, m));
            }
}

TEST_CASE("multinomial gamma") {
    const std::vector<Cplx> a{Cplx(0.5, 0.5), 2.0};
    CHECK(multinomial_gamma({0, 0}, {3, 0}, a) == Cplx(1.0, 0.0));
    CHECK(multinomial_gamma({1}, {1}, {1.0}) == Cplx(2.0, 0.0));
    CHECK(multinomial_gamma({0}, {0}, {1.0}) == Cplx(1.0, 0.0));
    // 3!/(1! 1! 1!) * a0 * a1
    CHECK(std::abs(multinomial_gamma({1, 1}, {1, 0}, a) - 6.0 * a[0] * a[1]) <= 1e-14);
    CHECK_THROWS_AS(multinomial_gamma({40}, {25}, {1.0}), RangeError);
    CHECK(multinomial({32, 32}) == doctest::Approx(binomial(64, 32)));
}

TEST_CASE("coefficient equation") {
    CHECK(std::abs(solve_coeff(1.0, 2, 4.0, 1) - 0.5) <= 1e-15);
    const Cplx b(0.3, -0.7), phi(1.5, 0.4);
    const Cplx c1 = solve_coeff(b, 1, phi, 7);
    CHECK(std::abs(c1 - b / std::pow(phi, 7)) <= 1e-14 * std::abs(c1));
    CHECK_THROWS_AS(solve_coeff(1.0, 2, 1.0, 3), HypothesisError);
    CHECK_THROWS_AS(solve_coeff(1.0, 2, Cplx(0.6, 0.8), 3), HypothesisError);
    CHECK_THROWS_AS(solve_coeff(0.0, 2, 2.0, 3), InputError);
}

TEST_CASE("property: coefficient round-trip and principal branch") {
    Gen g(123);
    for (int trial = 0; trial < 100; ++trial) {
        const Cplx b = g.log_polar(0.1, 10.0);
        const int m = g.integer(1, 5);
        const Cplx phi = g.log_polar(1.01, 5.0);
        const long long N = g.integer(0, 40);
        const Cplx c = solve_coeff(b, m, phi, N);
        const Cplx back = std::pow(c, m) * std::pow(phi, double(N));
        CHECK(std::abs(back - b) <= 1e-10 * std::abs(b));
        CHECK(std::arg(c) > -M_PI / m - 1e-12);
        CHECK(std::arg(c) <= M_PI / m + 1e-12);
    }
}

TEST_CASE("property: coefficients decrease strictly in N") {
    Gen g(321);
    for (int trial = 0; trial < 50; ++trial) {
        const Cplx b = g.log_polar(0.1, 10.0);
        const int m = g.integer(1, 4);
        const Cplx phi = g.log_polar(1.001, 3.0);
        double prev = INFINITY;
        for (long long N = 0; N < 200; ++N) {
            const double c = std::abs(solve_coeff(b, m, phi, N));
            CHECK(c < prev);
            prev = c;
        }
    }
}

TEST_CASE("weight selection examples") {
    const WeightSelection a = select_weights(ExponentSet{{{1, 0}, {0, 1}}});
    CHECK(a.m == 1);
    CHECK(a.perm == IntVec{0, 1});
    CHECK(a.k == std::vector<long long>{1, 2});
    CHECK(a.A1 == std::vector<IntVec>{{1, 0}});
    CHECK(a.beta == IntVec{1, 0});
    CHECK(a.injective);
    CHECK(a.a1_holds);

    const WeightSelection b = select_weights(ExponentSet{{{2, 1}, {2, 0}}});
    CHECK(b.beta == IntVec{2, 0});
    CHECK(b.A1.size() == 2);
    CHECK(b.a1_holds);

    const WeightSelection c = select_weights(ExponentSet{{{3, 3}}});
    CHECK(c.beta == IntVec{3, 3});
    CHECK(c.a1_holds);

    // the lead coordinate is moved to the front
    const WeightSelection d = select_weights(ExponentSet{{{0, 2}, {1, 1}}});
    CHECK(d.perm == IntVec{1, 0});
    CHECK(d.beta == IntVec{0, 2});
}

TEST_CASE("exponent sets are validated") {
    CHECK_THROWS_AS(ExponentSet{}.validate(), InputError);
    CHECK_THROWS_AS((ExponentSet{{{0, 0}}}.validate()), InputError);
    CHECK_THROWS_AS((ExponentSet{{{1, 0}, {1}}}.validate()), InputError);
    CHECK_THROWS_AS((ExponentSet{{{1, -1}}}.validate()), InputError);
    CHECK_THROWS_AS((ExponentSet{{{1, 2}, {1, 2}}}.validate()), InputError);
}

TEST_CASE("property: weights are injective and dominate the lead tuples") {
    Gen g(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = g.integer(1, 4);
        std::set<IntVec> pool;
        // dim 1 has only three admissible tuples
        const int count = std::min(g.integer(1, 6), dim == 1 ? 3 : 6);
        while (int(pool.size()) < count) {
            IntVec t(static_cast<std::size_t>(dim));
            for (auto& x : t) x = g.integer(0, 3);
            if (std::any_of(t.begin(), t.end(), [](int x) { return x != 0; })) pool.insert(t);
        }
        const ExponentSet A{{pool.begin(), pool.end()}};
        const WeightSelection w = select_weights(A);
        CHECK(w.injective);
        CHECK(w.a1_holds);
        std::set<long long> values;
        for (const auto& t : A.tuples) values.insert(weight_value(w.k, permute(t, w.perm)));
        CHECK(values.size() == A.tuples.size());
        CHECK(w.beta_permuted[0] == w.m);
        for (const auto& a1 : w.A1) {
            if (a1 == w.beta_permuted) continue;
            long long s = 0;
            for (std::size_t i = 1; i < a1.size(); ++i) s += w.k[i] * (w.beta_permuted[i] - a1[i]);
            CHECK(s < 0);
        }
    }
}

TEST_CASE("theta ratios") {
    const SymbolSpec g = SymbolSpec::gaussian();
    const std::vector<Cplx> lambda{0.1}, alpha{Cplx(0.05, 0.3)};
    const ThetaValue surv = theta_ratio(g, {0}, {2}, lambda, alpha, 2);
    CHECK(surv.theta == 1.0);
    CHECK(surv.case_tag == 0);

    const ThetaValue c3 = theta_ratio(g, {0}, {1}, lambda, alpha, 2);
    CHECK(c3.case_tag == 3);
    CHECK(c3.theta == doctest::Approx(std::exp(0.01 - 0.02)).epsilon(1e-14));
    CHECK(c3.theta < 1.0);

    // alpha in the preimage of the unit disk: |exp((0.05 + 0.3i)^2)| = exp(0.0025 - 0.09) < 1
    const ThetaValue c2 = theta_ratio(g, {1}, {0}, lambda, alpha, 2);
    CHECK(c2.case_tag == 2);
    CHECK(c2.theta < 1.0);
    CHECK(std::abs(eval_symbol(g, 2.0 * lambda[0])) > 1.0);
}

TEST_CASE("single-generator witness for exp(z^2), m = 2") {
    const WitnessReport& r = gaussian_witness_m2();
    CHECK(r.route == "T:2");
    REQUIRE(r.residuals.size() == 2);
    for (double x : r.residuals) CHECK(x <= 1e-6);
    CHECK(r.bound_sum <= 1e-6);
    CHECK(r.q <= (1LL << 20));
    // |L_2^*| + |L_1| with one term in A and one in B
    CHECK(r.theta_table.size() == 4);
    for (const auto& e : r.theta_table) CHECK(e.theta <= 1.0 - kThetaMargin);
    REQUIRE(r.survivor_values.size() == 1);
    CHECK(std::abs(r.survivor_values[0] - 1.0) <= 1e-8);
}

TEST_CASE("witness trace doubles q and ends below epsilon") {
    const WitnessReport& r = gaussian_witness_m2();
    REQUIRE(!r.trace.empty());
    CHECK(r.trace.front().q == 8);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
        CHECK(r.trace[i].q == 2 * r.trace[i - 1].q);
        CHECK(r.trace[i].max_coeff < r.trace[i - 1].max_coeff);
    }
    CHECK(r.trace.back().q == r.q);
    CHECK(r.trace.back().residual <= 1e-6);
    const std::string csv = trace_to_csv(r.trace);
    CHECK(csv.rfind("q,residual,bound,max_coeff\n", 0) == 0);
}

TEST_CASE("residuals are dominated by the bound sum") {
    const WitnessReport& r = gaussian_witness_m2();
    for (const auto& s : r.trace) CHECK(s.residual <= s.bound * (1.0 + 1e-6) + 1e-12);
}

TEST_CASE("witness parameters satisfy their invariants") {
    const WitnessParams& p = gaussian_params_m2();
    const SymbolSpec g = SymbolSpec::gaussian();
    for (int j = 1; j <= 2; ++j) CHECK(std::abs(eval_symbol(g, double(j) * p.w)) < 1.0);
    CHECK(p.delta > 0.0);
    CHECK(p.delta <= std::abs(p.w) / 4 + 1e-15);
    // B window: the profile of log|phi| on [0, w0] is increasing and convex
    CHECK(profile_convex_increasing(g, 0.0, p.w0, 0.0, 64));
    CHECK(std::abs(eval_symbol(g, p.w0 / 2.0)) > 1.0);
}

TEST_CASE("placement violations are rejected") {
    const WitnessParams& p = gaussian_params_m2();
    const ExpPoly A = ExpPoly::exponential(1.0, p.w);
    CHECK_THROWS_AS(construct_witness_T2(SymbolSpec::gaussian(), 2, A, ExpPoly::exponential(1.0, 2.0 * p.w0), 1e-6,
                                         kGrid, 1LL << 20, p),
                    InputError);
    CHECK_THROWS_AS(construct_witness_T2(SymbolSpec::gaussian(), 2, ExpPoly::exponential(1.0, p.w + 2.0 * p.delta),
                                         ExpPoly::exponential(1.0, p.w0), 1e-6, kGrid, 1LL << 20, p),
                    InputError);
}

TEST_CASE("exhaustion carries the trace") {
    const WitnessParams& p = gaussian_params_m2();
    try {
        construct_witness_T2(SymbolSpec::gaussian(), 2, ExpPoly::exponential(1.0, p.w), ExpPoly::exponential(1.0, p.w0),
                             1e-6, kGrid, 16, p);
        FAIL("expected exhaustion");
    } catch (const ExhaustionError& e) {
        CHECK(e.trace_csv().rfind("q,residual", 0) == 0);
        CHECK(std::count(e.trace_csv().begin(), e.trace_csv().end(), '\n') == 3);
    }
}

TEST_CASE("hypotheses are checked") {
    CHECK_THROWS_AS(construct_witness_T2(SymbolSpec::exp(1.0), 2, ExpPoly::exponential(1.0, -0.1),
                                         ExpPoly::exponential(1.0, 0.1), 1e-6, kGrid, 1024),
                    HypothesisError);
    CHECK_THROWS_AS(construct_witness_T2(SymbolSpec::gaussian(), 1, ExpPoly::exponential(1.0, 0.1),
                                         ExpPoly::exponential(1.0, 0.1), 1e-6, kGrid, 1024),
                    InputError);
}

TEST_CASE("multi-generator witness for exp(z^2)") {
    const WitnessReport& r = gaussian_witness_multi();
    REQUIRE(r.generators.size() == 2);
    REQUIRE(r.residuals.size() == 3);
    for (double x : r.residuals) CHECK(x <= 1e-5);
    CHECK(r.bound_sum <= 1e-5);
    REQUIRE(r.survivor_values.size() == 1);
    CHECK(std::abs(r.survivor_values[0] - 1.0) <= 1e-8);

    const WeightSelection w = select_weights(kMultiA);
    CHECK(w.a1_holds);
    CHECK(r.params.beta == w.beta);

    int survivors = 0;
    for (const auto& e : r.theta_table) {
        if (e.decay == "survivor") {
            ++survivors;
            CHECK(e.theta == 1.0);
        } else if (e.decay == "polynomial") {
            CHECK(e.theta == 1.0);
            CHECK(e.poly_exponent < 0.0);
            // b n^{poly} shrinks along the doubling sequence
            double prev = INFINITY;
            for (double n = 8; n <= 1 << 16; n *= 2) {
                const double x = std::pow(n, e.poly_exponent);
                CHECK(x < prev);
                prev = x;
            }
        } else {
            CHECK(e.theta <= 1.0 - kThetaMargin);
        }
    }
    CHECK(survivors == 1);
}

TEST_CASE("multi-generator windows are enforced") {
    const WitnessParams p = prepare_params_multi(SymbolSpec::gaussian(), kMultiA, kGrid, 1e-5, 1LL << 20);
    const ExpPoly L = ExpPoly::exponential(1.0, p.lambda_hi);
    CHECK_THROWS_AS(construct_witness_multi(SymbolSpec::gaussian(), kMultiA,
                                            ExpPoly::exponential(1.0, 3.0 * p.gamma_hi), {L, L}, 1e-5, kGrid,
                                            1LL << 20, p),
                    InputError);
    const ExpPoly bad = ExpPoly::exponential(1.0, 3.0 * p.lambda_hi);
    CHECK_THROWS_AS(construct_witness_multi(SymbolSpec::gaussian(), kMultiA, ExpPoly::exponential(1.0, p.gamma_hi),
                                            {L, bad}, 1e-5, kGrid, 1LL << 20, p),
                    InputError);
}

TEST_CASE("report json round-trip") {
    const WitnessReport& r = gaussian_witness_multi();
    const Json j = witness_report_to_json(r);
    const WitnessReport back = witness_report_from_json(Json::parse(j.dump()));
    CHECK(back.route == r.route);
    CHECK(back.q == r.q);
    REQUIRE(back.generators.size() == r.generators.size());
    for (std::size_t i = 0; i < r.generators.size(); ++i) CHECK(back.generators[i] == r.generators[i]);
    REQUIRE(back.targets.size() == r.targets.size());
    for (std::size_t i = 0; i < r.targets.size(); ++i) {
        CHECK(back.targets[i].exponents == r.targets[i].exponents);
        CHECK(back.targets[i].target == r.targets[i].target);
    }
    CHECK(back.params.epsilon == r.params.epsilon);
    CHECK(back.params.grid.radius == r.params.grid.radius);
    CHECK(j["theta_table"].size() == r.theta_table.size());
    CHECK_THROWS_AS(witness_report_from_json(Json::parse(R"({"route":"T:2","q":1})")), SchemaError);
}

TEST_CASE("least-squares placement reports its own fit error") {
    const TaylorPoly target({1.0, 0.5}, 1);
    const PlacementFit fit = fit_on_segment(target, 0.2, 0.6, DiskGrid{1.0, 16, 2}, 8);
    CHECK(fit.fitted.size() <= 8);
    for (const auto& t : fit.fitted.terms()) CHECK(on_segment(t.freq, 0.2, 0.6));
    CHECK(std::isfinite(fit.fit_error));
    double worst = 0.0;
    for (const auto& z : DiskGrid{1.0, 16, 2}.points())
        worst = std::max(worst, std::abs(eval_exppoly(fit.fitted, z) - eval_taylor(target, z)));
    CHECK(worst == doctest::Approx(fit.fit_error).epsilon(1e-9));
    CHECK(fit.fit_error < 1e-3);
}

}  // TEST_SUITE
