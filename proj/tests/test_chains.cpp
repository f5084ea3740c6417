#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "opineq/chains.hpp"
#include "opineq/random.hpp"
#include "support/oracles.hpp"

using namespace opineq;

namespace {

const SymMatrix kExampleMatrix = SymMatrix::from_rows({{2.0, -1.0}, {-1.0, 3.0}});
const Interval kExampleWindow(1.35, 3.8);

// direct arithmetic for the half-power envelope of 1/z
double inverse_envelope_half(double m, double M, double z) {
    const double w1 = (M - z) / (M - m);
    const double w2 = (z - m) / (M - m);
    const double v = w1 / std::sqrt(m) + w2 / std::sqrt(M);
    return v * v;
}

}  // namespace

TEST_CASE("envelope value: affine transform reproduces f") {
    // f = z^2, t = 1/2 makes f^t affine, the envelope collapses onto f
    const FunctionDescriptor f = FunctionDescriptor::power(2.0);
    for (double z : {1.0, 1.3, 1.5, 1.99, 2.0})
        CHECK(middle_term_scalar(f, PowerTransform{0.5}, Interval(1.0, 2.0), z) ==
              doctest::Approx(z * z).epsilon(1e-12));
}

TEST_CASE("envelope value at the example eigenvalues") {
    const FunctionDescriptor f = FunctionDescriptor::power(-1.0);
    const double hi = (5.0 + std::sqrt(5.0)) / 2.0;
    const double lo = (5.0 - std::sqrt(5.0)) / 2.0;
    CHECK(middle_term_scalar(f, PowerTransform{0.5}, kExampleWindow, hi) ==
          doctest::Approx(inverse_envelope_half(1.35, 3.8, hi)).epsilon(1e-13));
    CHECK(middle_term_scalar(f, PowerTransform{0.5}, kExampleWindow, lo) ==
          doctest::Approx(inverse_envelope_half(1.35, 3.8, lo)).epsilon(1e-13));
    // printed approximations
    CHECK(middle_term_scalar(f, PowerTransform{0.5}, kExampleWindow, hi) ==
          doctest::Approx(0.29033).epsilon(2e-4));
    CHECK(middle_term_scalar(f, PowerTransform{0.5}, kExampleWindow, lo) ==
          doctest::Approx(0.73292).epsilon(2e-4));

    CHECK_THROWS_AS(middle_term_scalar(f, PowerTransform{0.5}, kExampleWindow, 5.0), DomainError);
}

TEST_CASE("pointwise refinement triple") {
    SUBCASE("exp on [0,1]") {
        const auto trip =
            pointwise_refinement(FunctionDescriptor::exp(), PowerTransform{0.5},
                                 Interval(0.0, 1.0), 0.25);
        const double g025 = std::pow(0.75 + 0.25 * std::sqrt(std::exp(1.0)), 2.0);
        const double g075 = std::pow(0.25 + 0.75 * std::sqrt(std::exp(1.0)), 2.0);
        CHECK(trip[0] == doctest::Approx(std::exp(0.75)).epsilon(1e-13));
        CHECK(trip[1] == doctest::Approx(g025 + g075 - std::exp(0.25)).epsilon(1e-13));
        CHECK(trip[2] == doctest::Approx(1.0 + std::exp(1.0) - std::exp(0.25)).epsilon(1e-13));
        CHECK(trip[0] <= trip[1] + 1e-12);
        CHECK(trip[1] <= trip[2] + 1e-12);
    }
    SUBCASE("affine f collapses the triple at t = 1") {
        const auto trip = pointwise_refinement(FunctionDescriptor::power(1.0),
                                               PowerTransform{1.0}, Interval(1.0, 2.0), 1.5);
        CHECK(trip[0] == doctest::Approx(1.5).epsilon(1e-12));
        CHECK(trip[1] == doctest::Approx(1.5).epsilon(1e-12));
        CHECK(trip[2] == doctest::Approx(1.5).epsilon(1e-12));
    }
    SUBCASE("endpoint with affine transform") {
        const auto trip = pointwise_refinement(FunctionDescriptor::power(2.0),
                                               PowerTransform{0.5}, Interval(1.0, 2.0), 1.0);
        for (double v : trip) CHECK(v == doctest::Approx(4.0).epsilon(1e-12));
    }
    SUBCASE("ordering holds across the catalog") {
        std::mt19937_64 rng(61);
        std::uniform_real_distribution<double> lo(0.3, 1.5), w(0.2, 2.0), u01(0.0, 1.0);
        int exercised = 0;
        for (const auto& f : builtin_catalog()) {
            for (double t : {0.25, 0.5, 0.75}) {
                const double m = lo(rng);
                const Interval j(m, m + w(rng));
                if (!is_power_convex(f, PowerTransform{t}, j)) continue;
                ++exercised;
                for (int i = 0; i < 25; ++i) {
                    const double z = j.m + (j.M - j.m) * u01(rng);
                    const auto trip = pointwise_refinement(f, PowerTransform{t}, j, z);
                    CHECK(trip[0] <= trip[1] + 1e-9 * (1.0 + std::fabs(trip[1])));
                    CHECK(trip[1] <= trip[2] + 1e-9 * (1.0 + std::fabs(trip[2])));
                }
            }
        }
        CHECK(exercised >= 8);
    }
}

TEST_CASE("four-term scalar chain") {
    SUBCASE("exp on [0,1], closed forms") {
        const auto rep = hh_chain(FunctionDescriptor::exp(), PowerTransform{0.5},
                                  Interval(0.0, 1.0));
        REQUIRE(rep.terms.size() == 4);
        const double c = std::sqrt(std::exp(1.0)) - 1.0;
        CHECK(rep.terms[0](0, 0) == doctest::Approx(std::sqrt(std::exp(1.0))).epsilon(1e-13));
        CHECK(rep.terms[1](0, 0) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
        CHECK(rep.terms[2](0, 0) == doctest::Approx(1.0 + c + c * c / 3.0).epsilon(1e-12));
        CHECK(rep.terms[3](0, 0) ==
              doctest::Approx(0.5 * (1.0 + std::exp(1.0))).epsilon(1e-13));
        CHECK(rep.passed);
    }
    SUBCASE("affine transform merges the two integral terms") {
        const auto rep = hh_chain(FunctionDescriptor::power(2.0), PowerTransform{0.5},
                                  Interval(1.0, 2.0));
        CHECK(rep.terms[0](0, 0) == doctest::Approx(2.25).epsilon(1e-13));
        CHECK(rep.terms[1](0, 0) == doctest::Approx(7.0 / 3.0).epsilon(1e-13));
        CHECK(rep.terms[2](0, 0) == doctest::Approx(7.0 / 3.0).epsilon(1e-12));
        CHECK(rep.terms[3](0, 0) == doctest::Approx(2.5).epsilon(1e-13));
        CHECK(std::fabs(rep.terms[2](0, 0) - rep.terms[1](0, 0)) <= 1e-10);
        CHECK(rep.passed);
    }
    SUBCASE("affine f collapses everything at t = 1") {
        const auto rep = hh_chain(FunctionDescriptor::power(1.0), PowerTransform{1.0},
                                  Interval(0.25, 1.75));
        for (const auto& term : rep.terms)
            CHECK(term(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rep.passed);
    }
    SUBCASE("convexity precondition enforced") {
        CHECK_THROWS_AS(hh_chain(FunctionDescriptor::power(2.0), PowerTransform{0.25},
                                 Interval(1.0, 2.0)),
                        PreconditionError);
        // sqrt(z) is concave, so affine f with t < 1 is rejected too
        CHECK_THROWS_AS(hh_chain(FunctionDescriptor::power(1.0), PowerTransform{0.5},
                                 Interval(0.25, 1.75)),
                        PreconditionError);
    }
    SUBCASE("quadrature oracle agreement on a non-affine case") {
        const FunctionDescriptor f = FunctionDescriptor::power(-1.0);
        const PowerTransform t{0.5};
        const Interval j(0.8, 2.6);
        const auto rep = hh_chain(f, t, j);
        const double ref = oracles::simpson(
            [&](double z) { return middle_term_scalar(f, t, j, z); }, j.m, j.M) / j.width();
        CHECK(rep.terms[2](0, 0) == doctest::Approx(ref).epsilon(1e-9));
    }
}

TEST_CASE("operator chain on the worked example") {
    ChainParams params{PowerTransform{0.5}, AlphaMode::Ratio, 1.0, kExampleWindow};
    const auto rep = operator_chain(FunctionDescriptor::power(-1.0), kExampleMatrix,
                                    MapDescriptor::normalized_trace(), params);
    REQUIRE(rep.terms.size() == 3);
    CHECK(rep.terms[0](0, 0) == doctest::Approx(0.5).epsilon(1e-12));

    const double lo = (5.0 - std::sqrt(5.0)) / 2.0;
    const double hi = (5.0 + std::sqrt(5.0)) / 2.0;
    const double t2 =
        0.5 * (inverse_envelope_half(1.35, 3.8, lo) + inverse_envelope_half(1.35, 3.8, hi));
    CHECK(rep.terms[1](0, 0) == doctest::Approx(t2).epsilon(1e-12));
    CHECK(rep.terms[1](0, 0) == doctest::Approx(0.5116).epsilon(2e-4));

    const double alpha = 5.15 * 5.15 / (4.0 * 1.35 * 3.8);
    CHECK(*rep.constants.alpha == doctest::Approx(alpha).epsilon(1e-9));
    CHECK(*rep.constants.beta == 0.0);
    CHECK(rep.terms[2](0, 0) == doctest::Approx(alpha * 0.4).epsilon(1e-9));
    CHECK(rep.terms[2](0, 0) == doctest::Approx(0.517).epsilon(1e-3));
    CHECK(rep.passed);
}

TEST_CASE("operator chain fixed cases") {
    SUBCASE("affine f gives equality throughout at t = 1") {
        ChainParams params{PowerTransform{1.0}, AlphaMode::Unit, 1.0, std::nullopt};
        const auto rep = operator_chain(FunctionDescriptor::power(1.0),
                                        SymMatrix::from_rows({{1.0, 0.2}, {0.2, 2.0}}),
                                        MapDescriptor::normalized_trace(), params);
        CHECK(rep.passed);
        CHECK(std::fabs(rep.terms[0](0, 0) - rep.terms[1](0, 0)) <= 1e-10);
        CHECK(std::fabs(rep.terms[1](0, 0) - rep.terms[2](0, 0)) <= 1e-10);
        CHECK(*rep.constants.beta == doctest::Approx(0.0).epsilon(1e-10));
    }
    SUBCASE("pinching with unit alpha and the quarter gap") {
        ChainParams params{PowerTransform{0.5}, AlphaMode::Unit, 1.0, Interval(1.0, 2.0)};
        const auto rep =
            operator_chain(FunctionDescriptor::power(2.0), SymMatrix::diag({1.0, 2.0}),
                           MapDescriptor::pinching({1, 1}), params);
        CHECK(rep.terms[0](0, 0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rep.terms[0](1, 1) == doctest::Approx(4.0).epsilon(1e-12));
        CHECK((rep.terms[1] - rep.terms[0]).max_abs_entry() <= 1e-10);
        CHECK(rep.terms[2](0, 0) == doctest::Approx(1.25).epsilon(1e-10));
        CHECK(rep.terms[2](1, 1) == doctest::Approx(4.25).epsilon(1e-10));
        CHECK(rep.passed);
    }
    SUBCASE("spectrum must sit inside a supplied window") {
        ChainParams params{PowerTransform{0.5}, AlphaMode::Unit, 1.0, Interval(1.5, 3.0)};
        CHECK_THROWS_AS(operator_chain(FunctionDescriptor::power(2.0),
                                       SymMatrix::diag({1.0, 2.0}),
                                       MapDescriptor::normalized_trace(), params),
                        PreconditionError);
    }
    SUBCASE("non-unital map rejected") {
        Matrix v(2, 1);
        v(0, 0) = 1.0;
        v(1, 0) = 1.0;  // columns not orthonormal
        ChainParams params{PowerTransform{0.5}, AlphaMode::Unit, 1.0, std::nullopt};
        CHECK_THROWS_AS(operator_chain(FunctionDescriptor::power(2.0),
                                       SymMatrix::diag({1.0, 2.0}),
                                       MapDescriptor::compression(v), params),
                        PreconditionError);
    }
}

TEST_CASE("operator chain sandwich over random draws") {
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<int> nd(2, 6);
    std::uniform_real_distribution<double> floor(0.15, 0.6);
    int ran = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int n = nd(rng);
        const auto catalog = builtin_catalog();
        const FunctionDescriptor f = catalog[trial % catalog.size()];
        const bool positive = f.kind() != FunctionDescriptor::Kind::Exp;
        const SymMatrix a = positive ? ensembles::symmetric_with_floor(n, floor(rng), rng)
                                     : ensembles::symmetric(n, rng);
        const Interval j = spectrum_bounds(a);
        const double ts[3] = {0.25, 0.5, 0.75};
        const PowerTransform t{ts[trial % 3]};
        if (!is_power_convex(f, t, j)) continue;
        ++ran;
        ChainParams params{t, trial % 2 ? AlphaMode::Unit : AlphaMode::Ratio, 1.0, j};

        std::vector<MapDescriptor> maps;
        maps.push_back(MapDescriptor::normalized_trace());
        maps.push_back(MapDescriptor::pinching({1, n - 1}));
        maps.push_back(MapDescriptor::compression(ensembles::isometry(n, 1 + (n / 2), rng)));
        maps.push_back(MapDescriptor::unitary_mixture(
            {0.4, 0.6}, {ensembles::orthogonal(n, rng), ensembles::orthogonal(n, rng)}));
        const auto rep = operator_chain(f, a, maps[trial % maps.size()], params, 1e-8);
        CHECK(rep.passed);
    }
    CHECK(ran >= 60);
}

TEST_CASE("affine collapse: envelope term reproduces f when r*t = 1") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        const SymMatrix a = ensembles::symmetric_with_floor(4, 0.3, rng);
        const Interval j = spectrum_bounds(a);
        for (const auto& [r, t] :
             std::vector<std::pair<double, double>>{{2.0, 0.5}, {4.0, 0.25}}) {
            // f^t(z) = z is its own chord, so the envelope rebuilds f exactly
            ChainParams params{PowerTransform{t}, AlphaMode::Unit, 1.0, j};
            const auto rep = operator_chain(FunctionDescriptor::power(r), a,
                                            MapDescriptor::normalized_trace(), params);
            CHECK((rep.terms[1] - rep.terms[0]).max_abs_entry() <= 1e-10);
        }
    }
}

TEST_CASE("scalar and matrix paths agree on 1x1 inputs") {
    const SymMatrix a = SymMatrix::diag({1.7});
    const Interval j(1.0, 2.5);
    ChainParams params{PowerTransform{0.5}, AlphaMode::Unit, 1.0, j};
    const FunctionDescriptor f = FunctionDescriptor::power(-1.0);
    const auto rep = operator_chain(f, a, MapDescriptor::normalized_trace(), params);
    CHECK(rep.terms[0](0, 0) == doctest::Approx(1.0 / 1.7).epsilon(1e-12));
    CHECK(rep.terms[1](0, 0) ==
          doctest::Approx(middle_term_scalar(f, PowerTransform{0.5}, j, 1.7)).epsilon(1e-12));
    CHECK(rep.terms[2](0, 0) ==
          doctest::Approx(beta_constant(f, j, 1.0) + 1.0 / 1.7).epsilon(1e-12));
    CHECK(rep.passed);
}

TEST_CASE("power chain") {
    SUBCASE("reproduces the worked example through the K form") {
        const auto rep =
            power_chain(-1.0, PowerTransform{0.5}, kExampleMatrix,
                        MapDescriptor::normalized_trace(), kExampleWindow,
                        PowerChainMode::RatioK);
        CHECK(rep.terms[0](0, 0) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(rep.terms[1](0, 0) == doctest::Approx(0.5116).epsilon(2e-4));
        CHECK(rep.terms[2](0, 0) ==
              doctest::Approx(0.4 * 5.15 * 5.15 / (4.0 * 1.35 * 3.8)).epsilon(1e-12));
        CHECK(rep.passed);
    }
    SUBCASE("ratio mode with r = 2") {
        const auto rep = power_chain(2.0, PowerTransform{0.5}, SymMatrix::diag({1.0, 2.0}),
                                     MapDescriptor::normalized_trace(), Interval(1.0, 2.0),
                                     PowerChainMode::RatioK);
        CHECK(rep.terms[0](0, 0) == doctest::Approx(2.5).epsilon(1e-12));
        CHECK(rep.terms[1](0, 0) == doctest::Approx(2.5).epsilon(1e-12));
        CHECK(rep.terms[2](0, 0) == doctest::Approx(1.125 * 2.25).epsilon(1e-12));
        CHECK(rep.passed);
    }
    SUBCASE("difference mode with r = 2") {
        const auto rep = power_chain(2.0, PowerTransform{0.5}, SymMatrix::diag({1.0, 2.0}),
                                     MapDescriptor::normalized_trace(), Interval(1.0, 2.0),
                                     PowerChainMode::DifferenceC);
        CHECK(rep.terms[2](0, 0) == doctest::Approx(2.5).epsilon(1e-12));
        CHECK(std::fabs(rep.terms[2](0, 0) - rep.terms[1](0, 0)) <= 1e-10);
        CHECK(rep.passed);
    }
    SUBCASE("transform condition enforced") {
        CHECK_THROWS_AS(power_chain(2.0, PowerTransform{0.25}, SymMatrix::diag({1.0, 2.0}),
                                    MapDescriptor::normalized_trace(), Interval(1.0, 2.0),
                                    PowerChainMode::RatioK),
                        PreconditionError);
        CHECK_THROWS_AS(power_chain(0.5, PowerTransform{0.5}, SymMatrix::diag({1.0, 2.0}),
                                    MapDescriptor::normalized_trace(), Interval(1.0, 2.0),
                                    PowerChainMode::RatioK),
                        PreconditionError);
    }
}

TEST_CASE("kantorovich integral chain") {
    SUBCASE("endpoints pin the squeeze") {
        const auto rep =
            kantorovich_integral_chain(SymMatrix::diag({1.0, 2.0}),
                                       MapDescriptor::normalized_trace(), Interval(1.0, 2.0));
        CHECK(rep.terms[0](0, 0) == doctest::Approx(0.75).epsilon(1e-12));
        CHECK(rep.terms[2](0, 0) == doctest::Approx(0.75).epsilon(1e-12));
        CHECK(rep.terms[1](0, 0) == doctest::Approx(0.75).epsilon(1e-8));
        CHECK(rep.passed);
    }
    SUBCASE("worked example endpoints with a strict middle") {
        const auto rep = kantorovich_integral_chain(
            kExampleMatrix, MapDescriptor::normalized_trace(), kExampleWindow);
        CHECK(rep.terms[0](0, 0) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(rep.terms[2](0, 0) ==
              doctest::Approx(0.4 * 5.15 * 5.15 / (4.0 * 1.35 * 3.8)).epsilon(1e-12));
        CHECK(rep.terms[1](0, 0) > rep.terms[0](0, 0));
        CHECK(rep.terms[1](0, 0) < rep.terms[2](0, 0));
        CHECK(rep.passed);

        // middle term against an independent composite-simpson quadrature
        const double lo = (5.0 - std::sqrt(5.0)) / 2.0;
        const double hi = (5.0 + std::sqrt(5.0)) / 2.0;
        double ref = 0.0;
        for (double lambda : {lo, hi}) {
            const double w1 = (3.8 - lambda) / 2.45;
            const double w2 = (lambda - 1.35) / 2.45;
            ref += 0.5 * oracles::simpson(
                             [&](double t) {
                                 return std::pow(w1 * std::pow(1.35, -t) + w2 * std::pow(3.8, -t),
                                                 1.0 / t);
                             },
                             1e-9, 1.0);
        }
        CHECK(rep.terms[1](0, 0) == doctest::Approx(ref).epsilon(1e-6));
    }
    SUBCASE("adaptive simpson agrees with gauss despite the t = 0 endpoint") {
        // adaptive schemes evaluate the endpoints, so this exercises the
        // removable-singularity limit of the integrand
        std::mt19937_64 rng(107);
        const SymMatrix a = ensembles::symmetric_with_floor(3, 0.4, rng);
        const auto gl = kantorovich_integral_chain(a, MapDescriptor::normalized_trace(),
                                                   std::nullopt,
                                                   QuadratureConfig::gauss_legendre(64));
        const auto as = kantorovich_integral_chain(a, MapDescriptor::normalized_trace(),
                                                   std::nullopt,
                                                   QuadratureConfig::adaptive_simpson(1e-11, 30));
        CHECK((gl.terms[1] - as.terms[1]).max_abs_entry() <= 1e-9);
        CHECK(as.passed);
    }
    SUBCASE("scalar multiples of the identity are rejected") {
        CHECK_THROWS_AS(kantorovich_integral_chain(2.0 * SymMatrix::identity(3),
                                                   MapDescriptor::normalized_trace(),
                                                   std::nullopt),
                        DegenerateSpectrumError);
    }
    SUBCASE("positive spectrum required") {
        CHECK_THROWS_AS(kantorovich_integral_chain(SymMatrix::diag({-1.0, 2.0}),
                                                   MapDescriptor::normalized_trace(),
                                                   std::nullopt),
                        DomainError);
    }
}

TEST_CASE("furuta chain") {
    SUBCASE("hand-checkable square case") {
        const auto rep = furuta_chain(FunctionDescriptor::power(2.0), PowerTransform{0.5},
                                      SymMatrix::diag({1.0, 2.0}), SymMatrix::diag({2.0, 3.0}),
                                      Interval(1.0, 3.0), kantorovich_k(Interval(1.0, 3.0), 2.0));
        CHECK(*rep.constants.alpha == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
        CHECK(rep.terms[0](0, 0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rep.terms[0](1, 1) == doctest::Approx(4.0).epsilon(1e-12));
        CHECK((rep.terms[1] - rep.terms[0]).max_abs_entry() <= 1e-10);
        CHECK(rep.terms[2](0, 0) == doctest::Approx(4.0 / 3.0 * 4.0).epsilon(1e-9));
        CHECK(rep.terms[2](1, 1) == doctest::Approx(4.0 / 3.0 * 9.0).epsilon(1e-9));
        CHECK(rep.passed);
        CHECK(std::fabs(*rep.constants.beta) <= 1e-9);
    }
    SUBCASE("affine f with unit alpha at t = 1") {
        const auto a = SymMatrix::diag({1.0, 1.5});
        const auto b = SymMatrix::diag({1.2, 2.0});
        const auto rep = furuta_chain(FunctionDescriptor::power(1.0), PowerTransform{1.0}, a, b,
                                      Interval(0.9, 2.1), 1.0);
        CHECK((rep.terms[0] - a).max_abs_entry() <= 1e-12);
        CHECK((rep.terms[1] - a).max_abs_entry() <= 1e-10);
        CHECK(std::fabs(*rep.constants.beta) <= 1e-10);
        CHECK(rep.passed);
    }
    SUBCASE("order precondition") {
        CHECK_THROWS_AS(furuta_chain(FunctionDescriptor::power(2.0), PowerTransform{0.5},
                                     SymMatrix::diag({2.0, 1.0}), SymMatrix::diag({1.0, 2.0}),
                                     Interval(0.5, 3.0), 1.0),
                        PreconditionError);
    }
    SUBCASE("window containment precondition") {
        CHECK_THROWS_AS(furuta_chain(FunctionDescriptor::power(2.0), PowerTransform{0.5},
                                     SymMatrix::diag({0.5, 2.0}), SymMatrix::diag({2.0, 3.0}),
                                     Interval(1.0, 3.0), 1.0),
                        PreconditionError);
    }
    SUBCASE("decreasing f swaps the sandwich onto the larger operator") {
        const Interval j(1.0, 4.0);
        const auto a = SymMatrix::diag({1.0, 1.2});
        const auto b = SymMatrix::diag({3.8, 1.2});
        const double k = kantorovich_k(j, -1.0);
        const auto rep = furuta_chain(FunctionDescriptor::power(-1.0), PowerTransform{0.5}, a, b,
                                      j, k);
        CHECK(rep.mode == "decreasing");
        // sandwich on B: B^-1 <= envelope(B) <= K A^-1
        CHECK(rep.terms[0](0, 0) == doctest::Approx(1.0 / 3.8).epsilon(1e-12));
        CHECK(rep.terms[2](0, 0) == doctest::Approx(k).epsilon(1e-9));
        CHECK(rep.passed);
        // the literal increasing-orientation statement is false here:
        // f(A) <= K f(B) fails on the first diagonal entry
        CHECK(1.0 > k / 3.8);
    }
    SUBCASE("random pairs with both closed-form multipliers") {
        std::mt19937_64 rng(73);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 2 + static_cast<int>(u01(rng) * 3.99);
            const Interval j(0.4 + 0.5 * u01(rng), 2.0 + u01(rng));
            std::vector<double> eigs(n);
            for (double& e : eigs) e = j.m + 0.7 * (j.M - j.m) * u01(rng);
            const SymMatrix a = ensembles::with_spectrum(eigs, rng);
            const SymMatrix bump = ensembles::gram(n, rng);
            const double top_a = eigendecompose(a).eigenvalues.back();
            const double top_bump = eigendecompose(bump).eigenvalues.back();
            const SymMatrix b = a + (u01(rng) * (j.M - top_a) / std::max(top_bump, 1e-9)) * bump;

            const double rs[3] = {2.0, 3.0, -1.0};
            const double r = rs[trial % 3];
            const auto f = FunctionDescriptor::power(r);
            const auto repk =
                furuta_chain(f, PowerTransform{0.5}, a, b, j, kantorovich_k(j, r), 1e-8);
            CHECK(repk.passed);
            CHECK(std::fabs(*repk.constants.beta) <= 1e-8);
            const auto repc = furuta_chain(f, PowerTransform{0.5}, a, b, j, 1.0, 1e-8);
            CHECK(repc.passed);
            CHECK(*repc.constants.beta ==
                  doctest::Approx(kantorovich_c(j, r)).epsilon(1e-8));
        }
    }
}

TEST_CASE("mond-pecaric sampling") {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(mond_pecaric_check(FunctionDescriptor::power(2.0), SymMatrix::diag({1.0, 2.0}),
                             {inv_sqrt2, inv_sqrt2}, 0));
    CHECK(mond_pecaric_check(FunctionDescriptor::power(1.0), kExampleMatrix,
                             {inv_sqrt2, inv_sqrt2}, 50));
    CHECK(mond_pecaric_check(FunctionDescriptor::power(-1.0), kExampleMatrix,
                             {1.0, 0.0}, 100));
    CHECK_THROWS_AS(mond_pecaric_check(FunctionDescriptor::power(2.0),
                                       SymMatrix::diag({1.0, 2.0}), {1.0, 1.0}, 0),
                    PreconditionError);
}

TEST_CASE("davis-choi-jensen verdict") {
    SUBCASE("square through the normalized trace") {
        const auto v = dcj_check(FunctionDescriptor::power(2.0), kExampleMatrix,
                                 MapDescriptor::normalized_trace());
        CHECK(v.holds);
        // tr(A^2)/2 = 7.5 vs (tr(A)/2)^2 = 6.25
        CHECK(v.min_gap_eigenvalue == doctest::Approx(7.5 - 6.25).epsilon(1e-12));
    }
    SUBCASE("affine equality") {
        const auto v = dcj_check(FunctionDescriptor::power(1.0), kExampleMatrix,
                                 MapDescriptor::normalized_trace());
        CHECK(v.holds);
        CHECK(std::fabs(v.min_gap_eigenvalue) <= 1e-12);
    }
    SUBCASE("diagonal matrix under pinching commutes") {
        const auto v = dcj_check(FunctionDescriptor::power(-1.0), SymMatrix::diag({1.0, 4.0}),
                                 MapDescriptor::pinching({1, 1}));
        CHECK(v.holds);
        CHECK(std::fabs(v.min_gap_eigenvalue) <= 1e-12);
    }
    SUBCASE("undeclared functions are refused") {
        CHECK_THROWS_AS(dcj_check(FunctionDescriptor::power(3.0), kExampleMatrix,
                                  MapDescriptor::normalized_trace()),
                        PreconditionError);
    }
    SUBCASE("holds across random draws for declared catalog entries") {
        std::mt19937_64 rng(79);
        for (int trial = 0; trial < 50; ++trial) {
            const SymMatrix a = ensembles::symmetric_with_floor(4, 0.3, rng);
            for (const auto& f : builtin_catalog()) {
                if (!f.declared_operator_convex()) continue;
                CHECK(dcj_check(f, a, MapDescriptor::pinching({2, 2})).holds);
            }
        }
    }
}

TEST_CASE("two-sided ratio chain") {
    SUBCASE("worked example numbers") {
        const auto rep = two_sided_ratio_chain(FunctionDescriptor::power(-1.0), kExampleMatrix,
                                         MapDescriptor::normalized_trace(), kExampleWindow);
        const double alpha = 5.15 * 5.15 / (4.0 * 1.35 * 3.8);
        CHECK(*rep.constants.alpha == doctest::Approx(alpha).epsilon(1e-9));
        CHECK(rep.terms[0](0, 0) == doctest::Approx(0.5 / alpha).epsilon(1e-9));
        CHECK(rep.terms[1](0, 0) == doctest::Approx(0.4).epsilon(1e-12));
        CHECK(rep.terms[2](0, 0) == doctest::Approx(0.5 * alpha).epsilon(1e-9));
        CHECK(rep.passed);
    }
    SUBCASE("affine f collapses to equality") {
        const auto rep = two_sided_ratio_chain(FunctionDescriptor::power(1.0), kExampleMatrix,
                                         MapDescriptor::normalized_trace(), std::nullopt);
        CHECK(*rep.constants.alpha == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(rep.passed);
    }
    SUBCASE("square through the trace") {
        const auto rep = two_sided_ratio_chain(FunctionDescriptor::power(2.0),
                                         SymMatrix::diag({1.0, 2.0}),
                                         MapDescriptor::normalized_trace(), Interval(1.0, 2.0));
        CHECK(*rep.constants.alpha == doctest::Approx(1.125).epsilon(1e-10));
        CHECK(rep.terms[0](0, 0) == doctest::Approx(2.5 / 1.125).epsilon(1e-9));
        CHECK(rep.terms[1](0, 0) == doctest::Approx(2.25).epsilon(1e-12));
        CHECK(rep.terms[2](0, 0) == doctest::Approx(2.5 * 1.125).epsilon(1e-9));
        CHECK(rep.passed);
    }
}
