#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "gridfreq/rng.hpp"
#include "gridfreq/transfer_function.hpp"

using gridfreq::Polynomial;
using gridfreq::RationalTF;
using Catch::Approx;

namespace {

void check_tf(const RationalTF& g, const std::vector<double>& num,
              const std::vector<double>& den, double margin = 1e-12) {
    // Compare against the monic-denominator normalization of the expected TF.
    const double lead = den.back();
    REQUIRE(g.num().coeffs().size() == num.size());
    REQUIRE(g.den().coeffs().size() == den.size());
    for (std::size_t i = 0; i < num.size(); ++i)
        CHECK(g.num().coeffs()[i] == Approx(num[i] / lead).margin(margin));
    for (std::size_t i = 0; i < den.size(); ++i)
        CHECK(g.den().coeffs()[i] == Approx(den[i] / lead).margin(margin));
}

RationalTF random_tf(gridfreq::Rng& rng, int max_deg = 2) {
    auto rand_poly = [&](int deg) {
        std::vector<double> c(static_cast<std::size_t>(deg) + 1);
        for (double& v : c) v = rng.uniform(-2.0, 2.0);
        if (std::abs(c.back()) < 0.1) c.back() = 0.5;  // keep the degree
        return Polynomial(std::move(c));
    };
    const int nd = 1 + static_cast<int>(rng.uniform01() * max_deg);
    const int nn = static_cast<int>(rng.uniform01() * (nd + 1));
    return RationalTF(rand_poly(nn), rand_poly(nd));
}

std::complex<double> random_point(gridfreq::Rng& rng) {
    return {rng.uniform(-3.0, 3.0), rng.uniform(0.2, 3.0)};
}

}  // namespace

TEST_CASE("tf_add") {
    RationalTF g(Polynomial{1.0}, Polynomial{1.0, 1.0});

    SECTION("identical denominators combine numerators") {
        check_tf(gridfreq::tf_add(g, g), {2.0}, {1.0, 1.0});
    }
    SECTION("additive identity") {
        RationalTF sum = gridfreq::tf_add(g, RationalTF::zero());
        check_tf(sum, {1.0}, {1.0, 1.0});
    }
    SECTION("1/s + 1/(s+2) = (2s+2)/(s^2+2s)") {
        RationalTF a(Polynomial{1.0}, Polynomial{0.0, 1.0});
        RationalTF b(Polynomial{1.0}, Polynomial{2.0, 1.0});
        check_tf(gridfreq::tf_add(a, b), {2.0, 2.0}, {0.0, 2.0, 1.0});
    }
}

TEST_CASE("tf_mul") {
    SECTION("multiplicative identity") {
        RationalTF g(Polynomial{3.0, 1.0}, Polynomial{1.0, 2.0});
        check_tf(gridfreq::tf_mul(g, RationalTF::constant(1.0)), {3.0, 1.0}, {1.0, 2.0});
    }
    SECTION("(1/s)(s/(s+1)) cancels to 1/(s+1)") {
        RationalTF a(Polynomial{1.0}, Polynomial{0.0, 1.0});
        RationalTF b(Polynomial{0.0, 1.0}, Polynomial{1.0, 1.0});
        check_tf(gridfreq::tf_mul(a, b), {1.0}, {1.0, 1.0}, 1e-9);
    }
    SECTION("2/(s+1) * 3/(s+2) = 6/(s^2+3s+2)") {
        RationalTF a(Polynomial{2.0}, Polynomial{1.0, 1.0});
        RationalTF b(Polynomial{3.0}, Polynomial{2.0, 1.0});
        check_tf(gridfreq::tf_mul(a, b), {6.0}, {2.0, 3.0, 1.0});
    }
}

TEST_CASE("tf_feedback") {
    SECTION("integrator with constant feedback gives 1/(s+k)") {
        RationalTF g(Polynomial{1.0}, Polynomial{0.0, 1.0});
        check_tf(gridfreq::tf_feedback(g, RationalTF::constant(4.0)), {1.0}, {4.0, 1.0});
    }
    SECTION("open loop when h = 0") {
        RationalTF g(Polynomial{2.0}, Polynomial{1.0, 3.0});
        check_tf(gridfreq::tf_feedback(g, RationalTF::zero()), {2.0}, {1.0, 3.0});
    }
    SECTION("10/(s+1) with unity feedback gives 10/(s+11)") {
        RationalTF g(Polynomial{10.0}, Polynomial{1.0, 1.0});
        check_tf(gridfreq::tf_feedback(g, RationalTF::constant(1.0)), {10.0}, {11.0, 1.0});
    }
    SECTION("degenerate loop throws") {
        CHECK_THROWS_AS(gridfreq::tf_feedback(RationalTF::constant(-1.0), RationalTF::constant(1.0)),
                        gridfreq::DegenerateLoop);
    }
}

TEST_CASE("rational algebra ring laws at random evaluation points") {
    gridfreq::Rng rng(42);
    for (int trial = 0; trial < 8; ++trial) {
        RationalTF a = random_tf(rng);
        RationalTF b = random_tf(rng);
        RationalTF c = random_tf(rng);
        RationalTF ab = gridfreq::tf_add(a, b);
        RationalTF ba = gridfreq::tf_add(b, a);
        RationalTF ab_c = gridfreq::tf_add(ab, c);
        RationalTF a_bc = gridfreq::tf_add(a, gridfreq::tf_add(b, c));
        RationalTF mul_assoc_l = gridfreq::tf_mul(gridfreq::tf_mul(a, b), c);
        RationalTF mul_assoc_r = gridfreq::tf_mul(a, gridfreq::tf_mul(b, c));
        RationalTF distrib_l = gridfreq::tf_mul(a, gridfreq::tf_add(b, c));
        RationalTF distrib_r = gridfreq::tf_add(gridfreq::tf_mul(a, b), gridfreq::tf_mul(a, c));
        for (int k = 0; k < 16; ++k) {
            const std::complex<double> s = random_point(rng);
            auto close = [&](std::complex<double> x, std::complex<double> y) {
                return std::abs(x - y) <= 1e-9 * std::max(1.0, std::max(std::abs(x), std::abs(y)));
            };
            CHECK(close(ab(s), ba(s)));
            CHECK(close(ab_c(s), a_bc(s)));
            CHECK(close(mul_assoc_l(s), mul_assoc_r(s)));
            CHECK(close(distrib_l(s), distrib_r(s)));
        }
    }
}

TEST_CASE("feedback identity at random points") {
    gridfreq::Rng rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        RationalTF g = random_tf(rng);
        RationalTF h = random_tf(rng);
        RationalTF cl = gridfreq::tf_feedback(g, h);
        for (int k = 0; k < 8; ++k) {
            const std::complex<double> s = random_point(rng);
            const std::complex<double> expected = g(s) / (1.0 + g(s) * h(s));
            if (!std::isfinite(std::abs(expected))) continue;
            CHECK(std::abs(cl(s) - expected) <=
                  1e-9 * std::max(1.0, std::abs(expected)));
        }
    }
}

TEST_CASE("dcgain") {
    SECTION("biproper evaluation at zero") {
        RationalTF g(Polynomial{4.0, 2.0}, Polynomial{2.0, 1.0});
        CHECK(gridfreq::dcgain(g) == Approx(2.0));
    }
    SECTION("integrator reports infinity") {
        RationalTF g(Polynomial{1.0}, Polynomial{0.0, 1.0});
        CHECK(std::isinf(gridfreq::dcgain(g)));
    }
    SECTION("common root at zero cancels") {
        RationalTF g(Polynomial{0.0, 1.0}, Polynomial{0.0, 1.0, 1.0});
        CHECK(gridfreq::dcgain(g) == Approx(1.0));
    }
    SECTION("zero function") { CHECK(gridfreq::dcgain(RationalTF::zero()) == 0.0); }
}

TEST_CASE("poles") {
    SECTION("factorable denominator") {
        RationalTF g(Polynomial{1.0}, Polynomial{2.0, 3.0, 1.0});
        auto p = gridfreq::poles(g);
        REQUIRE(p.size() == 2);
        CHECK(p[0].real() == Approx(-2.0));
        CHECK(p[1].real() == Approx(-1.0));
    }
    SECTION("integrator pole at origin") {
        RationalTF g(Polynomial{1.0}, Polynomial{0.0, 1.0});
        auto p = gridfreq::poles(g);
        REQUIRE(p.size() == 1);
        CHECK(std::abs(p[0]) < 1e-14);
    }
    SECTION("cancelled pole does not appear") {
        RationalTF g(Polynomial{0.0, 1.0}, Polynomial{0.0, 1.0, 1.0});  // s/(s(s+1))
        auto p = gridfreq::poles(g);
        REQUIRE(p.size() == 1);
        CHECK(p[0].real() == Approx(-1.0));
    }
}
