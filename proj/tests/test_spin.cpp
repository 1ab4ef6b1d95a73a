#include <doctest.h>

#include <cmath>

#include "lyl/json_io.hpp"
#include "lyl/prng.hpp"
#include "lyl/roots.hpp"
#include "lyl/spin.hpp"
#include "lyl/stats.hpp"

using namespace lyl;

TEST_CASE("two-site ferromagnet has the closed-form partition polynomial") {
    double J = 1.0, beta = 0.5;
    SpinSystem s = make_chain(2, J, beta);
    std::vector<dd> c = partition_polynomial(s);
    REQUIRE(c.size() == 3);
    // P = e^{beta J} (1 + 2 e^{-2 beta J} z + z^2)
    double f = std::exp(beta * J);
    CHECK(c[0].to_double() == doctest::Approx(f).epsilon(1e-28));
    CHECK(c[1].to_double() == doctest::Approx(2.0 * std::exp(-beta * J)).epsilon(1e-14));
    CHECK(c[2].to_double() == doctest::Approx(f).epsilon(1e-28));

    // roots -b +/- i sqrt(1-b^2), b = e^{-2 beta J}: modulus exactly 1
    RootSet rs = find_roots(c);
    double b = std::exp(-2.0 * beta * J);
    for (const auto& r : rs.roots) {
        CHECK(std::abs(r.value) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(r.value.real() == doctest::Approx(-b).epsilon(1e-12));
    }
}

TEST_CASE("beta = 0 reduces to (1+z)^n exactly") {
    SpinSystem s = make_chain(7, 1.0, 0.0);
    std::vector<dd> c = partition_polynomial(s);
    for (int m = 0; m <= 7; ++m) {
        dd want = dd_from_bigint(binomial(7, static_cast<unsigned>(m)));
        CHECK((c[static_cast<std::size_t>(m)] - want).to_double() == 0.0);
    }
    // single site: 1 + z
    std::vector<dd> one = partition_polynomial(make_chain(1, 1.0, 0.7));
    CHECK(one[0].to_double() == doctest::Approx(1.0));
    CHECK(one[1].to_double() == doctest::Approx(1.0));
}

TEST_CASE("lee-yang circle certificate on chains and the torus") {
    for (int n : {3, 6, 9, 12}) {
        for (double beta : {0.1, 0.3, 1.0}) {
            SpinSystem s = make_chain(n, 1.0, beta);
            RootSet rs = find_roots(partition_polynomial(s));
            WedgeCertificate cert = lee_yang_certificate(s, rs);
            CHECK(cert.applicable);
            CHECK(cert.pass);
            for (const auto& r : rs.roots)
                CHECK(std::fabs(std::abs(r.value) - 1.0) <= r.error_radius + 1e-8);
        }
    }
    SpinSystem torus = make_torus(3, 3, 1.0, 0.3);
    CHECK(torus.pairs.size() == 18);
    RootSet rs = find_roots(partition_polynomial(torus));
    CHECK(lee_yang_certificate(torus, rs).pass);

    // antiferromagnetic coupling: hypothesis fails, certificate inapplicable
    SpinSystem anti = make_chain(4, -1.0, 0.5);
    RootSet ra = find_roots(partition_polynomial(anti));
    WedgeCertificate ca = lee_yang_certificate(anti, ra);
    CHECK_FALSE(ca.applicable);
}

TEST_CASE("ferromagnet coefficients are palindromic (spin-flip symmetry)") {
    SpinSystem s = make_torus(3, 3, 1.0, 0.3);
    std::vector<dd> c = partition_polynomial(s);
    for (std::size_t m = 0; m < c.size(); ++m) {
        dd diff = c[m] - c[c.size() - 1 - m];
        CHECK(std::fabs(diff.to_double()) <= 1e-25 * c[m].to_double());
    }
}

TEST_CASE("finite pressure") {
    // beta = 0: P = 2^n (1+z)^n ... at z = 1, P = 2^n, pressure log 2 per site
    SpinSystem free = make_chain(5, 1.0, 0.0);
    CHECK(finite_pressure(free, 1.0) == doctest::Approx(std::log(2.0) + std::log(2.0) * 0.0 +
                                                        std::log(1.0 + 1.0) * 0.0 + std::log(2.0) * 0.0)
                                            .epsilon(1e-12));
    // spelled out: log((1+z)^n)/n at z=1 is log 2
    CHECK(finite_pressure(free, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-13));
    CHECK(finite_pressure(make_chain(1, 0.0, 0.3), 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-13));

    // two-site closed form
    double J = 0.8, beta = 0.4, z = 1.3;
    SpinSystem two = make_chain(2, J, beta);
    double P = std::exp(beta * J) * (1.0 + z * z) + 2.0 * std::exp(-beta * J) * z;
    CHECK(finite_pressure(two, z) == doctest::Approx(0.5 * std::log(P)).epsilon(1e-12));
    CHECK_THROWS_AS(finite_pressure(two, -1.0), InputError);
}

TEST_CASE("ordered-sum convention doubles every coupling") {
    SpinSystem s = make_chain(4, 0.7, 0.9);
    SpinSystem doubled = make_chain(4, 1.4, 0.9);
    s.ordered_sum = true;
    std::vector<dd> a = partition_polynomial(s);
    std::vector<dd> b = partition_polynomial(doubled);
    for (std::size_t m = 0; m < a.size(); ++m)
        CHECK(std::fabs((a[m] - b[m]).to_double()) <= 1e-28 * a[m].to_double());
}

TEST_CASE("spin to particle dictionary preserves the up-spin distribution") {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 4 + static_cast<int>(rng.next_below(4));
        double J = 0.3 + rng.next_real();
        double beta = 0.2 + rng.next_real();
        SpinSystem s = trial % 2 ? make_chain(n, J, beta, true) : make_chain(n, J, beta);
        BigRational z0 = trial % 3 ? BigRational(1) : BigRational(BigInt(3), BigInt(4));
        DistributionTable spin_dt = distribution_real(partition_polynomial(s), z0);

        ParticleSystem ps = spin_to_particle(s);
        DistributionTable gas_dt = distribution_real(particle_polynomial(ps), z0);
        REQUIRE(spin_dt.q.size() == gas_dt.q.size());
        for (std::size_t m = 0; m < spin_dt.q.size(); ++m)
            CHECK(std::fabs((spin_dt.q[m] - gas_dt.q[m]).to_double()) < 1e-14);
    }
}

TEST_CASE("second-moment constants on pure pair potentials") {
    // phi = 0 everywhere
    ParticleSystem zero = ParticleSystem::pair_only(4, 1.0);
    auto [d0, b0] = second_moment_constants(zero);
    CHECK(d0 == 0.0);
    CHECK(b0 == 0.0);

    // a single repulsive pair at beta = 1: D = 1 - e^{-1}, B = 0
    ParticleSystem rep = ParticleSystem::pair_only(4, 1.0);
    rep.set_pair(0, 1, 1.0);
    auto [d1, b1] = second_moment_constants(rep);
    CHECK(d1 == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
    CHECK(b1 == 0.0);

    // a single attractive pair: D = 0, B = 1
    ParticleSystem att = ParticleSystem::pair_only(4, 1.0);
    att.set_pair(2, 3, -1.0);
    auto [d2, b2] = second_moment_constants(att);
    CHECK(d2 == 0.0);
    CHECK(b2 == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("second-moment inequality: hard-core ideal gas attains equality") {
    for (int n : {3, 5, 8}) {
        ParticleSystem gas = ParticleSystem::pair_only(n, 1.0);
        SecondMomentReport rep = second_moment_inequality(gas, BigRational(1));
        CHECK(rep.D_pair == 0.0);
        CHECK(rep.D_eff == 1.0);
        CHECK(rep.holds);
        for (const auto& m : rep.margins)
            CHECK(std::fabs(m.lhs - m.rhs) <= 1e-24 * std::fabs(m.rhs)); // exact equality
    }
    // and at a rational fugacity
    ParticleSystem gas = ParticleSystem::pair_only(6, 1.0);
    SecondMomentReport rep = second_moment_inequality(gas, BigRational(BigInt(2), BigInt(3)));
    CHECK(rep.holds);
    for (const auto& m : rep.margins)
        CHECK(std::fabs(m.lhs - m.rhs) <= 1e-24 * std::fabs(m.rhs));
}

TEST_CASE("second-moment inequality holds for repulsive, attractive, mixed systems") {
    SplitMix64 rng(86);
    for (int trial = 0; trial < 24; ++trial) {
        int n = 4 + static_cast<int>(rng.next_below(4));
        ParticleSystem ps = ParticleSystem::pair_only(n, 0.5 + rng.next_real());
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                double u = rng.next_real();
                double v = 3.0 * (rng.next_real() - 0.5);
                if (u < 0.3) ps.set_pair(a, b, std::fabs(v));     // repulsive
                else if (u < 0.6) ps.set_pair(a, b, -std::fabs(v)); // attractive
                else if (u < 0.8) ps.set_pair(a, b, v);             // mixed sign
            }
        BigRational z0 = trial % 2 ? BigRational(1) : BigRational(BigInt(1), BigInt(2));
        SecondMomentReport rep = second_moment_inequality(ps, z0);
        CHECK(rep.holds);
    }
}

TEST_CASE("spin JSON parsing") {
    json j = json::parse(R"({
        "sites": ["x", "y", "z"],
        "pairs": [["x","y",1.0], ["y","z",0.5]],
        "beta": 0.3
    })");
    SpinSystem s = parse_spin_json(j);
    CHECK(s.sites.size() == 3);
    CHECK(s.pairs.size() == 2);
    CHECK(s.beta == doctest::Approx(0.3));
    CHECK(s.ferromagnetic());

    CHECK_THROWS_AS(parse_spin_json(json::parse(R"({"sites":["a"],"beta":-1})")), InputError);
    CHECK_THROWS_AS(parse_spin_json(json::parse(R"({"sites":["a","b"],"pairs":[["a","a",1]],"beta":1})")),
                    InputError);
    CHECK_THROWS_AS(parse_spin_json(json::parse(R"({"beta":1})")), InputError);
}

TEST_CASE("site cap raises a resource error") {
    SpinSystem s = make_chain(12, 1.0, 0.1);
    CHECK_THROWS_AS(partition_polynomial(s, 10), ResourceError);
    ParticleSystem ps = ParticleSystem::pair_only(12, 1.0);
    CHECK_THROWS_AS(particle_polynomial(ps, 10), ResourceError);
}
