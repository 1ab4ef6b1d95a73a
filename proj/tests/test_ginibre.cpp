#include <doctest.h>

#include "lyl/count.hpp"
#include "lyl/generators.hpp"
#include "lyl/ginibre.hpp"
#include "lyl/prng.hpp"

using namespace lyl;

TEST_CASE("binomial case: equality in hypothesis and conclusion at A = 1") {
    for (int N : {4, 9, 16}) {
        FugacityModel fm(CountPolynomial::binomial_power(static_cast<unsigned>(N)));
        GinibreReport rep = ginibre_hypothesis(fm, BigRational(1));
        CHECK(rep.skipped == 0);
        CHECK(rep.hypothesis_holds);
        for (const auto& g : rep.margins) {
            CHECK(g.defined);
            CHECK(g.margin == BigRational(0)); // (N-m-1) - (N-m) + 1 = 0, exactly
        }
        CHECK(rep.conclusion_holds);
        CHECK(rep.conclusion_margin == BigRational(0)); // Var = N/4 = E/(1+1), exactly
        CHECK(rep.sound);
    }
}

TEST_CASE("K3 matchings with the graph formula A = (2 alpha + 1) z0") {
    Graph k3({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    ConstraintProfile cp(k3, {0, 1});
    // alpha = max(d_v - k_v) = 2 - 1 = 1, so A = 3 at z0 = 1
    BigRational A = graph_ginibre_A(k3, cp, BigRational(1));
    CHECK(A == BigRational(3));
    FugacityModel fm(count_by_enumeration(k3, cp));
    GinibreReport rep = ginibre_hypothesis(fm, A);
    CHECK(rep.hypothesis_holds);
    CHECK(rep.conclusion_holds);
    // Var = 3/16 and E/(1+A) = (3/4)/4 = 3/16: equality again
    CHECK(rep.conclusion_margin == BigRational(0));
}

TEST_CASE("failing hypothesis is reported, conclusion not asserted") {
    FugacityModel fm(CountPolynomial::binomial_power(6));
    GinibreReport rep = ginibre_hypothesis(fm, BigRational::parse("-999/1000"));
    CHECK_FALSE(rep.hypothesis_holds);
    bool negative_seen = false;
    for (const auto& g : rep.margins)
        if (g.defined && g.margin.sign() < 0) negative_seen = true;
    CHECK(negative_seen);
    CHECK(rep.sound); // nothing to assert when the hypothesis fails

    CHECK_THROWS_AS(ginibre_hypothesis(fm, BigRational(-2)), InputError);
}

TEST_CASE("graph A formula: examples and gates") {
    // matchings on a d_max = 4 graph at z0 = 1: alpha = 3, A = 7
    Graph star({"c", "l0", "l1", "l2", "l3"},
               {{"c", "l0"}, {"c", "l1"}, {"c", "l2"}, {"c", "l3"}});
    CHECK(graph_ginibre_A(star, ConstraintProfile(star, {0, 1}), BigRational(1)) == BigRational(7));

    // unbranched on a d_max = 3 graph at z0 = 2: alpha = 1, A = 6
    Graph s3({"c", "l0", "l1", "l2"}, {{"c", "l0"}, {"c", "l1"}, {"c", "l2"}});
    CHECK(graph_ginibre_A(s3, ConstraintProfile(s3, {0, 1, 2}), BigRational(2)) == BigRational(6));

    // non-down-set profile is rejected
    CHECK_THROWS_AS(graph_ginibre_A(s3, ConstraintProfile(s3, std::vector<int>{0, 2}), BigRational(1)),
                    InputError);
}

TEST_CASE("zero-T skip convention") {
    // P = 1 + z^2 has p_1 = 0: the m = 0 ratio is undefined and skipped
    CountPolynomial even(std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(1)});
    GinibreReport rep = ginibre_hypothesis(FugacityModel(even), BigRational(1));
    CHECK(rep.skipped > 0);
    CHECK(rep.sound); // skips block the assertion
}

TEST_CASE("extension-counting identities on K3 matchings") {
    Graph k3({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    ConstraintProfile cp(k3, {0, 1});
    ExtensionCountReport r0 = extension_count_identities(k3, cp, 0);
    CHECK(r0.p_m == BigInt(1));
    CHECK(r0.k1_sum == BigInt(3)); // every single edge extends the empty matching
    CHECK(r0.k2_sum == BigInt(0)); // no admissible pair of edges
    CHECK(r0.identity1);           // 1 * p_1 = 3
    CHECK(r0.identity2);           // 2 * 1 * p_2 = 0
    CHECK(r0.eq_second_moment);
}

TEST_CASE("extension-counting identities on the 4-cycle, unbranched, m = 1") {
    Graph c4 = make_cycle(4);
    ConstraintProfile cp(c4, {0, 1, 2});
    ExtensionCountReport r = extension_count_identities(c4, cp, 1);
    CHECK(r.identity1);
    CHECK(r.identity2);
    CHECK(r.eq_second_moment);
}

TEST_CASE("identities hold for every m on random down-set instances") {
    SplitMix64 rng(1906);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = make_gnm(6, 4 + static_cast<int>(rng.next_below(5)), rng.next_u64());
        std::map<std::string, std::vector<int>> sets;
        for (int v = 0; v < g.num_vertices(); ++v) {
            int kv = 1 + static_cast<int>(rng.next_below(3));
            std::vector<int> C;
            for (int k = 0; k <= kv; ++k) C.push_back(k);
            sets[g.vertex_id(v)] = C;
        }
        ConstraintProfile cp(g, sets);
        CountPolynomial p = count_by_enumeration(g, cp);
        for (int m = 0; m + 2 <= p.degree(); ++m) {
            ExtensionCountReport r = extension_count_identities(g, cp, m);
            CHECK(r.identity1);
            CHECK(r.identity2);
            if (r.expectations_defined) CHECK(r.eq_second_moment);
        }
        // and the ginibre hypothesis itself holds with the graph A
        GinibreReport rep =
            ginibre_hypothesis(FugacityModel(p), graph_ginibre_A(g, cp, BigRational(1)));
        CHECK(rep.hypothesis_holds);
        CHECK(rep.conclusion_holds);
    }
}

TEST_CASE("rational fugacity keeps margins exact") {
    Graph path = make_path(5);
    ConstraintProfile cp(path, {0, 1});
    CountPolynomial p = count_by_enumeration(path, cp);
    BigRational z0(BigInt(3), BigInt(7));
    GinibreReport rep =
        ginibre_hypothesis(FugacityModel(p, z0), graph_ginibre_A(path, cp, z0));
    CHECK(rep.hypothesis_holds);
    CHECK(rep.conclusion_holds);
    // margins are exact rationals: denominators stay sane
    for (const auto& g : rep.margins)
        if (g.defined) CHECK(!g.margin.den().is_zero());
}
