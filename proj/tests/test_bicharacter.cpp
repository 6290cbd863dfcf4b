#include <doctest.h>

#include <numeric>

#include "rmx/bicharacter.hpp"
#include "rmx/errors.hpp"
#include "test_util.hpp"

using namespace rmx;
using namespace rmx::testutil;

TEST_CASE("cyclic bicharacters match the power formula") {
    for (int n : {1, 2, 3, 4, 6, 8}) {
        GroupSpec g{{n}};
        for (int k = 0; k < n; ++k) {
            Bicharacter sigma = cyclic_bicharacter(n, k);
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s)
                    CHECK(sigma.evaluate(GroupElement{{r}}, GroupElement{{s}}) ==
                          Cyc::root_of_unity(n, static_cast<long long>(k) * r * s));
        }
    }
    CHECK(cyclic_bicharacter(4, 0) == trivial_bicharacter(GroupSpec{{4}}));
    CHECK(cyclic_bicharacter(4, 7) == cyclic_bicharacter(4, 3));
}

TEST_CASE("evaluation basics") {
    GroupSpec g = parse_group_spec("Z4xZ2");
    Bicharacter sigma = make_bicharacter(g, {{1, 0}, {0, 1}});
    CHECK(sigma.evaluate(GroupElement{{1, 0}}, GroupElement{{1, 0}}) ==
          Cyc::root_of_unity(4, 1));
    for (const Bicharacter &s : enumerate_all(g))
        for (const GroupElement &x : g.elements()) {
            CHECK(s.evaluate(g.identity(), x).is_one());
            CHECK(s.evaluate(x, g.identity()).is_one());
        }
    CHECK_THROWS_AS(sigma.evaluate(GroupElement{{1}}, GroupElement{{1, 0}}), SpecMismatch);
}

TEST_CASE("values are roots of unity of the element orders") {
    for (const char *name : {"Z4xZ2", "Z6", "Z2xZ3", "Z9"}) {
        GroupSpec g = parse_group_spec(name);
        for (const Bicharacter &sigma : enumerate_all(g))
            for (const GroupElement &a : g.elements())
                for (const GroupElement &b : g.elements()) {
                    Cyc v = sigma.evaluate(a, b);
                    CHECK(v.pow(g.element_order(a)).is_one());
                    CHECK(v.pow(g.element_order(b)).is_one());
                }
    }
}

TEST_CASE("make_bicharacter reduces out-of-range entries") {
    GroupSpec g = parse_group_spec("Z4xZ2");
    bool reduced = false;
    Bicharacter sigma = make_bicharacter(g, {{5, 2}, {0, -1}}, &reduced);
    CHECK(reduced);
    CHECK(sigma.K == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
    make_bicharacter(g, {{1, 0}, {0, 1}}, &reduced);
    CHECK_FALSE(reduced);
    CHECK_THROWS_AS(make_bicharacter(g, {{1}, {0, 1}}), SpecMismatch);
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_all(parse_group_spec("Z2")).size() == 2);
    CHECK(enumerate_all(parse_group_spec("Z4xZ2")).size() == 32);
    CHECK(enumerate_all(parse_group_spec("1")).size() == 1);
    CHECK(bicharacter_count(parse_group_spec("Z2xZ3")) == 6);
    CHECK(bicharacter_count(parse_group_spec("Z2xZ2xZ2")) == 512);

    // the first entry of the enumeration is the trivial bicharacter and the
    // sequence is strictly increasing in row-major matrix order
    std::vector<Bicharacter> all = enumerate_all(parse_group_spec("Z4xZ2"));
    CHECK(all.front() == trivial_bicharacter(parse_group_spec("Z4xZ2")));
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1].K < all[i].K);
}

TEST_CASE("from_table round trips and rejections") {
    GroupSpec z2 = parse_group_spec("Z2");
    FromTableResult round = from_table(table_of(cyclic_bicharacter(2, 1)));
    REQUIRE(round.accepted());
    CHECK(round.bicharacter->K == std::vector<std::vector<int>>{{1}});

    FromTableResult trivial = from_table(FunctionTable::constant(z2, Cyc::one(2)));
    REQUIRE(trivial.accepted());
    CHECK(*trivial.bicharacter == trivial_bicharacter(z2));

    // sigma(g,g) = zeta_4, all other values 1: not multiplicative
    FunctionTable bad = FunctionTable::constant(z2, Cyc::one(4));
    bad.at(GroupElement{{1}}, GroupElement{{1}}) = Cyc::root_of_unity(4, 1);
    FromTableResult rej = from_table(bad);
    CHECK_FALSE(rej.accepted());
    CHECK(rej.rejection.find("multiplicativity") != std::string::npos);

    FunctionTable zero = FunctionTable::constant(z2, Cyc::one(2));
    zero.at(GroupElement{{0}}, GroupElement{{1}}) = Cyc::zero(2);
    CHECK(from_table(zero).rejection == "zero value at (0), (1)");
}

TEST_CASE("enumeration is bijective onto accepted tables") {
    for (const char *name : {"Z2", "Z3", "Z4", "Z2xZ2", "Z6", "Z2xZ3"}) {
        GroupSpec g = parse_group_spec(name);
        std::vector<Bicharacter> all = enumerate_all(g);

        // every enumerated bicharacter's table is accepted and round-trips
        std::set<std::vector<int>> signatures;
        for (const Bicharacter &sigma : all) {
            FromTableResult res = from_table(table_of(sigma));
            REQUIRE(res.accepted());
            CHECK(*res.bicharacter == sigma);
            std::vector<int> sig;
            for (const GroupElement &a : g.elements())
                for (const GroupElement &b : g.elements())
                    sig.push_back(sigma.exponent(a, b));
            signatures.insert(sig);
        }
        // distinct bicharacters give distinct tables
        CHECK(signatures.size() == all.size());

        // out-of-range matrices reduce into the same set of tables
        std::size_t k = g.orders.size();
        std::vector<int> spans(k * k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                spans[i * k + j] = 2 * std::gcd(g.orders[i], g.orders[j]);
        std::vector<int> cells(k * k, 0);
        std::set<std::vector<int>> from_superset;
        while (true) {
            std::vector<std::vector<int>> mat(k, std::vector<int>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    mat[i][j] = cells[i * k + j];
            Bicharacter sigma = make_bicharacter(g, mat);
            std::vector<int> sig;
            for (const GroupElement &a : g.elements())
                for (const GroupElement &b : g.elements())
                    sig.push_back(sigma.exponent(a, b));
            from_superset.insert(sig);
            int i = static_cast<int>(cells.size()) - 1;
            for (; i >= 0; --i) {
                if (++cells[i] < spans[i])
                    break;
                cells[i] = 0;
            }
            if (i < 0)
                break;
        }
        CHECK(from_superset == signatures);
    }
}

TEST_CASE("commutation factors") {
    CHECK(is_commutation_factor(cyclic_bicharacter(2, 1)));
    CHECK(is_commutation_factor(trivial_bicharacter(parse_group_spec("Z4"))));
    CHECK_FALSE(is_commutation_factor(cyclic_bicharacter(4, 1)));

    // the generator criterion agrees with the exhaustive check
    for (const char *name : {"Z4", "Z2xZ2", "Z6", "Z2xZ3", "Z8", "Z3xZ3"}) {
        GroupSpec g = parse_group_spec(name);
        for (const Bicharacter &sigma : enumerate_all(g)) {
            bool skew = true;
            for (const GroupElement &a : g.elements())
                for (const GroupElement &b : g.elements())
                    if ((sigma.exponent(a, b) + sigma.exponent(b, a)) % g.exponent() != 0)
                        skew = false;
            CHECK(is_commutation_factor(sigma) == skew);
        }
    }
    // skew-symmetry forces sigma(a,a)^2 = 1
    GroupSpec g = parse_group_spec("Z4xZ2");
    for (const Bicharacter &sigma : enumerate_all(g))
        if (is_commutation_factor(sigma))
            for (const GroupElement &a : g.elements())
                CHECK(sigma.evaluate(a, a).pow(2).is_one());
}

TEST_CASE("transpose, product and inverse") {
    GroupSpec g = parse_group_spec("Z4xZ2");
    std::vector<Bicharacter> all = enumerate_all(g);
    for (const Bicharacter &sigma : all) {
        CHECK(transpose(transpose(sigma)) == sigma);
        CHECK(pointwise_product(sigma, trivial_bicharacter(g)) == sigma);
        Bicharacter inv = pointwise_inverse(sigma);
        CHECK(pointwise_product(sigma, inv) == trivial_bicharacter(g));
        for (const GroupElement &a : g.elements())
            for (const GroupElement &b : g.elements()) {
                CHECK(transpose(sigma).evaluate(a, b) == sigma.evaluate(b, a));
                CHECK(inv.evaluate(a, b) == sigma.evaluate(a, b).inverse());
            }
    }
    CHECK(pointwise_product(all[3], all[5]) == pointwise_product(all[5], all[3]));
}

TEST_CASE("kernels") {
    Bicharacter sigma2 = cyclic_bicharacter(4, 2);
    auto [n1, n2] = kernels(sigma2);
    CHECK(n1.elements == std::vector<GroupElement>{GroupElement{{0}}, GroupElement{{2}}});
    CHECK(n2.elements == n1.elements);

    GroupSpec z4 = parse_group_spec("Z4");
    auto [t1, t2] = kernels(trivial_bicharacter(z4));
    CHECK(t1.elements == z4.elements());
    CHECK(t2.elements == z4.elements());

    for (int n : {2, 3, 4, 5, 6}) {
        auto [k1, k2] = kernels(cyclic_bicharacter(n, 1));
        CHECK(k1.order() == 1);
        CHECK(k2.order() == 1);
    }
}

TEST_CASE("induced pairing") {
    // kernel of order 2 on Z4
    PairingData p = induced_pairing(cyclic_bicharacter(4, 2));
    CHECK(p.m == 2);
    CHECK(p.Delta1.elements ==
          std::vector<GroupElement>{GroupElement{{0}}, GroupElement{{2}}});
    CHECK(p.Delta2.elements == p.Delta1.elements);

    // trivial bicharacter
    PairingData t = induced_pairing(trivial_bicharacter(parse_group_spec("Z4xZ2")));
    CHECK(t.m == 1);
    CHECK(t.tau.size() == 1);
    CHECK(t.tau[0].is_one());

    // super sign factor on Z2: tau(chi, chi) = -1
    PairingData s = induced_pairing(cyclic_bicharacter(2, 1));
    CHECK(s.m == 2);
    CHECK(s.Delta1.elements == parse_group_spec("Z2").elements());
    CHECK(s.tau_at(0, 0).is_one());
    CHECK(s.tau_at(0, 1).is_one());
    CHECK(s.tau_at(1, 0).is_one());
    CHECK(s.tau_at(1, 1) == Cyc::rational(2, Rational(-1)));
}

TEST_CASE("induced pairing structure across groups") {
    for (const char *name : {"Z4xZ2", "Z6", "Z2xZ3", "Z8"}) {
        GroupSpec g = parse_group_spec(name);
        for (const Bicharacter &sigma : enumerate_all(g)) {
            PairingData p = induced_pairing(sigma);
            CHECK(p.Delta1.order() == p.m);
            CHECK(p.Delta2.order() == p.m);
            CHECK(g.order() % p.m == 0);
            CHECK(p.N1.order() * p.m == g.order());
            // tau agrees with sigma' restricted to the annihilators, and the
            // defining sum of the proposition reconstructs sigma
            for (const GroupElement &a : g.elements()) {
                for (const GroupElement &b : g.elements()) {
                    Cyc sum = Cyc::zero(g.exponent());
                    for (std::size_t i = 0; i < p.Delta1.elements.size(); ++i)
                        for (std::size_t j = 0; j < p.Delta2.elements.size(); ++j)
                            sum += p.tau_at(i, j) *
                                   pairing(g, p.Delta1.elements[i], a) *
                                   pairing(g, p.Delta2.elements[j], b);
                    sum *= Cyc::rational(g.exponent(), Rational(BigInt(1), BigInt(p.m)));
                    CHECK(sum == sigma.evaluate(a, b));
                }
            }
        }
    }
}

TEST_CASE("degenerate group edge cases") {
    GroupSpec trivial = parse_group_spec("1");
    std::vector<Bicharacter> all = enumerate_all(trivial);
    REQUIRE(all.size() == 1);
    CHECK(all[0].K.empty());
    CHECK(is_commutation_factor(all[0]));
    CHECK(all[0].evaluate(trivial.identity(), trivial.identity()).is_one());
    auto [n1, n2] = kernels(all[0]);
    CHECK(n1.order() == 1);
    PairingData p = induced_pairing(all[0]);
    CHECK(p.m == 1);
    CHECK(from_table(table_of(all[0])).accepted());
}
