#include <doctest.h>

#include "rmx/errors.hpp"
#include "rmx/hopf.hpp"
#include "test_util.hpp"

using namespace rmx;
using namespace rmx::testutil;

namespace {

// deterministic pseudo-random element with small rational coefficients
HopfElement sample_element(const GroupSpec &spec, Side side, unsigned seed) {
    unsigned long long state = seed * 0x9e3779b97f4a7c15ull + 1;
    auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<int>((state >> 33) & 0x7fffffff);
    };
    HopfElement x = hopf_zero(spec, side);
    int e = spec.exponent();
    std::vector<GroupElement> all = spec.elements();
    for (int t = 0; t < 3; ++t) {
        const GroupElement &key = all[next() % all.size()];
        Cyc c = Cyc::rational(e, Rational(next() % 9 - 4, 1 + next() % 5)) *
                Cyc::root_of_unity(e, next() % e);
        x.add_term(key, c);
    }
    return x;
}

} // namespace

TEST_CASE("algebra multiplication") {
    GroupSpec z4 = parse_group_spec("Z4");
    HopfElement chi1 = hopf_basis(z4, Side::Star, GroupElement{{1}});
    HopfElement chi3 = hopf_basis(z4, Side::Star, GroupElement{{3}});
    CHECK(chi1 * chi3 == hopf_unit(z4, Side::Star));

    GroupSpec z2 = parse_group_spec("Z2");
    HopfElement a = hopf_unit(z2, Side::Star) + hopf_basis(z2, Side::Star, GroupElement{{1}});
    HopfElement b = hopf_unit(z2, Side::Star) - hopf_basis(z2, Side::Star, GroupElement{{1}});
    CHECK((a * b).is_zero()); // (1 + chi)(1 - chi) = 1 - chi^2 = 0

    for (unsigned seed : {1u, 2u, 3u}) {
        HopfElement x = sample_element(z4, Side::Star, seed);
        CHECK(hopf_unit(z4, Side::Star) * x == x);
    }
    CHECK_THROWS_AS(chi1 * hopf_basis(z4, Side::Group, GroupElement{{1}}), SpecMismatch);
}

TEST_CASE("coproduct, counit, antipode") {
    GroupSpec z4 = parse_group_spec("Z4");
    HopfElement chi = hopf_basis(z4, Side::Star, GroupElement{{1}});
    Tensor2 delta = coproduct(chi);
    REQUIRE(delta.coeffs.size() == 1);
    CHECK(delta.coeffs.begin()->first == std::make_pair(GroupElement{{1}}, GroupElement{{1}}));

    HopfElement x = Cyc::rational(4, Rational(2)) * hopf_unit(z4, Side::Star) +
                    Cyc::rational(4, Rational(3)) * chi;
    CHECK(counit(x) == Cyc::rational(4, Rational(5)));
    CHECK(coproduct(hopf_zero(z4, Side::Star)).is_zero());

    CHECK(antipode(chi) == hopf_basis(z4, Side::Star, GroupElement{{3}}));
    CHECK(antipode(hopf_unit(z4, Side::Star)) == hopf_unit(z4, Side::Star));
    for (unsigned seed : {4u, 5u, 6u})
        CHECK(antipode(antipode(sample_element(z4, Side::Star, seed))) ==
              sample_element(z4, Side::Star, seed));
}

TEST_CASE("hopf algebra axioms on both sides") {
    for (const char *name :
         {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12", "Z2xZ2",
          "Z4xZ2", "Z2xZ2xZ2", "Z3xZ3", "Z6xZ2", "Z2xZ3", "1"}) {
        GroupSpec g = parse_group_spec(name);
        for (Side side : {Side::Star, Side::Group}) {
            for (const GroupElement &key : g.elements()) {
                HopfElement x = hopf_basis(g, side, key);
                Tensor2 dx = coproduct(x);
                // coassociativity
                CHECK(coproduct_slot1(dx) == coproduct_slot2(dx));
                // counit laws
                CHECK(counit_slot1(dx) == x);
                CHECK(counit_slot2(dx) == x);
                // antipode law m(S x id) Delta = eps * 1
                Tensor2 s_dx = antipode_slot1(dx);
                CHECK(contract_product(s_dx) == counit(x) * hopf_unit(g, side));
                CHECK(contract_product(antipode_slot2(dx)) == counit(x) * hopf_unit(g, side));
            }
        }
    }
}

TEST_CASE("twist") {
    GroupSpec z2 = parse_group_spec("Z2");
    Tensor2 t = tensor_product(hopf_basis(z2, Side::Star, GroupElement{{0}}),
                               hopf_basis(z2, Side::Star, GroupElement{{1}}));
    Tensor2 flipped = twist(t);
    CHECK(flipped.coeffs.begin()->first ==
          std::make_pair(GroupElement{{1}}, GroupElement{{0}}));
    CHECK(twist(flipped) == t);

    GroupSpec z4 = parse_group_spec("Z4");
    for (unsigned seed : {7u, 8u}) {
        Tensor2 x = tensor_product(sample_element(z4, Side::Star, seed),
                                   sample_element(z4, Side::Star, seed + 10));
        Tensor2 y = tensor_product(sample_element(z4, Side::Star, seed + 20),
                                   sample_element(z4, Side::Star, seed + 30));
        CHECK(twist(x * y) == twist(x) * twist(y));
    }
}

TEST_CASE("lifts into the triple tensor power") {
    GroupSpec z4 = parse_group_spec("Z4");
    Tensor2 t = tensor_product(hopf_basis(z4, Side::Star, GroupElement{{0}}),
                               hopf_basis(z4, Side::Star, GroupElement{{1}}));

    Tensor3 l13 = lift13(t);
    REQUIRE(l13.coeffs.size() == 1);
    CHECK(l13.coeffs.begin()->first ==
          std::array<GroupElement, 3>{GroupElement{{0}}, GroupElement{{0}}, GroupElement{{1}}});

    CHECK(counit_slot3(lift12(t)) == t);

    Tensor2 t12 = tensor_product(hopf_basis(z4, Side::Star, GroupElement{{1}}),
                                 hopf_basis(z4, Side::Star, GroupElement{{2}}));
    Tensor3 d1 = coproduct_slot1(t12);
    REQUIRE(d1.coeffs.size() == 1);
    CHECK(d1.coeffs.begin()->first ==
          std::array<GroupElement, 3>{GroupElement{{1}}, GroupElement{{1}}, GroupElement{{2}}});

    // lift13 = (T x id) applied to lift23, term by term
    for (unsigned seed : {9u, 10u}) {
        Tensor2 x = tensor_product(sample_element(z4, Side::Star, seed),
                                   sample_element(z4, Side::Star, seed + 40));
        Tensor3 a = lift13(x);
        Tensor3 b{z4, Side::Star, {}};
        for (const auto &[key, c] : lift23(x).coeffs)
            b.add_term({key[1], key[0], key[2]}, c);
        CHECK(a == b);
    }
}

TEST_CASE("hopf pairing") {
    GroupSpec z4 = parse_group_spec("Z4");
    CHECK(hopf_pairing(hopf_basis(z4, Side::Star, GroupElement{{1}}),
                       hopf_basis(z4, Side::Group, GroupElement{{1}})) ==
          Cyc::root_of_unity(4, 1));
    for (const GroupElement &g : z4.elements())
        CHECK(hopf_pairing(hopf_unit(z4, Side::Star), hopf_basis(z4, Side::Group, g)) ==
              counit(hopf_basis(z4, Side::Group, g)));

    CHECK(verify_hopf_pairing_axioms(parse_group_spec("Z4xZ2")).all_pass());
    CHECK(verify_hopf_pairing_axioms(parse_group_spec("Z6")).all_pass());
    CHECK(verify_hopf_pairing_axioms(parse_group_spec("1")).all_pass());

    CHECK_THROWS_AS(hopf_pairing(hopf_unit(z4, Side::Group), hopf_unit(z4, Side::Group)),
                    SpecMismatch);
}

TEST_CASE("hopf pairing is non-degenerate") {
    // the pairing matrix M satisfies M conj(M)^t = n I, hence is invertible
    for (const char *name : {"Z8", "Z4xZ2", "Z2xZ2xZ2", "Z6", "Z5", "1"}) {
        GroupSpec g = parse_group_spec(name);
        std::vector<GroupElement> all = g.elements();
        int e = g.exponent();
        for (const Character &chi : all) {
            for (const Character &psi : all) {
                Cyc sum = Cyc::zero(e);
                for (const GroupElement &x : all)
                    sum += pairing(g, chi, x) * pairing(g, psi, x).conjugate();
                CHECK(sum == (chi == psi ? Cyc::rational(e, Rational(g.order()))
                                         : Cyc::zero(e)));
            }
        }
    }
}

TEST_CASE("function dictionary is an algebra isomorphism") {
    for (const char *name : {"Z4", "Z2xZ2", "Z6", "Z8", "Z2xZ3"}) {
        GroupSpec g = parse_group_spec(name);
        int e = g.exponent();

        // basis tensors round-trip
        for (const GroupElement &a : g.elements()) {
            for (const GroupElement &b : g.elements()) {
                Tensor2 t = tensor_product(hopf_basis(g, Side::Star, a),
                                           hopf_basis(g, Side::Star, b));
                CHECK(tensor2_from_function(function_from_tensor2(t)) == t);
            }
        }
        // random tensors round-trip and products map to pointwise products
        for (unsigned seed = 1; seed <= 4; ++seed) {
            Tensor2 x = tensor_product(sample_element(g, Side::Star, seed),
                                       sample_element(g, Side::Star, seed + 100));
            Tensor2 y = tensor_product(sample_element(g, Side::Star, seed + 200),
                                       sample_element(g, Side::Star, seed + 300));
            x = x + twist(y);
            CHECK(tensor2_from_function(function_from_tensor2(x)) == x);

            FunctionTable fx = function_from_tensor2(x);
            FunctionTable fy = function_from_tensor2(y);
            FunctionTable fxy = function_from_tensor2(x * y);
            for (const GroupElement &a : g.elements())
                for (const GroupElement &b : g.elements())
                    CHECK(fxy.at(a, b) == fx.at(a, b) * fy.at(a, b));
        }
        // tables round-trip through the inverse direction
        FunctionTable table = FunctionTable::constant(g, Cyc::one(e));
        unsigned long long state = 99;
        for (Cyc &v : table.values) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            v = Cyc::root_of_unity(e, static_cast<long long>((state >> 33) % e)) *
                Cyc::rational(e, Rational(1 + static_cast<int>((state >> 11) % 5)));
        }
        CHECK(function_from_tensor2(tensor2_from_function(table)) == table);
    }
}

TEST_CASE("tensor inversion") {
    GroupSpec z2 = parse_group_spec("Z2");
    Tensor2 unit = tensor2_unit(z2, Side::Star);
    Tensor2Inverse invu = invert_tensor2(unit);
    REQUIRE(invu.ok());
    CHECK(*invu.inverse == unit);

    // R for the super sign factor is its own inverse
    Cyc half = Cyc::rational(2, Rational(1, 2));
    Tensor2 super_r{z2, Side::Star, {}};
    super_r.add_term({GroupElement{{0}}, GroupElement{{0}}}, half);
    super_r.add_term({GroupElement{{0}}, GroupElement{{1}}}, half);
    super_r.add_term({GroupElement{{1}}, GroupElement{{0}}}, half);
    super_r.add_term({GroupElement{{1}}, GroupElement{{1}}}, -half);
    Tensor2Inverse invs = invert_tensor2(super_r);
    REQUIRE(invs.ok());
    CHECK(*invs.inverse == super_r);
    CHECK(super_r * *invs.inverse == tensor2_unit(z2, Side::Star));

    // zero tensor is rejected with a witness
    Tensor2Inverse invz = invert_tensor2(tensor2_zero(z2, Side::Star));
    CHECK_FALSE(invz.ok());
    CHECK(invz.zero_witness == "associated function vanishes at (0), (0)");

    // chi^0 (x) chi^0 + chi^0 (x) chi^1 has a vanishing function value
    Tensor2 degenerate{z2, Side::Star, {}};
    degenerate.add_term({GroupElement{{0}}, GroupElement{{0}}}, Cyc::one(2));
    degenerate.add_term({GroupElement{{0}}, GroupElement{{1}}}, Cyc::one(2));
    CHECK_FALSE(invert_tensor2(degenerate).ok());
}

TEST_CASE("summation collapses to zero coefficients") {
    GroupSpec z4 = parse_group_spec("Z4");
    HopfElement x = hopf_basis(z4, Side::Star, GroupElement{{2}});
    HopfElement y = x - x;
    CHECK(y.is_zero());
    CHECK(y.coeffs.empty()); // zero coefficients are pruned, not stored
    Tensor2 t = tensor_product(x, x) - tensor_product(x, x);
    CHECK(t.coeffs.empty());
}
