#include <doctest.h>

#include <random>
#include <set>

#include "torsearch/factor.hpp"
#include "torsearch/poly.hpp"

using namespace torsearch;

namespace {

Poly random_poly(const FieldSpecPtr& spec, std::uint32_t max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> code(0, spec->q() - 1);
    std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
    std::vector<std::uint64_t> cs(deg(rng) + 1);
    for (auto& c : cs) c = code(rng);
    return Poly::from_codes(spec, std::move(cs));
}

} // namespace

TEST_CASE("ring arithmetic examples") {
    auto F5 = FieldSpec::make(5);
    auto F3 = FieldSpec::make(3);
    Poly x5 = Poly::x(F5);
    Poly lhs = (x5 + Poly::one(F5)).pow(2) - x5.pow(3);
    CHECK(lhs == Poly::from_ints(F5, {1, 2, 1, 4})); // 4x^3 + x^2 + 2x + 1
    Poly a = Poly::from_ints(F5, {3, 1, 4});
    CHECK(a + Poly::zero(F5) == a);
    Poly x3 = Poly::x(F3);
    CHECK((x3 + Poly::one(F3)) * (x3 + Poly::constant(F3, 2)) == Poly::from_ints(F3, {2, 0, 1}));
}

TEST_CASE("divmod examples") {
    auto F5 = FieldSpec::make(5);
    Poly a = Poly::from_ints(F5, {1, 2, 1, 4});
    Poly b = Poly::from_ints(F5, {1, 1, 1});
    auto [q, r] = a.divmod(b);
    CHECK(r == Poly::from_ints(F5, {4, 1})); // x + 4
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    // cross-check: x^3 = 1 (mod x^2+x+1), since x^3 - 1 = (x-1)(x^2+x+1)
    CHECK(Poly::x(F5).pow(3) % b == Poly::one(F5));

    auto [q2, r2] = a.divmod(a);
    CHECK(q2.is_one());
    CHECK(r2.is_zero());
    auto [q3, r3] = b.divmod(a); // deg b < deg a
    CHECK(q3.is_zero());
    CHECK(r3 == b);
    CHECK_THROWS_AS(a.divmod(Poly::zero(F5)), std::domain_error);
}

TEST_CASE("divmod identity on random inputs") {
    std::mt19937_64 rng(42);
    for (std::uint64_t q : {3ull, 5ull, 9ull}) {
        auto F = field_for_cardinality(q);
        for (int i = 0; i < 300; ++i) {
            Poly a = random_poly(F, 8, rng);
            Poly b = random_poly(F, 5, rng);
            if (b.is_zero()) continue;
            auto [quo, rem] = a.divmod(b);
            CHECK(quo * b + rem == a);
            CHECK(rem.degree() < b.degree());
        }
    }
}

TEST_CASE("gcd examples") {
    auto F5 = FieldSpec::make(5);
    auto F3 = FieldSpec::make(3);
    CHECK(gcd_monic(Poly::x(F5), Poly::from_ints(F5, {1, 1})).is_one());
    Poly g = gcd_monic(Poly::from_ints(F3, {0, -1, 1}), Poly::from_ints(F3, {-1, 0, 1}));
    CHECK(g == Poly::from_ints(F3, {2, 1})); // common root x = 1
    Poly a = Poly::from_ints(F5, {2, 0, 3});
    CHECK(gcd_monic(a, Poly::zero(F5)) == a.monic());
    CHECK_THROWS_AS(gcd_monic(Poly::zero(F5), Poly::zero(F5)), std::domain_error);
}

TEST_CASE("norm and sgn") {
    auto F3 = FieldSpec::make(3);
    auto F5 = FieldSpec::make(5);
    NormSgn ns = norm_sgn(Poly::from_ints(F3, {1, 0, 2}));
    CHECK(ns.norm == 9);
    CHECK(ns.sgn.code() == 2);
    ns = norm_sgn(Poly::from_ints(F5, {1, 2, 1, 4}));
    CHECK(ns.norm == 125);
    CHECK(ns.sgn.code() == 4);
    ns = norm_sgn(Poly::constant(F5, 3));
    CHECK(ns.norm == 1);
    CHECK(ns.sgn.code() == 3);
    CHECK_THROWS_AS(norm_sgn(Poly::zero(F5)), std::domain_error);
}

TEST_CASE("square-freeness") {
    auto F5 = FieldSpec::make(5);
    auto F3 = FieldSpec::make(3);
    Poly f = Poly::from_ints(F5, {1, 2, 1, 4});
    CHECK(f.derivative() == Poly::from_ints(F5, {2, 2, 2}));
    CHECK(gcd_monic(f, f.derivative()).is_one());
    CHECK(is_squarefree(f));
    CHECK_FALSE(is_squarefree(Poly::from_ints(F3, {0, 0, 1}))); // x^2
    CHECK(is_squarefree(Poly::from_ints(F3, {0, -1, 0, 1})));   // x^3 - x, roots 0,1,2
    // derivative-zero case: x^3 + 1 = (x+1)^3 over F_3 is a p-th power
    Poly cube = Poly::from_ints(F3, {1, 0, 0, 1});
    CHECK(cube.derivative().is_zero());
    CHECK_FALSE(is_squarefree(cube));
    CHECK_THROWS_AS(is_squarefree(Poly::zero(F3)), std::domain_error);
}

TEST_CASE("factor examples") {
    auto F3 = FieldSpec::make(3);
    Factorization fac = factor(Poly::from_ints(F3, {0, -1, 0, 1})); // x^3 - x
    REQUIRE(fac.factors.size() == 3);
    CHECK(fac.unit.is_one());
    CHECK(fac.factors[0].prime == Poly::from_ints(F3, {0, 1}));
    CHECK(fac.factors[1].prime == Poly::from_ints(F3, {1, 1}));
    CHECK(fac.factors[2].prime == Poly::from_ints(F3, {2, 1}));
    CHECK(fac.all_exponents_one());

    fac = factor(Poly::from_ints(F3, {0, 0, 2})); // 2x^2
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.unit.code() == 2);
    CHECK(fac.factors[0].prime == Poly::x(F3));
    CHECK(fac.factors[0].exp == 2);

    fac = factor(Poly::from_ints(F3, {1, 0, 1})); // x^2 + 1, no roots in F_3
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].exp == 1);
    CHECK(is_irreducible(fac.factors[0].prime));

    fac = factor(Poly::from_ints(F3, {1, 0, 0, 1})); // (x+1)^3, derivative-zero path
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].prime == Poly::from_ints(F3, {1, 1}));
    CHECK(fac.factors[0].exp == 3);

    CHECK_THROWS_AS(factor(Poly::zero(F3)), std::domain_error);
}

TEST_CASE("factor round trip and determinism, randomized") {
    std::mt19937_64 rng(7);
    for (std::uint64_t q : {3ull, 5ull, 9ull}) {
        auto F = field_for_cardinality(q);
        for (int i = 0; i < 334; ++i) {
            Poly f = random_poly(F, 8, rng);
            if (f.is_zero()) continue;
            Factorization fac = factor(f, 123);
            CHECK(fac.expand() == f); // also checked internally; belt and braces
            Factorization again = factor(f, 123);
            REQUIRE(fac.factors.size() == again.factors.size());
            for (std::size_t k = 0; k < fac.factors.size(); ++k) {
                CHECK(fac.factors[k].prime == again.factors[k].prime);
                CHECK(fac.factors[k].exp == again.factors[k].exp);
            }
        }
    }
}

TEST_CASE("square-freeness agrees with factorization, exhaustive q=3 deg <= 4") {
    auto F3 = FieldSpec::make(3);
    for (std::uint32_t d = 1; d <= 4; ++d)
        for_each_monic(F3, d, [&](const Poly& f) {
            CHECK(is_squarefree(f) == factor(f).all_exponents_one());
        });
}

TEST_CASE("monic enumeration order and counts") {
    auto F3 = FieldSpec::make(3);
    std::vector<Poly> deg1;
    for_each_monic(F3, 1, [&](const Poly& p) { deg1.push_back(p); });
    REQUIRE(deg1.size() == 3);
    CHECK(deg1[0] == Poly::from_ints(F3, {0, 1}));
    CHECK(deg1[1] == Poly::from_ints(F3, {1, 1}));
    CHECK(deg1[2] == Poly::from_ints(F3, {2, 1}));

    std::vector<Poly> deg0;
    for_each_monic(F3, 0, [&](const Poly& p) { deg0.push_back(p); });
    REQUIRE(deg0.size() == 1);
    CHECK(deg0[0].is_one());

    std::vector<Poly> deg2;
    for_each_monic(F3, 2, [&](const Poly& p) { deg2.push_back(p); });
    REQUIRE(deg2.size() == 9);
    CHECK(deg2.front() == Poly::from_ints(F3, {0, 0, 1}));
    CHECK(deg2.back() == Poly::from_ints(F3, {2, 2, 1}));

    for (std::uint64_t q : {3ull, 5ull}) {
        auto F = field_for_cardinality(q);
        for (std::uint32_t d = 0; d <= 4; ++d) {
            std::set<std::vector<std::uint64_t>> seen;
            for_each_monic(F, d, [&](const Poly& p) {
                CHECK(p.is_monic());
                CHECK(p.degree() == static_cast<int>(d));
                seen.insert(p.codes());
            });
            CHECK(seen.size() == monic_count(F, d));
        }
    }

    // partition by index ranges matches the full enumeration
    std::vector<Poly> split;
    for_each_monic_in(F3, 2, 0, 4, [&](const Poly& p) { split.push_back(p); });
    for_each_monic_in(F3, 2, 4, 9, [&](const Poly& p) { split.push_back(p); });
    CHECK(split.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) CHECK(split[i] == deg2[i]);
    CHECK(monic_by_index(F3, 2, 4) == deg2[4]);
}

TEST_CASE("xgcd and modular inverses") {
    auto F5 = FieldSpec::make(5);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(F5, 5, rng), b = random_poly(F5, 5, rng);
        if (a.is_zero() && b.is_zero()) continue;
        XGcd g = xgcd(a, b);
        CHECK(g.s * a + g.t * b == g.g);
        CHECK(g.g.is_monic());
    }
    Poly m = Poly::from_ints(F5, {1, 1, 1});
    Poly inv = inverse_mod(Poly::x(F5), m);
    CHECK((inv * Poly::x(F5)) % m == Poly::one(F5));
    CHECK_THROWS_AS(inverse_mod(m, m), std::domain_error);
}

TEST_CASE("spec mismatch is rejected") {
    auto F3 = FieldSpec::make(3);
    auto F5 = FieldSpec::make(5);
    CHECK_THROWS_AS(Poly::x(F3) + Poly::x(F5), std::invalid_argument);
}

TEST_CASE("human-readable formatting") {
    auto F5 = FieldSpec::make(5);
    CHECK(Poly::from_ints(F5, {1, 2, 1, 4}).to_string() == "4*x^3+x^2+2*x+1");
    CHECK(Poly::zero(F5).to_string() == "0");
    CHECK(Poly::x(F5).to_string() == "x");
}
