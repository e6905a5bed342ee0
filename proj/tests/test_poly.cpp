#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyhull/poly.hpp"
#include "cyhull/tower.hpp"

using namespace cyhull;

namespace {

Polynomial random_poly(const std::shared_ptr<const Field>& f, int max_deg,
                       std::mt19937_64& rng) {
    std::vector<uint64_t> codes(1 + rng() % (max_deg + 1));
    for (auto& c : codes) c = rng() % f->size();
    return {f, std::move(codes)};
}

}  // namespace

TEST_CASE("multiplication and division basics over F_2") {
    const auto f2 = Field::prime_field(2);
    const Polynomial a(f2, {1, 1, 1});  // x^2 + x + 1
    const Polynomial b(f2, {1, 1});     // x + 1
    CHECK(a * b == Polynomial(f2, {1, 0, 0, 1}));  // x^3 + 1

    const Polynomial x3m1(f2, {1, 0, 0, 1});
    const auto [quot, rem] = divmod(x3m1, b);
    CHECK(quot == a);
    CHECK(rem.is_zero());

    CHECK((a * Polynomial(f2)).is_zero());
    CHECK_THROWS_AS(divmod(a, Polynomial(f2)), DivisionByZero);
}

TEST_CASE("divmod round-trips on random inputs") {
    std::mt19937_64 rng(11);
    for (uint32_t p : {2u, 3u}) {
        const auto f = Field::prime_field(p);
        for (int i = 0; i < 300; ++i) {
            const Polynomial a = random_poly(f, 40, rng);
            Polynomial b = random_poly(f, 40, rng);
            if (b.is_zero()) b = Polynomial(f, {1});
            const auto [quot, rem] = divmod(a, b);
            CHECK(quot * b + rem == a);
            CHECK(rem.degree() < b.degree());
        }
    }
    // and over extension fields up to F_16
    const FieldTower t4(2, 2, 15);
    const FieldTower t16(2, 4, 15);
    for (const auto& f : {t4.base_field(), t16.base_field()}) {
        for (int i = 0; i < 100; ++i) {
            const Polynomial a = random_poly(f, 40, rng);
            Polynomial b = random_poly(f, 40, rng);
            if (b.is_zero()) b = Polynomial(f, {2});
            const auto [quot, rem] = divmod(a, b);
            CHECK(quot * b + rem == a);
        }
    }
}

TEST_CASE("gcd and lcm") {
    const auto f2 = Field::prime_field(2);
    const Polynomial x3m1(f2, {1, 0, 0, 1});
    const Polynomial xm1(f2, {1, 1});
    CHECK(gcd(x3m1, xm1) == xm1);

    // gcd of the two weight-4 factors of x^7 - 1 sharing only x + 1
    const Polynomial m0(f2, {1, 1});
    const Polynomial m1(f2, {1, 1, 0, 1});
    const Polynomial m3(f2, {1, 0, 1, 1});
    CHECK(gcd(m0 * m1, m0 * m3) == m0);

    const Polynomial f(f2, {1, 1, 0, 1});
    CHECK(lcm(f, f) == f.make_monic());

    CHECK_THROWS_AS(gcd(Polynomial(f2), Polynomial(f2)), BothZero);
    CHECK_THROWS_AS(lcm(Polynomial(f2), f), BothZero);
}

TEST_CASE("gcd agrees with a brute-force divisor scan") {
    // all monic polynomials of degree <= cap that divide both inputs
    auto common_divisors = [](const Polynomial& a, const Polynomial& b) {
        const auto f = a.field_ptr();
        std::vector<Polynomial> out;
        const int cap = std::min(a.degree(), b.degree());
        for (int d = 0; d <= cap; ++d) {
            uint64_t total = 1;
            for (int i = 0; i < d; ++i) total *= f->size();
            for (uint64_t mask = 0; mask < total; ++mask) {
                std::vector<uint64_t> codes(d + 1, 0);
                uint64_t v = mask;
                for (int i = 0; i < d; ++i) {
                    codes[i] = v % f->size();
                    v /= f->size();
                }
                codes[d] = 1;
                const Polynomial cand(f, std::move(codes));
                if ((a % cand).is_zero() && (b % cand).is_zero()) out.push_back(cand);
            }
        }
        return out;
    };

    std::mt19937_64 rng(13);
    for (uint32_t p : {2u, 3u}) {
        const auto f = Field::prime_field(p);
        for (int i = 0; i < 15; ++i) {
            Polynomial a = random_poly(f, 8, rng);
            Polynomial b = random_poly(f, 8, rng);
            if (a.is_zero() || b.is_zero()) continue;
            const Polynomial g = gcd(a, b);
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
            for (const Polynomial& d : common_divisors(a, b)) CHECK((g % d).is_zero());
        }
    }
}

TEST_CASE("lcm degree identity") {
    std::mt19937_64 rng(17);
    const auto f3 = Field::prime_field(3);
    for (int i = 0; i < 100; ++i) {
        Polynomial a = random_poly(f3, 12, rng);
        Polynomial b = random_poly(f3, 12, rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(lcm(a, b).degree() == a.degree() + b.degree() - gcd(a, b).degree());
    }
}

TEST_CASE("reciprocal examples") {
    const auto f2 = Field::prime_field(2);
    const Polynomial s(f2, {1, 1, 1});
    CHECK(reciprocal(s) == s);
    CHECK(is_self_reciprocal(s));
    CHECK(is_self_reciprocal(Polynomial(f2, {1, 0, 0, 1, 0, 0, 1})));  // x^6 + x^3 + 1

    const auto f3 = Field::prime_field(3);
    CHECK(is_self_reciprocal(Polynomial(f3, {1, 2, 1, 2, 1})));  // x^4 + 2x^3 + x^2 + 2x + 1

    // x - w over F_4 maps to x - w^2
    const FieldTower t(2, 2, 3);
    const auto& f4 = t.big_field();
    const FieldElement w = f4->element(2);
    const Polynomial lin = Polynomial::from_elements({-w, f4->one()});
    const Polynomial expect = Polynomial::from_elements({-(w * w), f4->one()});
    CHECK(reciprocal(lin) == expect);
    CHECK_FALSE(is_self_reciprocal(lin));

    CHECK_THROWS_AS(reciprocal(Polynomial(f2, {0, 1})), ZeroConstantTerm);
    CHECK_THROWS_AS(is_self_reciprocal(Polynomial(f2, {0, 1})), ZeroConstantTerm);
}

TEST_CASE("reciprocal is an involution on monic inputs and is multiplicative") {
    std::mt19937_64 rng(19);
    const FieldTower t(2, 2, 15);
    for (const auto& f : {Field::prime_field(3), t.base_field()}) {
        for (int i = 0; i < 200; ++i) {
            Polynomial a = random_poly(f, 15, rng);
            Polynomial b = random_poly(f, 15, rng);
            if (a.is_zero() || a.coeff_code(0) == 0) continue;
            if (b.is_zero() || b.coeff_code(0) == 0) continue;
            CHECK(reciprocal(a * b) == reciprocal(a) * reciprocal(b));
            const Polynomial am = a.make_monic();
            CHECK(reciprocal(reciprocal(am)) == am);
        }
    }
}

TEST_CASE("evaluation") {
    const auto f2 = Field::prime_field(2);
    const Polynomial f(f2, {1, 1});
    CHECK(eval(f, f2->one()).is_zero());
    CHECK(eval(f, f2->zero()) == f2->one());  // constant term

    const FieldTower t(2, 1, 7);
    CHECK_THROWS_AS(eval(f, t.big_field()->one()), FieldMismatch);
}

TEST_CASE("text round trips") {
    const auto f3 = Field::prime_field(3);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const Polynomial a = random_poly(f3, 10, rng);
        CHECK(poly_from_codes_string(f3, to_codes_string(a)) == a);
    }
    CHECK(to_codes_string(Polynomial(f3)) == "0");
    CHECK(poly_from_codes_string(f3, "1,1,0,1").degree() == 3);
    CHECK_THROWS_AS(poly_from_codes_string(f3, "1,4"), Error);
    CHECK_THROWS_AS(poly_from_codes_string(f3, "1,,1"), Error);
    CHECK_THROWS_AS(poly_from_codes_string(f3, "x"), Error);
}
