#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "coincidence.hpp"

using namespace hexcsl;

namespace {

EisensteinInt ei(long m, long n) { return {m, n}; }

std::mt19937_64 rng(0x5eed0002);

// Random valid canonical numerator with norm <= bound (rejection sampling).
EisensteinInt random_numerator(long bound) {
    std::uniform_int_distribution<long> d(0, static_cast<long>(std::sqrt(4.0 * bound / 3.0)) + 1);
    for (;;) {
        long n = d(rng), m = d(rng);
        if (m <= n) continue;
        EisensteinInt z(m, n);
        if (z.norm() > bound) continue;
        Integer g;
        mpz_gcd(g.get_mpz_t(), z.m().get_mpz_t(), z.n().get_mpz_t());
        if (g != 1) continue;
        if ((z.m() + z.n()) % 3 == 0) continue;
        return z;
    }
}

CoincidenceIsometry random_isometry(long bound, bool allow_reflect = true) {
    std::uniform_int_distribution<int> dk(0, 5);
    std::uniform_int_distribution<int> db(0, 1);
    return CoincidenceIsometry::from_parts(random_numerator(bound), Unit(dk(rng)),
                                           allow_reflect && db(rng) == 1);
}

EisensteinRational random_point(long coord, long max_den) {
    std::uniform_int_distribution<long> dc(-coord, coord);
    std::uniform_int_distribution<long> dd(1, max_den);
    return {EisensteinInt(dc(rng), dc(rng)), Integer(dd(rng))};
}

}  // namespace

TEST_CASE("is_numerator") {
    CHECK(is_numerator(ei(1, 0)));
    CHECK(!is_numerator(ei(1, -1)));  // norm 3
    CHECK(is_numerator(ei(3, 1)));    // m+n = 4
    CHECK(!is_numerator(ei(2, 1)));   // norm 3
    CHECK_THROWS_AS(is_numerator(ei(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(is_numerator(ei(0, 0)), std::invalid_argument);

    // both characterizations agree on random primitive elements
    for (int i = 0; i < 2000; ++i) {
        std::uniform_int_distribution<long> d(-200, 200);
        EisensteinInt z(d(rng), d(rng));
        if (z.is_zero()) continue;
        Integer g;
        mpz_gcd(g.get_mpz_t(), z.m().get_mpz_t(), z.n().get_mpz_t());
        if (g != 1) continue;
        CHECK(is_numerator(z) == (z.norm() % 3 != 0));
    }
}

TEST_CASE("construction canonicalizes without changing the action") {
    // ξ·(3+ξ) = -1+2ξ, same rotation as numerator 3+ξ with adjusted unit
    CoincidenceIsometry r = CoincidenceIsometry::rotation(ei(-1, 2), Unit(0));
    CHECK(r.z() == ei(3, 1));
    CoincidenceIsometry plain = CoincidenceIsometry::rotation(ei(3, 1), Unit(0));
    CHECK(isometry_value(r) ==
          isometry_value(plain) * isometry_value(CoincidenceIsometry::rotation(ei(1, 0), r.eps())));
    for (int i = 0; i < 500; ++i) {
        EisensteinInt z = random_numerator(500);
        Unit u(std::uniform_int_distribution<int>(0, 5)(rng));
        CoincidenceIsometry a = CoincidenceIsometry::rotation(z, Unit(0));
        CoincidenceIsometry b = CoincidenceIsometry::rotation(u.times(z), Unit(0));
        // associate numerators give the same rotation up to the folded unit:
        // both values must still have modulus 1 and equal z-part
        CHECK(b.z() == a.z());
        CHECK(isometry_value(b).squared_length() == 1);
    }
    CHECK_THROWS_AS(CoincidenceIsometry::rotation(ei(1, -1), Unit(0)), std::invalid_argument);
    CHECK_THROWS_AS(CoincidenceIsometry::rotation(ei(4, 2), Unit(0)), std::invalid_argument);
}

TEST_CASE("isometry_value") {
    CHECK(isometry_value(CoincidenceIsometry::identity()) == EisensteinRational(ei(1, 0)));
    CHECK(angle_degrees(CoincidenceIsometry::identity()) == doctest::Approx(0.0));

    // the index-7 rotation: value (3+ξ)/(2-ξ) = (8+5ξ)/7 exactly
    CoincidenceIsometry r7 = CoincidenceIsometry::rotation(ei(3, 1), Unit(0));
    CHECK(isometry_value(r7) == EisensteinRational(ei(8, 5), Integer(7)));
    CHECK(isometry_value(r7).squared_length() == 1);
    CHECK(angle_degrees(r7) == doctest::Approx(38.213210).epsilon(1e-6));
    CHECK(reduced_angle_degrees(r7) == doctest::Approx(-21.786789).epsilon(1e-6));

    // the point symmetry of order 6
    CoincidenceIsometry s = CoincidenceIsometry::rotation(ei(1, 0), Unit(1));
    CHECK(isometry_value(s) == EisensteinRational(ei(1, 1)));
    CHECK(angle_degrees(s) == doctest::Approx(60.0));

    for (int i = 0; i < 500; ++i) {
        CoincidenceIsometry r = random_isometry(300);
        CHECK(isometry_value(r).squared_length() == 1);
    }
}

TEST_CASE("apply") {
    CoincidenceIsometry id = CoincidenceIsometry::identity();
    CoincidenceIsometry r7 = CoincidenceIsometry::rotation(ei(3, 1), Unit(0));
    CoincidenceIsometry tr = CoincidenceIsometry::real_axis_reflection();

    for (int i = 0; i < 50; ++i) {
        EisensteinRational y = random_point(20, 8);
        CHECK(apply(id, y) == y);
        CHECK(apply(r7, y).squared_length() == y.squared_length());
        CHECK(apply(tr, y) == y.conj());
    }
    CHECK(apply(r7, EisensteinRational(ei(2, -1))) == EisensteinRational(ei(3, 1)));
    CHECK(apply(tr, EisensteinRational(ei(0, 1))) == EisensteinRational(ei(-1, -1)));

    SUBCASE("CSL points are coincident sites: z·γ is in the rotated lattice too") {
        for (int i = 0; i < 200; ++i) {
            CoincidenceIsometry r = random_isometry(200, false);
            std::uniform_int_distribution<long> d(-10, 10);
            EisensteinRational p(r.z() * ei(d(rng), d(rng)));
            CHECK(p.is_integral());                     // z·γ ∈ Γ
            CHECK(apply(inverse(r), p).is_integral());  // z·γ ∈ RΓ
            CoincidenceIsometry t = CoincidenceIsometry::reflection(r.z(), r.eps());
            CHECK(apply(t, p).is_integral());           // reflections are involutions
        }
    }
}

TEST_CASE("csl_of and coincidence index") {
    CHECK(csl_of(CoincidenceIsometry::identity()).z == ei(1, 0));
    CHECK(coincidence_index(CoincidenceIsometry::identity()) == 1);
    CoincidenceIsometry r7 = CoincidenceIsometry::rotation(ei(3, 1), Unit(2));
    CHECK(csl_of(r7).index() == 7);
    // reflection flag changes neither the CSL nor the index
    CoincidenceIsometry t7 = CoincidenceIsometry::reflection(ei(3, 1), Unit(2));
    CHECK(csl_of(t7).z == csl_of(r7).z);
    CHECK(coincidence_index(t7) == 7);

    EisensteinInt z91 = numerator_from_exponents({{Integer(7), 1}, {Integer(13), 1}});
    CHECK(z91.norm() == 91);
    CHECK(csl_of(CoincidenceIsometry::rotation(z91, Unit(0))).index() == 91);
}

TEST_CASE("exponent normal form") {
    CHECK(numerator_from_exponents({}) == ei(1, 0));
    CHECK(numerator_from_exponents({{Integer(7), 1}}) == ei(3, 1));
    CHECK(numerator_from_exponents({{Integer(7), -1}}) == ei(3, 2));  // canonical conj(3+ξ)
    CHECK_THROWS_AS(numerator_from_exponents({{Integer(5), 1}}), std::invalid_argument);
    CHECK_THROWS_AS(numerator_from_exponents({{Integer(9), 1}}), std::invalid_argument);

    CHECK(exponents_from_numerator(ei(1, 0)).t.empty());
    auto v7 = exponents_from_numerator(ei(3, 1));
    CHECK(v7.t == std::map<Integer, int>{{Integer(7), 1}});
    CHECK_THROWS_AS(exponents_from_numerator(ei(1, -1)), std::invalid_argument);

    SUBCASE("round trip on random numerators") {
        for (int i = 0; i < 300; ++i) {
            EisensteinInt z = random_numerator(2000);
            auto v = exponents_from_numerator(z);
            CHECK(numerator_from_exponents(v.t) == z);
            // value-preserving reconstruction
            CoincidenceIsometry r = rotation_from_exponents(v);
            CHECK(isometry_value(r) == isometry_value(CoincidenceIsometry::rotation(z, Unit(0))));
        }
    }
}

TEST_CASE("compose and inverse") {
    CoincidenceIsometry id = CoincidenceIsometry::identity();

    SUBCASE("group identities") {
        for (int i = 0; i < 200; ++i) {
            CoincidenceIsometry r = random_isometry(300);
            CHECK(compose(r, inverse(r)) == id);
            CHECK(compose(inverse(r), r) == id);
        }
    }
    SUBCASE("conjugate exponents cancel") {
        CoincidenceIsometry a = rotation_from_exponents({Unit(0), {{Integer(7), 1}}});
        CoincidenceIsometry b = rotation_from_exponents({Unit(0), {{Integer(7), -1}}});
        CHECK(compose(a, b) == id);
        CoincidenceIsometry c = rotation_from_exponents({Unit(0), {{Integer(13), 1}}});
        CHECK(coincidence_index(compose(a, c)) == 91);
    }
    SUBCASE("composition is the composite map (defining property)") {
        for (int i = 0; i < 300; ++i) {
            CoincidenceIsometry r1 = random_isometry(120);
            CoincidenceIsometry r2 = random_isometry(120);
            CoincidenceIsometry c = compose(r1, r2);
            EisensteinRational y = random_point(12, 6);
            CHECK(apply(c, y) == apply(r1, apply(r2, y)));
            CHECK(c.reflect() == (r1.reflect() != r2.reflect()));
        }
    }
    SUBCASE("rotation values multiply exactly") {
        for (int i = 0; i < 300; ++i) {
            CoincidenceIsometry r1 = random_isometry(200, false);
            CoincidenceIsometry r2 = random_isometry(200, false);
            CHECK(isometry_value(compose(r1, r2)) == isometry_value(r1) * isometry_value(r2));
        }
    }
    SUBCASE("index of a composite divides the product of indices") {
        for (int i = 0; i < 200; ++i) {
            CoincidenceIsometry r1 = random_isometry(200, false);
            CoincidenceIsometry r2 = random_isometry(200, false);
            Integer prod = coincidence_index(r1) * coincidence_index(r2);
            CHECK(prod % coincidence_index(compose(r1, r2)) == 0);
        }
    }
}

TEST_CASE("enumerate_csls") {
    auto small = enumerate_csls(Integer(6));
    REQUIRE(small.size() == 1);
    CHECK(small[0].csl.z == ei(1, 0));

    auto seven = enumerate_csls(Integer(7));
    REQUIRE(seven.size() == 3);
    CHECK(seven[0].csl.z == ei(1, 0));
    CHECK(seven[1].csl.z == ei(3, 1));
    CHECK(seven[2].csl.z == ei(3, 2));
    CHECK(seven[1].index == 7);

    auto thirteen = enumerate_csls(Integer(13));
    REQUIRE(thirteen.size() == 5);
    CHECK(thirteen[3].index == 13);
    CHECK(thirteen[4].index == 13);

    SUBCASE("entries are valid, canonical, unique; counts match f") {
        auto all = enumerate_csls(Integer(200));
        std::set<std::pair<Integer, Integer>> seen;
        std::map<Integer, long> per_index;
        for (const auto& e : all) {
            CHECK(is_canonical_associate(e.csl.z));
            CHECK(is_numerator(e.csl.z));
            CHECK(e.index == e.csl.z.norm());
            CHECK(seen.insert({e.csl.z.m(), e.csl.z.n()}).second);
            per_index[e.index] += 1;
        }
        for (long m = 1; m <= 200; ++m) {
            Integer f = count_csls(Integer(m));
            long got = per_index.count(Integer(m)) ? per_index[Integer(m)] : 0;
            CHECK(Integer(got) == f);
        }
    }
}

TEST_CASE("count_csls and the Dirichlet coefficients") {
    CHECK(count_csls(Integer(1)) == 1);
    for (long p : {7L, 13L, 19L, 31L, 37L, 43L}) CHECK(count_csls(Integer(p)) == 2);
    CHECK(count_csls(Integer(3)) == 0);
    CHECK(count_csls(Integer(2)) == 0);
    CHECK(count_csls(Integer(49)) == 2);
    CHECK(count_csls(Integer(91)) == 4);
    CHECK(count_rotations(Integer(91)) == 24);

    auto c6 = dirichlet_coefficients(6);
    CHECK(c6 == std::vector<Integer>{1, 0, 0, 0, 0, 0});
    auto c7 = dirichlet_coefficients(7);
    CHECK(c7.back() == 2);
    auto c49 = dirichlet_coefficients(49);
    CHECK(c49[48] == 2);
    for (long m = 1; m <= 49; ++m) CHECK(c49[m - 1] == count_csls(Integer(m)));
}
