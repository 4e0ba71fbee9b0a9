#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncx/ncomplex.hpp"

using namespace ncx;

TEST_CASE("zero complex") {
    PrimeField f(5);
    NComplex zero(3, f);
    CHECK(zero.is_zero());
    CHECK(validate(zero).ok);
    CHECK(dimension_vector(zero).empty());
    CHECK_THROWS_AS(NComplex(1, f), Error);
}

TEST_CASE("indecomposable construction") {
    PrimeField f5(5);

    NComplex simple = indecomposable(f5, 3, 0, 0);
    CHECK(dimension_vector(simple) == std::map<int, int>{{0, 1}});
    CHECK(simple.maps().empty());

    NComplex seg = indecomposable(f5, 3, 2, 2);
    CHECK(dimension_vector(seg) == std::map<int, int>{{2, 1}, {3, 1}, {4, 1}});
    REQUIRE(seg.maps().size() == 2);
    CHECK(seg.maps()[0] == Matrix::identity(f5, 1));
    CHECK(seg.maps()[1] == Matrix::identity(f5, 1));

    NComplex neg = indecomposable(PrimeField(7), 4, -1, 3);
    CHECK(neg.lo() == -1);
    CHECK(neg.hi() == 2);

    CHECK_THROWS_AS(indecomposable(f5, 3, 0, 3), Error);
    CHECK_THROWS_AS(indecomposable(f5, 3, 0, -1), Error);

    for (int n = 2; n <= 6; ++n)
        for (int l = 0; l < n; ++l) CHECK(validate(indecomposable(f5, n, -1, l)).ok);
}

TEST_CASE("validate reports the first violation") {
    PrimeField f(5);
    // d^2 = identity on a three-term segment
    std::vector<Matrix> maps{Matrix::identity(f, 1), Matrix::identity(f, 1)};
    NComplex bad(2, f, 0, {1, 1, 1}, maps);
    Validation v = validate(bad);
    CHECK(!v.ok);
    REQUIRE(v.degree.has_value());
    CHECK(*v.degree == 0);

    // shape mismatch reported before the nilpotency failure
    NComplex misshapen = NComplex::unchecked(2, f, 0, {1, 1, 1},
                                             {Matrix::identity(f, 1), Matrix(f, 2, 2)});
    Validation s = validate(misshapen);
    CHECK(!s.ok);
    CHECK(s.message.find("shape") != std::string::npos);
    REQUIRE(s.degree.has_value());
    CHECK(*s.degree == 1);
}

TEST_CASE("boundary zeros are trimmed, interior zeros kept") {
    PrimeField f(5);
    NComplex padded(3, f, -1, {0, 1, 0, 2, 0}, {Matrix(f, 1, 0), Matrix(f, 0, 1), Matrix(f, 2, 0), Matrix(f, 0, 2)});
    CHECK(padded.lo() == 0);
    CHECK(padded.hi() == 2);
    CHECK(padded.dims() == std::vector<int>{1, 0, 2});
    CHECK(validate(padded).ok);
    CHECK(composite(padded, 0, 3).is_zero());
}

TEST_CASE("direct sum") {
    PrimeField f(5);
    NComplex a = indecomposable(f, 3, 0, 1);
    CHECK(direct_sum(a, NComplex(3, f)) == a);
    CHECK(direct_sum(NComplex(3, f), a) == a);

    NComplex two_simples = direct_sum(indecomposable(f, 3, 0, 0), indecomposable(f, 3, 0, 0));
    CHECK(dimension_vector(two_simples) == std::map<int, int>{{0, 2}});
    CHECK(two_simples.maps().empty());

    CHECK_THROWS_AS(direct_sum(a, indecomposable(f, 4, 0, 1)), Error);
    CHECK_THROWS_AS(direct_sum(a, indecomposable(PrimeField(7), 3, 0, 1)), Error);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RandomComplex x = random_ncomplex(f, 3, -2, 2, 5, seed);
        RandomComplex y = random_ncomplex(f, 3, 0, 3, 5, seed + 77);
        NComplex s = direct_sum(x.complex, y.complex);
        CHECK(validate(s).ok);
        std::map<int, int> expected = dimension_vector(x.complex);
        for (const auto& [d, v] : dimension_vector(y.complex)) expected[d] += v;
        CHECK(dimension_vector(s) == expected);
    }
}

TEST_CASE("assemble") {
    PrimeField f(5);
    CHECK(assemble({}, f, 3).is_zero());

    SummandMultiset single{{{0, 1}, 1}};
    CHECK(assemble(single, f, 3) == indecomposable(f, 3, 0, 1));

    SummandMultiset ms{{{0, 1}, 2}, {{1, 0}, 1}};
    NComplex plain = assemble(ms, f, 3);
    CHECK(dimension_vector(plain) == std::map<int, int>{{0, 2}, {1, 3}});

    NComplex twisted = assemble(ms, f, 3, 7);
    CHECK(validate(twisted).ok);
    CHECK(dimension_vector(twisted) == dimension_vector(plain));

    SummandMultiset bad{{{0, 5}, 1}};
    CHECK_THROWS_AS(assemble(bad, f, 3), Error);
    SummandMultiset nonpositive{{{0, 1}, 0}};
    CHECK_THROWS_AS(assemble(nonpositive, f, 3), Error);
}

TEST_CASE("assemble basis slots match the block layout") {
    SummandMultiset ms{{{0, 2}, 2}, {{1, 0}, 1}};
    auto slots = assemble_basis_slots(ms, 1);
    REQUIRE(slots.size() == 3);
    CHECK(slots[0].summand == Indec{0, 2});
    CHECK(slots[0].copy == 0);
    CHECK(slots[1].summand == Indec{0, 2});
    CHECK(slots[1].copy == 1);
    CHECK(slots[2].summand == Indec{1, 0});
    CHECK(assemble_basis_slots(ms, 3).empty());
}

TEST_CASE("dimension vectors") {
    PrimeField f(5);
    CHECK(dimension_vector(indecomposable(f, 4, 2, 2)) ==
          std::map<int, int>{{2, 1}, {3, 1}, {4, 1}});
    SummandMultiset ms{{{0, 1}, 2}, {{1, 2}, 1}};
    CHECK(dimension_vector(ms) == std::map<int, int>{{0, 2}, {1, 3}, {2, 1}, {3, 1}});
    CHECK(total_dimension(ms) == 7);
}

TEST_CASE("shift") {
    PrimeField f(5);
    RandomComplex rc = random_ncomplex(f, 3, 0, 2, 4, 11);
    const NComplex& m = rc.complex;
    CHECK(shift(m, 0) == m);
    CHECK(shift(shift(m, 5), -5) == m);
    CHECK(shift(indecomposable(f, 3, 1, 2), 3) == indecomposable(f, 3, 4, 2));

    std::map<int, int> translated;
    for (const auto& [d, v] : dimension_vector(m)) translated[d + 2] = v;
    CHECK(dimension_vector(shift(m, 2)) == translated);
}

TEST_CASE("random_ncomplex") {
    PrimeField f(7);
    CHECK(random_ncomplex(f, 3, 0, 3, 0, 5).complex.is_zero());
    CHECK_THROWS_AS(random_ncomplex(f, 3, 2, 1, 4, 5), Error);

    RandomComplex a = random_ncomplex(f, 4, -1, 3, 6, 123);
    RandomComplex b = random_ncomplex(f, 4, -1, 3, 6, 123);
    CHECK(a.complex == b.complex);
    CHECK(a.summands == b.summands);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        RandomComplex rc = random_ncomplex(f, 3, -2, 4, 6, seed);
        CHECK(validate(rc.complex).ok);
        CHECK(dimension_vector(rc.complex) == dimension_vector(rc.summands));
        // the defining relation, degree by degree
        for (int s = rc.complex.lo(); s + 3 <= rc.complex.hi(); ++s)
            CHECK(composite(rc.complex, s, 3).is_zero());
    }
}
