#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncx/cohomology.hpp"
#include "ncx/decompose.hpp"
#include "ncx/homext.hpp"

using namespace ncx;

namespace {

NComplex random_positive(PrimeField f, int n, std::uint64_t seed, int max_mult = 5) {
    return random_ncomplex(f, n, 0, 3, max_mult, seed).complex;
}

}  // namespace

TEST_CASE("hom_dim basics") {
    PrimeField f(5);
    NComplex a = indecomposable(f, 3, 0, 1);
    CHECK(hom_dim(a, NComplex(3, f)) == 0);
    CHECK(hom_dim(NComplex(3, f), a) == 0);
    CHECK(hom_dim(indecomposable(f, 3, 0, 0), indecomposable(f, 3, 0, 0)) == 1);
    CHECK_THROWS_AS(hom_dim(a, indecomposable(f, 4, 0, 1)), Error);
}

TEST_CASE("hom between indecomposables follows the segment rule") {
    // nonzero exactly when the source starts during the target and ends
    // with or after it, and then it is one-dimensional
    PrimeField f(5);
    for (int n : {2, 3, 4, 5})
        for (int e = 0; e <= 2; ++e)
            for (int a = 1; a <= n - 1; ++a)
                for (int i = 0; i <= 2; ++i)
                    for (int l = 0; l <= n - 1; ++l) {
                        int expected =
                            (e >= i && e <= i + l && e + a - 1 >= i + l) ? 1 : 0;
                        CHECK(hom_dim(indecomposable(f, n, e, a - 1),
                                      indecomposable(f, n, i, l)) == expected);
                    }
}

TEST_CASE("hom_dim is additive in both arguments") {
    PrimeField f(7);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        NComplex a = random_ncomplex(f, 3, -1, 2, 4, seed).complex;
        NComplex b = random_ncomplex(f, 3, -1, 2, 4, seed + 10).complex;
        NComplex c = random_ncomplex(f, 3, 0, 3, 4, seed + 20).complex;
        CHECK(hom_dim(a, direct_sum(b, c)) == hom_dim(a, b) + hom_dim(a, c));
        CHECK(hom_dim(direct_sum(a, b), c) == hom_dim(a, c) + hom_dim(b, c));
    }
}

TEST_CASE("positivity predicates") {
    PrimeField f(5);
    CHECK(is_positive(NComplex(3, f)));
    CHECK(is_positive(indecomposable(f, 3, 0, 2)));
    CHECK(!is_positive(indecomposable(f, 3, -1, 2)));

    CHECK(is_injective_positive({0, 0}, 3));
    CHECK(is_injective_positive({0, 2}, 3));
    CHECK(!is_injective_positive({1, 0}, 3));
    CHECK(!is_injective_positive({2, 1}, 4));
    CHECK(is_injective_positive({3, 2}, 3));
    CHECK(!is_injective_positive({-1, 2}, 3));
    CHECK_THROWS_AS(is_injective_positive({0, 3}, 3), Error);
}

TEST_CASE("projective cover of a projective is an isomorphism") {
    PrimeField f(5);
    for (int n : {2, 3, 4})
        for (int i : {0, 2}) {
            NComplex proj = indecomposable(f, n, i, n - 1);
            Cover c = projective_cover(proj);
            CHECK(c.module == proj);
            CHECK(is_chain_map(c.epi, c.module, proj));
            for (int d = proj.lo(); d <= proj.hi(); ++d)
                CHECK(c.epi.at(d, c.module, proj) == Matrix::identity(f, 1));
        }
}

namespace {

// Independent reconstruction of the kernel complex of a cover epimorphism.
NComplex cover_kernel(const Cover& c, const NComplex& m) {
    const NComplex& p = c.module;
    if (p.is_zero()) return NComplex(m.order(), m.field());
    std::vector<Matrix> bases;
    std::vector<int> dims;
    for (int d = p.lo(); d <= p.hi(); ++d) {
        bases.push_back(kernel_basis(c.epi.at(d, p, m)));
        dims.push_back(int(bases.back().cols()));
    }
    std::vector<Matrix> maps;
    for (int d = p.lo(); d < p.hi(); ++d) {
        std::size_t k = std::size_t(d - p.lo());
        auto induced = solve_right(bases[k + 1], multiply(p.map_at(d), bases[k]));
        REQUIRE(induced.has_value());
        maps.push_back(*induced);
    }
    return NComplex(p.order(), p.field(), p.lo(), dims, maps);
}

}  // namespace

TEST_CASE("projective cover of a short segment") {
    PrimeField f(5);
    for (int n : {3, 4, 5})
        for (int i : {0, 1})
            for (int l = 0; l <= n - 2; ++l) {
                NComplex m = indecomposable(f, n, i, l);
                Cover c = projective_cover(m);
                CHECK(decompose(c.module) == SummandMultiset{{{i, n - 1}, 1}});
                CHECK(is_chain_map(c.epi, c.module, m));
                // the kernel is the complementary tail of the segment
                SummandMultiset syzygy{{{i + l + 1, n - 2 - l}, 1}};
                CHECK(decompose(cover_kernel(c, m)) == syzygy);
            }
    CHECK(projective_cover(NComplex(3, f)).module.is_zero());
    CHECK_THROWS_AS(projective_cover(indecomposable(f, 3, -1, 1)), Error);
}

TEST_CASE("projective covers of random positive complexes") {
    PrimeField f(7);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        int n = 2 + int(seed % 4);
        NComplex m = random_positive(f, n, seed);
        Cover c = projective_cover(m);
        CHECK(validate(c.module).ok);
        CHECK(is_chain_map(c.epi, c.module, m));
        CHECK(is_projective(c.module));
        for (int d = m.lo(); d <= m.hi(); ++d)
            CHECK(rank(c.epi.at(d, c.module, m)) == std::size_t(m.dim(d)));
    }
}

TEST_CASE("resolution of a projective stops immediately") {
    PrimeField f(5);
    NComplex proj = assemble({{{0, 2}, 1}, {{1, 2}, 2}}, f, 3, 9);
    Resolution res = projective_resolution(proj, 3);
    REQUIRE(res.modules.size() == 4);
    CHECK(iso(res.modules[0], proj));
    for (std::size_t k = 1; k < res.modules.size(); ++k) CHECK(res.modules[k].is_zero());
    CHECK(resolution_is_exact(res));
}

TEST_CASE("resolution syzygies of a segment alternate with period two") {
    PrimeField f(5);
    for (int n : {3, 4, 5})
        for (int e : {0, 1})
            for (int a = 1; a <= n - 1; ++a) {
                NComplex m = indecomposable(f, n, e, a - 1);
                Resolution res = projective_resolution(m, 4);
                int b = n - a;
                // P_0 covers M_e^{a-1}; kernels then alternate between the
                // complementary segment and the N-shifted original.
                CHECK(decompose(res.modules[0]) == SummandMultiset{{{e, n - 1}, 1}});
                CHECK(decompose(res.modules[1]) == SummandMultiset{{{e + a, n - 1}, 1}});
                CHECK(decompose(res.modules[2]) == SummandMultiset{{{e + a + b, n - 1}, 1}});
                CHECK(decompose(res.modules[3]) == SummandMultiset{{{e + n + a, n - 1}, 1}});
                CHECK(resolution_is_exact(res));
            }
}

TEST_CASE("resolution maps compose to zero") {
    PrimeField f(7);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        int n = 2 + int(seed % 3);
        NComplex m = random_positive(f, n, seed + 5);
        Resolution res = projective_resolution(m, 3);
        CHECK(resolution_is_exact(res));
        for (std::size_t k = 0; k + 1 < res.modules.size(); ++k) {
            const NComplex& below = k == 0 ? res.target : res.modules[k - 1];
            for (int d = res.modules[k].lo(); d <= res.modules[k].hi(); ++d) {
                Matrix comp = multiply(res.maps[k].at(d, res.modules[k], below),
                                       res.maps[k + 1].at(d, res.modules[k + 1], res.modules[k]));
                CHECK(comp.is_zero());
            }
        }
    }
}

TEST_CASE("ext vanishes above zero for projective first arguments") {
    PrimeField f(5);
    NComplex proj = assemble({{{0, 2}, 1}, {{2, 2}, 1}}, f, 3, 4);
    NComplex x = random_positive(f, 3, 21);
    for (int n = 1; n <= 3; ++n) CHECK(ext_dim(proj, x, n) == 0);
    CHECK(ext_dim(proj, x, 0) == hom_dim(proj, x));
    CHECK_THROWS_AS(ext_dim(indecomposable(f, 3, -1, 1), x, 1), Error);
    CHECK_THROWS_AS(ext_dim(x, indecomposable(f, 3, -1, 1), 1), Error);
    CHECK_THROWS_AS(ext_dim(proj, x, -1), Error);
}

TEST_CASE("ext in degree zero is hom") {
    PrimeField f(5);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        int n = 2 + int(seed % 4);
        NComplex a = random_positive(f, n, seed + 100, 3);
        NComplex b = random_positive(f, n, seed + 200, 3);
        CHECK(ext_dim(a, b, 0) == hom_dim(a, b));
    }
}

TEST_CASE("amplitude cohomology at an admissible initial degree is representable") {
    PrimeField f(5);
    for (int n : {2, 3, 4})
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            NComplex x = random_positive(f, n, seed + 300);
            for (int a = 1; a <= n - 1; ++a)
                for (int e = 0; e <= n - 1 - a; ++e)
                    CHECK(ah_dim(x, a, e) == hom_dim(indecomposable(f, n, e, a - 1), x));
        }
}

TEST_CASE("ext computes amplitude cohomology through the euclidean split") {
    PrimeField f(5);
    for (int n : {2, 3})
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            NComplex x = random_positive(f, n, seed + 400, 4);
            for (int a = 1; a <= n - 1; ++a) {
                int b = n - a;
                for (int j = 0; j <= 2 * n; ++j) {
                    int q = j / n, e = j % n;
                    int expected = ah_dim(x, a, j);
                    int got = e < b ? ext_dim(indecomposable(f, n, e, a - 1), x, 2 * q)
                                    : ext_dim(indecomposable(f, n, e - b, b - 1), x, 2 * q + 1);
                    CHECK(expected == got);
                }
            }
        }
}

TEST_CASE("contractions of positive injectives are exact in positive degrees") {
    PrimeField f(5);
    for (int n : {2, 3, 4, 5}) {
        std::vector<NComplex> injectives;
        for (int l = 0; l <= n - 1; ++l) injectives.push_back(indecomposable(f, n, 0, l));
        for (int i = 1; i <= 3; ++i) injectives.push_back(indecomposable(f, n, i, n - 1));
        for (const NComplex& j : injectives)
            for (int a = 1; a <= n - 1; ++a)
                for (int e = 0; e < n - a; ++e) {
                    NComplex c = contract(j, e, a);
                    for (int deg = 1; deg <= c.hi() + 2; ++deg) CHECK(h2_dim(c, deg) == 0);
                }
    }
}
