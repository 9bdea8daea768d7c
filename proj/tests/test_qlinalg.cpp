/// Unit tests for exact rational sparse linear algebra: rank, kernel,
/// dense inverse, and the Rat string round-trip.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "tautgm/errors.hpp"
#include "tautgm/qlinalg.hpp"

using tautgm::Rat;
using tautgm::rat_from_string;
using tautgm::rat_to_string;
using tautgm::qlinalg::SparseMat;

TEST_CASE("rat string round-trip") {
    const std::vector<std::string> reprs = {"0", "1", "-1", "5/3", "-22/7", "1000000000000000003"};
    for (const auto& s : reprs) {
        const Rat r = rat_from_string(s);
        CHECK(rat_to_string(r) == s);
    }
    CHECK(rat_from_string("4/6") == Rat(2, 3));
    CHECK_THROWS_AS((void)rat_from_string("1/0"), tautgm::DomainError);
    CHECK_THROWS_AS((void)rat_from_string("x"), tautgm::DomainError);
}

TEST_CASE("sparse matrix stores no zeros") {
    SparseMat m(3, 3);
    m.set(0, 0, Rat(2));
    m.set(0, 0, Rat(0));
    m.add(1, 2, Rat(5));
    m.add(1, 2, Rat(-5));
    CHECK(m.n_entries() == 0);
    CHECK(m.get(0, 0) == Rat(0));
    CHECK_THROWS_AS((void)m.get(3, 0), tautgm::DomainError);
}

TEST_CASE("rank of known matrices") {
    SparseMat id(4, 4);
    for (std::size_t i = 0; i < 4; ++i) id.set(i, i, Rat(1));
    CHECK(tautgm::qlinalg::rank(id) == 4);

    // Rank 1: every row a multiple of the first.
    SparseMat r1(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) r1.set(i, j, Rat(static_cast<long>((i + 1) * (j + 1))));
    CHECK(tautgm::qlinalg::rank(r1) == 1);

    CHECK(tautgm::qlinalg::rank(SparseMat(5, 7)) == 0);

    // Fractional pivots must not lose exactness.
    SparseMat f(2, 2);
    f.set(0, 0, Rat(1, 3));
    f.set(0, 1, Rat(1, 2));
    f.set(1, 0, Rat(2, 3));
    f.set(1, 1, Rat(1));
    CHECK(tautgm::qlinalg::rank(f) == 1);
}

TEST_CASE("kernel vectors annihilate and span the corank") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t rows = 3 + static_cast<std::size_t>(iter % 4);
        const std::size_t cols = 4 + static_cast<std::size_t>(iter % 3);
        SparseMat m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (val(rng) > 0) m.set(r, c, Rat(val(rng)));

        const auto kernel = tautgm::qlinalg::kernel_basis(m);
        CHECK(kernel.size() == cols - tautgm::qlinalg::rank(m));
        for (const auto& k : kernel) {
            REQUIRE(k.size() == cols);
            for (std::size_t r = 0; r < rows; ++r) {
                Rat dot(0);
                for (const auto& [c, v] : m.row(r)) dot += v * k[c];
                CHECK(dot == Rat(0));
            }
        }
        // Independence: the kernel vectors form a full-rank matrix.
        SparseMat km(kernel.size(), cols);
        for (std::size_t i = 0; i < kernel.size(); ++i)
            for (std::size_t c = 0; c < cols; ++c) km.set(i, c, kernel[i][c]);
        CHECK(tautgm::qlinalg::rank(km) == kernel.size());
    }
}

TEST_CASE("dense inverse round-trips") {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> val(-5, 5);
    int done = 0;
    while (done < 10) {
        const std::size_t n = 3;
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
        SparseMat check(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                a[r][c] = Rat(val(rng));
                check.set(r, c, a[r][c]);
            }
        if (tautgm::qlinalg::rank(check) < n) continue;
        ++done;

        const auto inv = tautgm::qlinalg::invert_dense(a);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                Rat dot(0);
                for (std::size_t k = 0; k < n; ++k) dot += a[r][k] * inv[k][c];
                CHECK(dot == (r == c ? Rat(1) : Rat(0)));
            }
    }

    std::vector<std::vector<Rat>> singular = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK_THROWS_AS((void)tautgm::qlinalg::invert_dense(singular), tautgm::InternalError);
}

TEST_CASE("transpose involutes and preserves rank") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> val(-3, 3);
    SparseMat m(5, 8);
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 8; ++c)
            if (val(rng) > 1) m.set(r, c, Rat(val(rng)));
    CHECK(m.transposed().transposed() == m);
    CHECK(tautgm::qlinalg::rank(m.transposed()) == tautgm::qlinalg::rank(m));
}
