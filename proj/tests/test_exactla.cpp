#include <catch2/catch_amalgamated.hpp>

#include "stresslab/rng.hpp"
#include "stresslab/sparse.hpp"
#include "stresslab/subspace.hpp"

#include "oracles.hpp"

using namespace stresslab;

namespace {

const Field Q = Field::rationals();

SparseMatrix random_matrix(int rows, int cols, Rng& rng, const Field& f,
                           int bound = 5, int fill_percent = 60) {
    SparseMatrix m(rows, cols, f);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng.uint_below(100) < static_cast<std::uint64_t>(fill_percent))
                m.add(r, c, rng.scalar(f, bound));
    return m;
}

} // namespace

TEST_CASE("scalar arithmetic is exact over Q") {
    Scalar a = Scalar::rational(1, 3);
    Scalar b = Scalar::rational(1, 6);
    REQUIRE(a + b == Scalar::rational(1, 2));
    REQUIRE(a * b == Scalar::rational(1, 18));
    REQUIRE((a - a).is_zero());
    REQUIRE(a / b == Scalar::integer(Q, 2));
    REQUIRE(Scalar::parse(Q, "-7/2").str() == "-7/2");
}

TEST_CASE("prime field validation and inversion") {
    REQUIRE_THROWS_AS(Field::prime(7), field_error);          // too small
    REQUIRE_THROWS_AS(Field::prime(1 << 21), field_error);    // even
    Field fp = Field::prime(2147483659ull);
    Scalar x = Scalar::integer(fp, -5);
    REQUIRE((x * x.inv()).is_one());
    REQUIRE((x + (-x)).is_zero());
    Rng rng(99);
    for (int i = 0; i < 50; ++i) {
        Scalar v = rng.nonzero_scalar(fp, 1 << 30);
        REQUIRE((v * v.inv()).is_one());
    }
}

TEST_CASE("mixed-field input rejected") {
    Field fp = Field::prime(2147483659ull);
    Scalar a = Scalar::one(Q), b = Scalar::one(fp);
    REQUIRE_THROWS_AS(a + b, field_error);
    SparseMatrix m(2, 2, Q);
    REQUIRE_THROWS_AS(m.add(0, 0, b), field_error);
}

TEST_CASE("rank: fixed examples") {
    SparseMatrix zero(3, 3, Q);
    REQUIRE(rank(zero) == 0);
    REQUIRE(rank(SparseMatrix::identity(3, Q)) == 3);

    SparseMatrix prop(2, 3, Q);
    // rows (1,2,3) and (2,4,6)
    for (int c = 0; c < 3; ++c) {
        prop.add(0, c, Scalar::integer(Q, c + 1));
        prop.add(1, c, Scalar::integer(Q, 2 * (c + 1)));
    }
    REQUIRE(rank(prop) == 1);
}

TEST_CASE("kernel: fixed examples") {
    SparseMatrix row(1, 2, Q);
    row.add(0, 0, Scalar::one(Q));
    row.add(0, 1, Scalar::one(Q));
    Subspace k = kernel(row);
    REQUIRE(k.dim() == 1);
    REQUIRE(k.contains(SpVec{{0, Scalar::one(Q)}, {1, Scalar::integer(Q, -1)}}));

    REQUIRE(kernel(SparseMatrix::identity(4, Q)).dim() == 0);
}

TEST_CASE("kernel dimension and exactness against dense oracle") {
    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        Rng r = rng.child(trial);
        SparseMatrix m = random_matrix(5, 8, r, Q);
        int rk = rank(m);
        REQUIRE(rk == oracle::rank(m));
        Subspace k = kernel(m);
        REQUIRE(k.dim() == 8 - rk);
        for (const auto& v : k.basis()) {
            REQUIRE(m.apply(v).empty());  // m*v = 0 exactly
        }
        // same space as the oracle's kernel
        for (const auto& ov : oracle::kernel(m)) {
            REQUIRE(k.contains(spv::from_dense(ov)));
        }
    }
}

TEST_CASE("rank(m) == rank(transpose(m))") {
    Rng rng(7);
    for (int trial = 0; trial < 15; ++trial) {
        Rng r = rng.child(trial);
        SparseMatrix m = random_matrix(static_cast<int>(2 + r.uint_below(7)),
                                       static_cast<int>(2 + r.uint_below(7)), r, Q);
        REQUIRE(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("subspace canonical form: two constructions compare equal") {
    Rng rng(5150);
    for (int trial = 0; trial < 15; ++trial) {
        Rng r = rng.child(trial);
        SparseMatrix m = random_matrix(6, 4, r, Q);
        Subspace s1 = Subspace::from_matrix(m);
        // same span through shuffled, rescaled, mixed generators
        std::vector<SpVec> gens;
        for (int c = m.cols() - 1; c >= 0; --c) {
            SpVec v = m.column(c);
            spv::scale(v, Scalar::integer(Q, 3));
            if (c > 0) spv::axpy(v, Scalar::integer(Q, -2), m.column(c - 1));
            gens.push_back(std::move(v));
        }
        Subspace s2 = Subspace::span(6, Q, gens);
        REQUIRE(s1 == s2);
    }
}

TEST_CASE("intersect / sum: fixed examples in dim 2") {
    SpVec e1{{0, Scalar::one(Q)}}, e2{{1, Scalar::one(Q)}};
    Subspace a = Subspace::span(2, Q, {e1});
    Subspace b = Subspace::span(2, Q, {e2});
    REQUIRE(intersect(a, b).dim() == 0);
    REQUIRE(sum(a, b) == Subspace::full(2, Q));
    REQUIRE(intersect(a, a) == a);
    REQUIRE(sum(a, a) == a);
}

TEST_CASE("dimension formula dim(a∩b) + dim(a+b) = dim a + dim b") {
    Rng rng(31337);
    for (int trial = 0; trial < 15; ++trial) {
        Rng r = rng.child(trial);
        Subspace a = Subspace::from_matrix(random_matrix(10, static_cast<int>(1 + r.uint_below(6)), r, Q));
        Subspace b = Subspace::from_matrix(random_matrix(10, static_cast<int>(1 + r.uint_below(6)), r, Q));
        Subspace cap = intersect(a, b);
        Subspace cup = sum(a, b);
        REQUIRE(cap.dim() + cup.dim() == a.dim() + b.dim());
        // brute-force cross-check of the sum via stacked elimination
        std::vector<SpVec> gens = a.basis();
        for (const auto& v : b.basis()) gens.push_back(v);
        REQUIRE(cup == Subspace::span(10, Q, gens));
        REQUIRE(a.contains(cap));
        REQUIRE(b.contains(cap));
        REQUIRE(cup.contains(a));
    }
}

TEST_CASE("orthogonal complement against the standard gram") {
    SparseMatrix gram = SparseMatrix::identity(4, Q);
    Subspace a = Subspace::span(4, Q, {{{0, Scalar::one(Q)}, {1, Scalar::one(Q)}}});
    Subspace c = orthogonal_complement(a, gram);
    REQUIRE(c.dim() == 3);
    for (const auto& v : c.basis())
        REQUIRE(spv::dot(a.basis()[0], v, Q).is_zero());

    SparseMatrix bad(4, 4, Q);
    bad.add(0, 1, Scalar::one(Q));
    REQUIRE_THROWS_AS(orthogonal_complement(a, bad), std::invalid_argument);
}

TEST_CASE("rational and prime-field backends agree on rank") {
    Rng rng(404);
    for (int trial = 0; trial < 15; ++trial) {
        Rng r = rng.child(trial);
        SparseMatrix mq = random_matrix(7, 9, r, Q, 20);
        Field fp = random_prime_field(r.next());
        SparseMatrix mp(7, 9, fp);
        for (int c = 0; c < 9; ++c)
            for (const auto& [row, x] : mq.column(c))
                mp.add(row, c, Scalar::reduce_mod(x, fp));
        REQUIRE(rank(mq) == rank(mp));
    }
}

TEST_CASE("markowitz path agrees with dense path above the cutoff") {
    // 210 columns forces the sparse elimination branch
    Rng rng(8888);
    SparseMatrix m(60, 210, Q);
    for (int c = 0; c < 210; ++c) {
        int r1 = static_cast<int>(rng.uint_below(60));
        int r2 = static_cast<int>(rng.uint_below(60));
        m.add(r1, c, rng.nonzero_scalar(Q, 4));
        if (r2 != r1) m.add(r2, c, rng.scalar(Q, 4));
    }
    REQUIRE(rank(m) == oracle::rank(m));
}
