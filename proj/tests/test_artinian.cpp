#include <catch2/catch_amalgamated.hpp>

#include "stresslab/artinian.hpp"
#include "stresslab/io.hpp"

#include "oracles.hpp"

using namespace stresslab;

namespace {
const Field Q = Field::rationals();

// f-to-h oracle: h_k = Σ_i (-1)^{k-i} C(d-i, k-i) f_{i-1}
std::vector<long long> h_oracle(const std::vector<long long>& f, int d) {
    auto binom = [](long long n, long long k) {
        if (k < 0 || k > n) return 0LL;
        long long r = 1;
        for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    std::vector<long long> h(d + 1, 0);
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= k; ++i)
            h[k] += ((k - i) % 2 ? -1 : 1) * binom(d - i, k - i) * f[i];
    return h;
}

GradedAlgebra build_generic(const SimplicialComplex& c, std::uint64_t seed,
                            const Field& f = Q, long long bound = 50) {
    int d = c.dim() + 1;
    return GradedAlgebra::build(c, random_realization(c, d, seed, bound, f));
}
}  // namespace

TEST_CASE("algebra dimensions match the h-vector on spheres") {
    auto bd = boundary_simplex(3);
    REQUIRE(build_generic(bd, 1).dims() == std::vector<int>{1, 1, 1, 1});

    auto oct = boundary_crosspolytope(3);
    auto a = build_generic(oct, 2);
    REQUIRE(a.dims() == std::vector<int>{1, 3, 3, 1});
    REQUIRE(h_oracle(oct.f_vector(), 3) == std::vector<long long>{1, 3, 3, 1});

    auto x4 = boundary_crosspolytope(4);
    auto a4 = build_generic(x4, 3);
    REQUIRE(a4.dims() == std::vector<int>{1, 4, 6, 4, 1});
    REQUIRE(h_oracle(x4.f_vector(), 4) == std::vector<long long>{1, 4, 6, 4, 1});

    // degrees beyond d vanish
    auto wide = GradedAlgebra::build(oct, random_realization(oct, 3, 9, 50), 4);
    REQUIRE(wide.dim(4) == 0);
}

TEST_CASE("improper realization rejected") {
    auto oct = boundary_crosspolytope(3);
    std::vector<std::vector<long long>> cols(6, {1, 1, 1});
    REQUIRE_THROWS_AS(GradedAlgebra::build(oct, Realization::from_integers(3, Q, cols)),
                      std::invalid_argument);
}

TEST_CASE("multiplication: unit, nonface products, associativity") {
    auto oct = boundary_crosspolytope(3);
    auto a = build_generic(oct, 4);
    Rng rng(11);

    AlgebraElement one = a.one();
    for (int v = 0; v < 6; ++v) {
        AlgebraElement xv = a.x(v);
        AlgebraElement prod = xv * one;
        REQUIRE(prod.coords == xv.coords);
    }

    // antipodal vertices are a nonface: x_u x_v = 0
    int u = oct.vertex_index("1"), v = oct.vertex_index("1'");
    REQUIRE((a.x(u) * a.x(v)).is_zero());

    // associativity on random degree-1 triples
    for (int t = 0; t < 12; ++t) {
        auto rand1 = [&](int salt) {
            std::vector<Scalar> cs;
            Rng r = rng.child(salt * 100 + t);
            for (int w = 0; w < 6; ++w) cs.push_back(r.scalar(Q, 9));
            return a.linear_form(cs);
        };
        AlgebraElement x = rand1(1), y = rand1(2), z = rand1(3);
        AlgebraElement lhs = (x * y) * z;
        AlgebraElement rhs = x * (y * z);
        REQUIRE(lhs.coords == rhs.coords);
    }

    // degree overflow
    AlgebraElement top = a.zero(3);
    REQUIRE_THROWS_AS(a.multiply(top, a.x(0)), std::invalid_argument);
}

TEST_CASE("degree map: linearity and the volume-stress normalization") {
    auto oct = boundary_crosspolytope(3);
    std::map<std::string, std::vector<long long>> pts = {
        {"1", {1, 0, 0}}, {"1'", {-1, 0, 0}}, {"2", {0, 1, 0}},
        {"2'", {0, -1, 0}}, {"3", {0, 0, 1}}, {"3'", {0, 0, -1}}};
    std::vector<std::vector<long long>> cols;
    for (int v = 0; v < 6; ++v) cols.push_back(pts.at(oct.label(v)));
    auto a = GradedAlgebra::build(oct, Realization::from_integers(3, Q, cols));

    REQUIRE(a.degree_map(a.zero(3)).is_zero());

    // with unit coordinates every facet determinant is ±1, so the facet
    // monomials evaluate to ±1; the reference facet gives +1
    const auto& facets = oct.faces_with_vertices(3);
    Monomial mref;
    for (int v : face_vertices(facets.front())) mref.exps.emplace_back(v, 1);
    AlgebraElement ref = a.from_monomial_poly(3, {{a.monomials(3).index_of(mref), Scalar::one(Q)}});
    REQUIRE(a.degree_map(ref) == Scalar::one(Q));
    for (Face fc : facets) {
        Monomial m;
        for (int v : face_vertices(fc)) m.exps.emplace_back(v, 1);
        AlgebraElement e = a.from_monomial_poly(3, {{a.monomials(3).index_of(m), Scalar::one(Q)}});
        Scalar d = a.degree_map(e);
        REQUIRE((d == Scalar::one(Q) || d == Scalar::integer(Q, -1)));
    }

    // linearity
    Rng rng(3);
    auto rand_top = [&](int salt) {
        std::vector<Scalar> cs;
        Rng r = rng.child(salt);
        for (int i = 0; i < a.dim(3); ++i) cs.push_back(r.scalar(Q, 9));
        return a.from_coords(3, cs);
    };
    AlgebraElement p = rand_top(1), q = rand_top(2);
    REQUIRE(a.degree_map(p + q) == a.degree_map(p) + a.degree_map(q));

    // a 2-ball has no degree map
    auto ball = boundary_simplex(3).deletion(boundary_simplex(3).face_of_labels({"1", "2", "3"}));
    auto ab = build_generic(ball, 5);
    REQUIRE_THROWS_AS(ab.degree_map(ab.zero(3)), std::invalid_argument);
}

TEST_CASE("ideals and kappa numbers") {
    auto oct = boundary_crosspolytope(3);
    auto a = build_generic(oct, 6);

    // Δ' = Σ: zero ideal
    MonomialIdeal full(a, oct);
    for (int k = 0; k <= 3; ++k) REQUIRE(full.kappa(k) == 0);

    // Δ' = void complex: the maximal ideal
    MonomialIdeal maximal(a, SimplicialComplex::from_facets({}));
    REQUIRE(maximal.kappa(0) == 0);
    for (int k = 1; k <= 3; ++k) REQUIRE(maximal.kappa(k) == a.dim(k));

    // ideal property: x_v K^k ⊆ K^{k+1}
    auto star = oct.star(oct.face_of_labels({"1"}));
    MonomialIdeal ks(a, star);
    for (int k = 1; k < 3; ++k) {
        for (const auto& gen : ks.degree(k).basis()) {
            AlgebraElement g = a.from_coords(k, spv::to_dense(gen, a.dim(k), Q));
            for (int v = 0; v < 6; ++v) {
                AlgebraElement prod = a.x(v) * g;
                REQUIRE(ks.degree(k + 1).contains(spv::from_dense(prod.coords)));
            }
        }
    }

    REQUIRE_THROWS_AS(MonomialIdeal(a, boundary_simplex(4)), std::invalid_argument);
}

TEST_CASE("bad Artinian reduction: kappa_1 = 3 and kappa_2 = 2") {
    auto fix = special_realization_bad_reduction();
    auto a = GradedAlgebra::build(fix.sigma_prime, fix.realization);
    REQUIRE(a.dims() == std::vector<int>{1, 5, 5, 1});
    MonomialIdeal k(a, fix.delta);
    REQUIRE(k.kappa(1) == 3);
    REQUIRE(k.kappa(2) == 2);
}

TEST_CASE("annihilators") {
    auto oct = boundary_crosspolytope(3);
    auto a = build_generic(oct, 7);

    // K = 0: annihilator is everything
    MonomialIdeal zero_ideal(a, oct);
    for (int k = 0; k <= 3; ++k)
        REQUIRE(annihilator_degree(a, zero_ideal, k).dim() == a.dim(k));

    // K = maximal ideal on a sphere: annihilator concentrated in degree d
    MonomialIdeal maximal(a, SimplicialComplex::from_facets({}));
    for (int k = 0; k < 3; ++k) REQUIRE(annihilator_degree(a, maximal, k).dim() == 0);
    REQUIRE(annihilator_degree(a, maximal, 3).dim() == 1);

    // dim Ann^k + dim K^{d-k} = dim A^k (gram-orthogonality on a sphere)
    MonomialIdeal ks(a, oct.star(oct.face_of_labels({"2"})));
    for (int k = 0; k <= 3; ++k) {
        Subspace ann = annihilator_degree(a, ks, k);
        REQUIRE(ann.dim() + ks.kappa(3 - k) == a.dim(k));
        // and Ann really is the orthogonal complement under the pairing
        SparseMatrix p = a.pairing_matrix(k);
        for (const auto& av : ann.basis())
            for (const auto& kv : ks.degree(3 - k).basis()) {
                Scalar s = Scalar::zero(Q);
                for (const auto& [i, x] : av)
                    for (const auto& [j, y] : kv) s += x * y * p.entry(i, j);
                REQUIRE(s.is_zero());
            }
    }
}

TEST_CASE("socle and Gorenstein quotient on the 7-vertex torus") {
    auto tor = moebius_torus_7();
    auto a = build_generic(tor, 8);
    REQUIRE(a.dim(1) == 4);
    REQUIRE(a.dim(2) == 10);
    REQUIRE(a.dim(3) == 1);

    // homology sphere: interior socle vanishes, B = A
    auto oct_a = build_generic(boundary_crosspolytope(3), 9);
    for (int k = 0; k < 3; ++k) REQUIRE(oct_a.interior_socle(k).dim() == 0);

    // torus: dim Soc°^2 = C(3,2)·b_1 = 6
    REQUIRE(a.interior_socle(2).dim() == 6);
    REQUIRE(a.interior_socle(1).dim() == 0);

    GorensteinQuotient b(a);
    REQUIRE(b.dim(1) == 4);
    REQUIRE(b.dim(2) == 4);
    REQUIRE(b.dim(3) == 1);
}

TEST_CASE("poincare duality dims and perfect pairing on sphere corpus") {
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
        auto cyc = cyclic_polytope_boundary(7, 4);
        auto a = build_generic(cyc, seed * 31);
        REQUIRE(a.dims() == std::vector<int>{1, 3, 6, 3, 1});
        for (int k = 0; k <= 4; ++k) {
            REQUIRE(a.dim(k) == a.dim(4 - k));
            REQUIRE(rank(a.pairing_matrix(k)) == a.dim(k));
        }
    }
}

TEST_CASE("prime field backend matches rational dims") {
    auto oct = boundary_crosspolytope(3);
    Field fp = Field::prime((1ull << 31) + 11);
    auto aq = build_generic(oct, 10, Q);
    auto ap = build_generic(oct, 10, fp);
    REQUIRE(aq.dims() == ap.dims());
    MonomialIdeal kq(aq, oct.star(oct.face_of_labels({"3"})));
    MonomialIdeal kp(ap, oct.star(oct.face_of_labels({"3"})));
    for (int k = 0; k <= 3; ++k) REQUIRE(kq.kappa(k) == kp.kappa(k));
}
