#include "opgraph/linalg.hpp"

#include "opgraph/generators.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace opgraph;
using testsupport::cofactor_determinant;

namespace {
std::vector<GaussRational> unit_vector(std::size_t dim, std::size_t k) {
    std::vector<GaussRational> v(dim);
    v[k] = GaussRational(1);
    return v;
}
}  // namespace

TEST_CASE("rref on identity and zero") {
    RrefResult id = rref(ExactMatrix::identity(2));
    CHECK(id.matrix == ExactMatrix::identity(2));
    CHECK(id.rank == 2);
    CHECK(id.pivot_columns == std::vector<std::size_t>{0, 1});

    RrefResult zero = rref(ExactMatrix(3, 3));
    CHECK(zero.matrix.is_zero());
    CHECK(zero.rank == 0);
    CHECK(zero.pivot_columns.empty());
}

TEST_CASE("rank of the permutation generator X") {
    // Oracle: cofactor-expansion determinant of a permutation matrix is +-1,
    // so X has full rank regardless of theta.
    ExactMatrix x = theta_generators(GaussRational(7)).x;
    GaussRational det = cofactor_determinant(x);
    CHECK((det == GaussRational(1) || det == GaussRational(-1)));
    CHECK(rref(x).rank == 4);
}

TEST_CASE("rref is idempotent and solve matches") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        ExactMatrix m = testsupport::random_matrix(rng, 4, 5);
        RrefResult once = rref(m);
        RrefResult twice = rref(once.matrix);
        CHECK(once.matrix == twice.matrix);
        CHECK(once.rank == twice.rank);
    }
}

TEST_CASE("rank is submultiplicative") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        ExactMatrix a = testsupport::random_matrix(rng, 3, 4, 2, 2);
        ExactMatrix b = testsupport::random_matrix(rng, 4, 3, 2, 2);
        std::size_t r = rank(a * b);
        CHECK(r <= rank(a));
        CHECK(r <= rank(b));
    }
}

TEST_CASE("kernel dimensions") {
    CHECK(kernel(ExactMatrix::identity(3)).dim() == 0);
    CHECK(kernel(ExactMatrix(3, 3)).dim() == 3);

    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        ExactMatrix m = testsupport::random_matrix(rng, 3, 5, 2, 2);
        Subspace k = kernel(m);
        CHECK(k.dim() + rank(m) == m.cols());
        for (const auto& v : k.basis()) {
            std::vector<GaussRational> image = m.apply(v);
            for (const auto& e : image) CHECK(e.is_zero());
        }
    }
}

TEST_CASE("kernel of X - I is the +1 eigenspace") {
    // X is an involution with trace 0, so its +1 eigenspace is 2-dimensional;
    // oracle eigenvectors are (1,1,0,0) and (0,0,1,1).
    ExactMatrix x = theta_generators(GaussRational(3)).x;
    Subspace k = kernel(x - ExactMatrix::identity(4));
    CHECK(k.dim() == 2);
    GaussRational one(1);
    CHECK(k.contains({one, one, GaussRational(0), GaussRational(0)}));
    CHECK(k.contains({GaussRational(0), GaussRational(0), one, one}));
}

TEST_CASE("span_join basics") {
    Subspace zero(4);
    Subspace s = span_join(zero, {unit_vector(4, 0), unit_vector(4, 1)});
    CHECK(s.dim() == 2);
    CHECK(span_join(s, s.basis()) == s);  // idempotent

    CHECK_THROWS_AS(span_join(s, {unit_vector(3, 0)}), std::invalid_argument);
}

TEST_CASE("span of vectorized generators at theta=2") {
    GaussRational theta(2);
    ThetaGenerators g = theta_generators(theta);
    std::vector<std::vector<GaussRational>> vecs = {
        ExactMatrix::identity(4).vectorize(), g.x.vectorize(), g.y.vectorize(), g.z.vectorize()};
    // Oracle: rank of the 4x16 stacking.
    CHECK(rank(matrix_from_row_vectors(vecs)) == 4);
    Subspace s = Subspace::from_vectors(16, vecs);
    CHECK(s.dim() == 4);

    // XY lies outside the span: the stacked 5x16 matrix jumps to rank 5.
    std::vector<std::vector<GaussRational>> plus = vecs;
    plus.push_back((g.x * g.y).vectorize());
    CHECK(rank(matrix_from_row_vectors(plus)) == 5);
    CHECK_FALSE(contains(s, (g.x * g.y).vectorize()));

    for (const auto& v : vecs) CHECK(contains(s, v));
    CHECK_FALSE(contains(Subspace::from_vectors(4, {unit_vector(4, 0), unit_vector(4, 1)}),
                         unit_vector(4, 2)));
    CHECK_THROWS_AS(contains(s, unit_vector(4, 0)), std::invalid_argument);
}

TEST_CASE("span_join is order independent") {
    std::mt19937_64 rng(9001);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<std::vector<GaussRational>> vecs;
        for (int k = 0; k < 5; ++k) {
            ExactMatrix m = testsupport::random_matrix(rng, 1, 6, 2, 2);
            vecs.push_back(m.vectorize());
        }
        Subspace a = Subspace::from_vectors(6, vecs);
        std::shuffle(vecs.begin(), vecs.end(), rng);
        Subspace b = Subspace::from_vectors(6, vecs);
        CHECK(a == b);
        CHECK(a.basis() == b.basis());  // canonical stored basis, entry-wise
    }
}

TEST_CASE("solve and inverse") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        ExactMatrix m = testsupport::random_invertible(rng, 3);
        ExactMatrix inv = inverse(m);
        CHECK(m * inv == ExactMatrix::identity(3));
        CHECK(determinant(m) == cofactor_determinant(m));

        std::vector<GaussRational> x = {GaussRational(1), GaussRational(Rational(1, 2)),
                                        GaussRational::i()};
        auto sol = solve(m, m.apply(x));
        REQUIRE(sol.has_value());
        CHECK(*sol == x);
    }
    // Inconsistent system has no solution.
    ExactMatrix a(2, 1);
    a(0, 0) = GaussRational(1);
    CHECK_FALSE(solve(a, {GaussRational(0), GaussRational(1)}).has_value());
    CHECK_THROWS_AS(inverse(ExactMatrix(2, 2)), std::domain_error);
}
