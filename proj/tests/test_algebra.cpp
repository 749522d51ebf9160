#include "opgraph/algebra.hpp"

#include "opgraph/atheta.hpp"
#include "opgraph/generators.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace opgraph;
using testsupport::cofactor_determinant;

namespace {
SpannedAlgebra m_theta(const GaussRational& theta) {
    ThetaGenerators g = theta_generators(theta);
    return close_algebra({g.x, g.y, g.z}, true);
}

std::vector<ExactMatrix> mat2_units() {
    std::vector<ExactMatrix> e;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            ExactMatrix m(2, 2);
            m(r, c) = GaussRational(1);
            e.push_back(m);
        }
    return e;
}
}  // namespace

TEST_CASE("closure dimensions across the sampled parameters") {
    for (const auto& theta :
         {GaussRational(2), GaussRational(3), GaussRational(Rational(1, 2)),
          GaussRational(Rational(5, 3)), GaussRational::i(),
          GaussRational(Rational(1), Rational(1))}) {
        SpannedAlgebra a = m_theta(theta);
        CHECK(a.dim() == 8);
        CHECK(a.contains_identity());
        CHECK(a.closure_rounds() <= 3);
    }
    CHECK(m_theta(GaussRational(1)).dim() == 4);
    CHECK(m_theta(GaussRational(-1)).dim() == 4);
    CHECK(close_algebra({ExactMatrix::identity(3)}, true).dim() == 1);
    CHECK_THROWS_AS(close_algebra({ExactMatrix(2, 2), ExactMatrix(3, 3)}, true),
                    std::invalid_argument);
}

TEST_CASE("closure is multiplicatively closed and idempotent") {
    SpannedAlgebra a = m_theta(GaussRational(2));
    for (const auto& u : a.basis())
        for (const auto& v : a.basis()) CHECK(a.contains(u * v));
    SpannedAlgebra again = close_algebra(a.basis(), true);
    CHECK(algebras_equal(a, again));
}

TEST_CASE("alternative generators span the same algebra") {
    for (const auto& theta :
         {GaussRational(2), GaussRational(Rational(5, 3)), GaussRational::i()}) {
        ThetaGenerators g = theta_generators(theta);
        SpannedAlgebra alt = close_algebra({g.x, g.x * g.y * g.x, g.z}, true);
        CHECK(algebras_equal(alt, m_theta(theta)));
    }
}

TEST_CASE("generator symmetries M_theta = M_{1/theta} = M_{-theta}") {
    for (const auto& theta :
         {GaussRational(2), GaussRational(3), GaussRational(Rational(1), Rational(1))}) {
        CHECK(algebras_equal(m_theta(theta), m_theta(theta.inverse())));
        CHECK(algebras_equal(m_theta(theta), m_theta(-theta)));
    }
    CHECK_FALSE(algebras_equal(m_theta(GaussRational(2)), m_theta(GaussRational(1))));
}

TEST_CASE("center dimensions") {
    // Full Mat_2 has scalar center.
    SpannedAlgebra mat2 = close_algebra(mat2_units(), true);
    CHECK(mat2.dim() == 4);
    CHECK(center(mat2).dim() == 1);

    CHECK(center(m_theta(GaussRational(2))).dim() == 2);

    // theta = 1: the algebra is commutative, center is everything.
    SpannedAlgebra m1 = m_theta(GaussRational(1));
    Subspace c1 = center(m1);
    CHECK(c1.dim() == 4);
    CHECK(c1 == m1.span());
}

TEST_CASE("dickson radical") {
    SpannedAlgebra m2 = m_theta(GaussRational(2));
    CHECK(dickson_radical(m2).dim() == 0);
    // Oracle: the trace-form Gram matrix of the regular representation is
    // nonsingular exactly when the radical vanishes.
    StructureConstants sc = structure_constants(m2);
    CHECK(cofactor_determinant(sc.trace_form_gram()) != GaussRational(0));

    SpannedAlgebra mat2 = close_algebra(mat2_units(), true);
    CHECK(dickson_radical(mat2).dim() == 0);

    SpannedAlgebra a1 = atheta_regular_representation(GaussRational(1));
    Subspace rad = dickson_radical(a1);
    CHECK(rad.dim() == 4);
    CHECK(is_nilpotent_ideal(a1, rad));

    // Upper triangular 2x2 matrices: radical = strictly upper entries.
    ExactMatrix e11(2, 2), e12(2, 2), e22(2, 2);
    e11(0, 0) = GaussRational(1);
    e12(0, 1) = GaussRational(1);
    e22(1, 1) = GaussRational(1);
    SpannedAlgebra tri = close_algebra({e11, e12, e22}, true);
    CHECK(tri.dim() == 3);
    Subspace trad = dickson_radical(tri);
    CHECK(trad.dim() == 1);
    CHECK(trad.contains(e12.vectorize()));
}

TEST_CASE("nilpotent ideal checks") {
    SpannedAlgebra a1 = atheta_regular_representation(GaussRational(1));
    std::size_t nn = a1.ambient_n() * a1.ambient_n();

    CHECK(is_nilpotent_ideal(a1, Subspace(nn)));  // zero subspace

    // The ideal generated by g^2 - 1 in A_1, with basis (g^2-1){1, x, g, xg}.
    GaussRational one_theta(1);
    GroupAlgElement h = GroupAlgElement::from_word(g_word(2)) - GroupAlgElement::unit();
    std::vector<GroupAlgElement> mults = {
        GroupAlgElement::unit(), GroupAlgElement::from_word(x_word()),
        GroupAlgElement::from_word(g_word()),
        GroupAlgElement::from_word(x_word()) * GroupAlgElement::from_word(g_word())};
    std::vector<std::vector<GaussRational>> vecs;
    StructureConstants sc = structure_constants(a1);
    for (const auto& m : mults) {
        AThetaElement e = project_to_atheta(m * h, one_theta);
        // Coordinates of e in the regular representation span.
        std::vector<GaussRational> coords(e.coords().begin(), e.coords().end());
        ExactMatrix lm(8, 8);
        for (std::size_t j = 0; j < 8; ++j) {
            std::vector<GaussRational> ej(8);
            ej[j] = GaussRational(1);
            auto col = sc.mult(coords, ej);
            for (std::size_t k = 0; k < 8; ++k) lm(k, j) = col[k];
        }
        vecs.push_back(lm.vectorize());
    }
    Subspace j = Subspace::from_vectors(nn, vecs);
    CHECK(j.dim() == 4);
    CHECK(is_nilpotent_ideal(a1, j));

    // J^2 = 0: every pairwise product of ideal elements vanishes.
    for (const auto& va : j.basis())
        for (const auto& vb : j.basis())
            CHECK((ExactMatrix::from_vector(va, 8, 8) * ExactMatrix::from_vector(vb, 8, 8))
                      .is_zero());

    // Full Mat_2 inside Mat_2 is an ideal but not nilpotent.
    SpannedAlgebra mat2 = close_algebra(mat2_units(), true);
    CHECK_FALSE(is_nilpotent_ideal(mat2, mat2.span()));

    // A non-ideal subspace is rejected as false; a subspace outside throws.
    SpannedAlgebra m2 = m_theta(GaussRational(2));
    Subspace not_ideal =
        Subspace::from_vectors(16, {theta_generators(GaussRational(2)).x.vectorize()});
    CHECK_FALSE(is_nilpotent_ideal(m2, not_ideal));
    Subspace outside = Subspace::from_vectors(16, {ExactMatrix::from_vector(
        std::vector<GaussRational>(16, GaussRational(1)), 4, 4).vectorize()});
    CHECK_THROWS_AS(is_nilpotent_ideal(mat2, outside), std::invalid_argument);
}

TEST_CASE("radical output is always a nilpotent ideal with semisimple quotient") {
    for (const auto& theta : {GaussRational(2), GaussRational::i(), GaussRational(1),
                              GaussRational(-1), GaussRational(Rational(5, 3))}) {
        SpannedAlgebra a = atheta_regular_representation(theta);
        Subspace rad = dickson_radical(a);
        CHECK(is_nilpotent_ideal(a, rad));
        StructureConstants sc = structure_constants(a);
        StructureConstants q =
            rad.dim() == 0 ? sc : quotient_algebra(sc, kernel(sc.trace_form_gram()));
        CHECK(rank(q.trace_form_gram()) == q.dim);  // quotient trace form nondegenerate
    }
}

TEST_CASE("structure report for M_theta") {
    StructureReport r2 = structure_report(m_theta(GaussRational(2)));
    CHECK(r2.dim == 8);
    CHECK(r2.radical_dim == 0);
    CHECK(r2.center_dim == 2);
    CHECK(r2.semisimple_quotient_dim == 8);
    CHECK(r2.block_dims == std::vector<std::size_t>{4, 4});

    StructureReport r1 = structure_report(m_theta(GaussRational(1)));
    CHECK(r1.dim == 4);
    CHECK(r1.radical_dim == 0);
    CHECK(r1.center_dim == 4);
    CHECK(r1.block_dims == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("structure report for abstract A_theta") {
    StructureReport r2 = structure_report(atheta_regular_representation(GaussRational(2)));
    CHECK(r2.dim == 8);
    CHECK(r2.radical_dim == 0);
    CHECK(r2.block_dims == std::vector<std::size_t>{4, 4});

    StructureReport ri = structure_report(atheta_regular_representation(GaussRational::i()));
    CHECK(ri.dim == 8);
    CHECK(ri.radical_dim == 0);
    CHECK(ri.block_dims == std::vector<std::size_t>{4, 4});

    StructureReport r1 = structure_report(atheta_regular_representation(GaussRational(1)));
    CHECK(r1.dim == 8);
    CHECK(r1.radical_dim == 4);
    CHECK(r1.semisimple_quotient_dim == 4);
    CHECK(r1.block_dims == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(r1.notes.find("semisimple quotient is commutative") != std::string::npos);

    StructureReport rm1 = structure_report(atheta_regular_representation(GaussRational(-1)));
    CHECK(rm1.radical_dim == 4);
    CHECK(rm1.block_dims == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("structure report of full Mat_2") {
    StructureReport r = structure_report(close_algebra(mat2_units(), true));
    CHECK(r.dim == 4);
    CHECK(r.radical_dim == 0);
    CHECK(r.center_dim == 1);
    CHECK(r.block_dims == std::vector<std::size_t>{4});
    CHECK(r.notes.find("noncommutative") != std::string::npos);
}

TEST_CASE("report rejects algebras without identity") {
    ExactMatrix e12(2, 2);
    e12(0, 1) = GaussRational(1);
    SpannedAlgebra nil = close_algebra({e12}, false);
    CHECK_FALSE(nil.contains_identity());
    CHECK_THROWS_AS(structure_report(nil), std::invalid_argument);
    CHECK_THROWS_AS(dickson_radical(nil), std::invalid_argument);
}
