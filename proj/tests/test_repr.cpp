#include "opgraph/repr.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace opgraph;

TEST_CASE("character parsing and inversion") {
    PCharacter chi = PCharacter::parse("2,+1");
    CHECK(chi.g_val == GaussRational(2));
    CHECK(chi.z_val == 1);
    CHECK(chi.inverse() == PCharacter(GaussRational(Rational(1, 2)), 1));
    CHECK(PCharacter::parse("-1/2,-1").to_string() == "-1/2,-1");

    CCharacter c = project_to_center_character(chi);
    CHECK(c.u_val == GaussRational(Rational(5, 2)));
    CHECK(c.z_val == 1);

    CHECK_THROWS_AS(PCharacter(GaussRational(0), 1), std::invalid_argument);
    CHECK_THROWS_AS(PCharacter(GaussRational(2), 2), std::invalid_argument);
    CHECK_THROWS_AS(PCharacter::parse("2"), std::invalid_argument);
}

TEST_CASE("representation constructor enforces the relations") {
    // A swap for x with a non-symmetric g violates xgx = g^-1.
    ExactMatrix x(2, 2), z = ExactMatrix::identity(2), g(2, 2);
    x(0, 1) = GaussRational(1);
    x(1, 0) = GaussRational(1);
    g(0, 0) = GaussRational(2);
    g(1, 1) = GaussRational(3);
    CHECK_THROWS_AS(MatrixRepresentation(x, z, g), std::invalid_argument);
    ExactMatrix notinv(2, 2);
    CHECK_THROWS_AS(MatrixRepresentation(notinv, z, ExactMatrix::identity(2)),
                    std::invalid_argument);
}

TEST_CASE("induced modules") {
    PCharacter chi(GaussRational(2), 1);
    MatrixRepresentation w = induced_module(chi);
    CHECK(w.image_g()(0, 0) == GaussRational(2));
    CHECK(w.image_g()(1, 1) == GaussRational(Rational(1, 2)));
    CHECK(is_irreducible(w));

    // chi(g) = 1 gives g -> I, which is reducible (splits into x-eigenlines).
    MatrixRepresentation t = induced_module(PCharacter(GaussRational(1), 1));
    CHECK(t.image_g() == ExactMatrix::identity(2));
    CHECK_FALSE(is_irreducible(t));
    CHECK(commutant_dimension(t) == 2);

    // W_chi and W_{chi^-1} are equivalent via the swap intertwiner.
    MatrixRepresentation winv = induced_module(chi.inverse());
    ExactMatrix s(2, 2);
    s(0, 1) = GaussRational(1);
    s(1, 0) = GaussRational(1);
    CHECK(s * w.image_g() == winv.image_g() * s);
    CHECK(s * w.image_x() == winv.image_x() * s);
    CHECK(s * w.image_z() == winv.image_z() * s);

    // No proper invariant subspace when chi(g) != +-1: no eigenvector of g
    // is preserved by x up to scale (the g-eigenlines are the axes).
    std::vector<GaussRational> e0 = {GaussRational(1), GaussRational(0)};
    std::vector<GaussRational> xe0 = w.image_x().apply(e0);
    CHECK(Subspace::from_vectors(2, {e0, xe0}).dim() == 2);
}

TEST_CASE("generalized eigenspaces V_chi(k)") {
    GaussRational theta(2);
    MatrixRepresentation rep = phi_representation(theta);

    CHECK(v_chi_k(rep, PCharacter(GaussRational(2), 1), 1).dim() == 1);
    CHECK(v_chi_k(rep, PCharacter(GaussRational(5), 1), 1).dim() == 0);
    CHECK_THROWS_AS(v_chi_k(rep, PCharacter(GaussRational(2), 1), 0), std::invalid_argument);

    // Monotone in k.
    for (unsigned k = 1; k < 4; ++k) {
        Subspace a = v_chi_k(rep, PCharacter(GaussRational(2), 1), k);
        Subspace b = v_chi_k(rep, PCharacter(GaussRational(2), 1), k + 1);
        CHECK(b.contains(a));
    }
}

TEST_CASE("conjugation symmetry of V_chi(k) on random induced sums") {
    std::mt19937_64 rng(606);
    std::vector<PCharacter> grid = default_character_grid();
    std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
    for (int trial = 0; trial < 12; ++trial) {
        MatrixRepresentation rep = MatrixRepresentation::direct_sum(
            induced_module(grid[pick(rng)]), induced_module(grid[pick(rng)]));
        if (trial % 2 == 0)
            rep = rep.conjugate(testsupport::random_invertible(rng, rep.dim()));
        for (const auto& chi : grid)
            for (unsigned k = 1; k <= 3; ++k)
                CHECK(v_chi_k(rep, chi, k).dim() == v_chi_k(rep, chi.inverse(), k).dim());
    }
}

TEST_CASE("char_set of phi and of induced modules") {
    GaussRational theta(2);
    std::vector<PCharacter> candidates = {
        PCharacter(GaussRational(2), 1),  PCharacter(GaussRational(Rational(1, 2)), 1),
        PCharacter(GaussRational(-2), -1), PCharacter(GaussRational(Rational(-1, 2)), -1),
        PCharacter(GaussRational(3), 1)};
    std::vector<PCharacter> cs = char_set(phi_representation(theta), candidates);
    REQUIRE(cs.size() == 4);
    CHECK(cs[0] == candidates[0]);
    CHECK(cs[1] == candidates[1]);
    CHECK(cs[2] == candidates[2]);
    CHECK(cs[3] == candidates[3]);

    // Char(W_chi) = {chi, chi^-1}.
    PCharacter chi(GaussRational(2), 1);
    std::vector<PCharacter> ind = char_set(
        induced_module(chi), {chi, chi.inverse(), PCharacter(GaussRational(3), 1)});
    REQUIRE(ind.size() == 2);
    CHECK(ind[0] == chi);
    CHECK(ind[1] == chi.inverse());

    // Trivial one-dimensional representation.
    MatrixRepresentation triv(ExactMatrix::identity(1), ExactMatrix::identity(1),
                              ExactMatrix::identity(1));
    std::vector<PCharacter> tcs = char_set(triv, {PCharacter(GaussRational(1), 1)});
    REQUIRE(tcs.size() == 1);
    CHECK(tcs[0] == PCharacter(GaussRational(1), 1));

    // Uncovered eigenvalue is reported.
    CHECK_THROWS_AS(char_set(phi_representation(theta), {PCharacter(GaussRational(2), 1)}),
                    std::domain_error);
}

TEST_CASE("commutant dimension distinguishes the degenerate parameters") {
    for (const auto& theta :
         {GaussRational(2), GaussRational(3), GaussRational(Rational(1, 2)),
          GaussRational(Rational(5, 3)), GaussRational::i(),
          GaussRational(Rational(1), Rational(1))})
        CHECK(commutant_dimension(phi_representation(theta)) == 2);
    CHECK(commutant_dimension(phi_representation(GaussRational(1))) == 4);
    CHECK(commutant_dimension(phi_representation(GaussRational(-1))) == 4);
}

TEST_CASE("exact block decomposition of phi") {
    for (const auto& theta :
         {GaussRational(2), GaussRational::i(), GaussRational(Rational(1), Rational(1))}) {
        PhiDecomposition dec = decompose_phi(theta);
        CHECK(dec.chi1 == PCharacter(theta, 1));
        CHECK(dec.chi2 == PCharacter(-theta, -1));
        // Re-verify the certificate independently here.
        MatrixRepresentation rep = phi_representation(theta);
        ExactMatrix ti = inverse(dec.transform);
        MatrixRepresentation w1 = induced_module(dec.chi1), w2 = induced_module(dec.chi2);
        CHECK(ti * rep.image_g() * dec.transform ==
              block_diagonal(w1.image_g(), w2.image_g()));
        CHECK(ti * rep.image_x() * dec.transform ==
              block_diagonal(w1.image_x(), w2.image_x()));
        CHECK(ti * rep.image_z() * dec.transform ==
              block_diagonal(w1.image_z(), w2.image_z()));
    }
    CHECK_THROWS_AS(decompose_phi(GaussRational(1)), std::domain_error);
    CHECK_THROWS_AS(decompose_phi(GaussRational(0)), std::domain_error);
}

TEST_CASE("conjugated XY reproduces the diagonal model") {
    // In the decomposition basis, XY = diag(theta, 1/theta, -theta, -1/theta)
    // and Z = diag(1, 1, -1, -1) -- the proof's display up to block order.
    GaussRational theta(2);
    PhiDecomposition dec = decompose_phi(theta);
    MatrixRepresentation rep = phi_representation(theta);
    ExactMatrix d = inverse(dec.transform) * rep.image_g() * dec.transform;
    CHECK(d == ExactMatrix::diagonal({theta, theta.inverse(), -theta, -theta.inverse()}));
    ExactMatrix z = inverse(dec.transform) * rep.image_z() * dec.transform;
    CHECK(z == ExactMatrix::diagonal({GaussRational(1), GaussRational(1), GaussRational(-1),
                                      GaussRational(-1)}));
}

TEST_CASE("klein decomposition at theta = +-1") {
    for (const auto& theta : {GaussRational(1), GaussRational(-1)}) {
        std::vector<KleinLine> lines = klein_decompose(theta);
        REQUIRE(lines.size() == 4);
        std::set<std::pair<int, int>> patterns;
        for (const auto& l : lines) {
            patterns.insert({l.x_sign, l.y_sign});
            CHECK(l.z_sign == l.x_sign * l.y_sign);
        }
        CHECK(patterns.size() == 4);  // each pattern with multiplicity one
    }
    CHECK_THROWS_AS(klein_decompose(GaussRational(2)), std::domain_error);
}

TEST_CASE("Mat2 certificates for A_theta") {
    for (const auto& theta :
         {GaussRational(2), GaussRational(3), GaussRational(Rational(1, 2)),
          GaussRational(Rational(5, 3)), GaussRational::i(),
          GaussRational(Rational(1), Rational(1))}) {
        Mat2Certificate cert = atheta_mat2_certificate(theta);
        CHECK(cert.homomorphism);
        CHECK(cert.descends);
        CHECK(cert.rank == 8);
        CHECK(cert.is_isomorphism());
    }
    CHECK_THROWS_AS(atheta_mat2_certificate(GaussRational(1)), std::domain_error);
}
