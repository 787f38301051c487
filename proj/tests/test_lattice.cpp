#include <catch2/catch.hpp>

#include <random>

#include "cubics/hassett.hpp"
#include "cubics/lattice.hpp"

using namespace cubics;

namespace {

IntegralLattice hyperbolic_plane() {
    return IntegralLattice(IntMat(2, 2, {Int(0), Int(1), Int(1), Int(0)}));
}

IntegralLattice a2_euler() {  // Euler pairing on <lambda_1, lambda_2>
    return IntegralLattice(IntMat(2, 2, {Int(-2), Int(1), Int(1), Int(-2)}));
}

IntMat random_matrix(std::mt19937& rng, long r, long c, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMat m(r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) m.at(i, j) = dist(rng);
    return m;
}

bool is_diagonal_of(const SmithResult& snf, const IntMat& m) {
    IntMat prod = mul(snf.U, mul(m, snf.V));
    for (long i = 0; i < prod.rows; ++i)
        for (long j = 0; j < prod.cols; ++j) {
            Int expect = (i == j && i < static_cast<long>(snf.diag.size())) ? snf.diag[i] : Int(0);
            if (prod.at(i, j) != expect) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("pairing evaluates u^T gram v") {
    IntegralLattice a2 = a2_euler();
    LatticeVector l1{1, 0};
    CHECK(pairing(a2, l1, l1) == -2);

    IntegralLattice u = hyperbolic_plane();
    LatticeVector e{1, 0}, f{0, 1};
    CHECK(pairing(u, e, f) == 1);

    IntegralLattice l3 = witness_lattice(2);
    LatticeVector w{-1, -1, 1}, diff{-1, 1, 0};
    CHECK(pairing(l3, w, diff) == 1);

    CHECK_THROWS_AS(pairing(u, LatticeVector{1}, f), std::invalid_argument);
}

TEST_CASE("gram determinants of the two witness families") {
    SECTION("saturation family gives 6n^2 + 6n + 2") {
        for (long n = 0; n <= 200; ++n) {
            IntMat g(3, 3,
                     {Int(-2), Int(1), Int(n),
                      Int(1), Int(-2), Int(n + 1),
                      Int(n), Int(n + 1), Int(0)});
            CHECK(gram_det(IntegralLattice(std::move(g))) == 6 * n * n + 6 * n + 2);
        }
    }
    SECTION("tau family gives 6k + 2") {
        for (long k = 0; k <= 200; ++k) {
            CHECK(gram_det(witness_lattice(k)) == 6 * k + 2);
        }
    }
    CHECK(gram_det(hyperbolic_plane()) == -1);
}

TEST_CASE("smith normal form on small examples") {
    SmithResult s = smith_normal_form(IntMat(2, 2, {Int(2), Int(0), Int(0), Int(6)}));
    CHECK(s.diag == std::vector<Int>{2, 6});

    s = smith_normal_form(IntMat(2, 2, {Int(-2), Int(1), Int(1), Int(-2)}));
    CHECK(s.diag == std::vector<Int>{1, 3});

    s = smith_normal_form(IntMat(2, 2, {Int(0), Int(1), Int(1), Int(0)}));
    CHECK(s.diag == std::vector<Int>{1, 1});
}

TEST_CASE("smith normal form transforms are unimodular and exact") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> dim(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
        long r = dim(rng), c = dim(rng);
        IntMat m = random_matrix(rng, r, c, -9, 9);
        SmithResult snf = smith_normal_form(m);
        Int du = det(snf.U), dv = det(snf.V);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        CHECK(is_diagonal_of(snf, m));
        for (size_t i = 0; i + 1 < snf.diag.size(); ++i) {
            CHECK(snf.diag[i] >= 0);
            if (snf.diag[i] != 0) CHECK(mod_floor(snf.diag[i + 1], snf.diag[i]) == 0);
            if (snf.diag[i] == 0) CHECK(snf.diag[i + 1] == 0);
        }
    }
}

TEST_CASE("discriminant groups") {
    CHECK(discriminant_group(IntegralLattice(IntMat(1, 1, {Int(-6)}))).name() == "Z/6");
    CHECK(discriminant_group(a2_euler()).divisors == std::vector<Int>{3});

    // Orthogonal complement of v = e + 3f in the hyperbolic plane: spanned by
    // e - 3f with self-pairing -6.
    OrthogonalComplement comp = orthogonal_complement(hyperbolic_plane(), {1, 3});
    REQUIRE(comp.lattice.rank() == 1);
    CHECK(comp.lattice.gram.at(0, 0) == -6);
    CHECK(discriminant_group(comp.lattice).name() == "Z/6");

    CHECK_THROWS_AS(discriminant_group(IntegralLattice(IntMat(1, 1, {Int(0)}))),
                    std::domain_error);
}

TEST_CASE("discriminant group order equals |det| on nondegenerate lattices") {
    std::mt19937 rng(7171);
    int done = 0;
    while (done < 200) {
        std::uniform_int_distribution<long> dim(1, 5);
        long r = dim(rng);
        IntMat m = random_matrix(rng, r, r, -6, 6);
        IntMat g = mul(transpose(m), m);  // symmetric
        for (long i = 0; i < r; ++i) g.at(i, i) += 1;
        IntegralLattice lat(g);
        Int d = gram_det(lat);
        if (d == 0) continue;
        ++done;
        CHECK(discriminant_group(lat).order() == abs(d));
    }
}

TEST_CASE("orthogonal complements") {
    IntegralLattice u = hyperbolic_plane();

    SECTION("v = e + 3f has v^2 = 6 and complement of discriminant -6") {
        LatticeVector v{1, 3};
        CHECK(pairing(u, v, v) == 6);
        OrthogonalComplement comp = orthogonal_complement(u, v);
        CHECK(comp.lattice.gram.at(0, 0) == -6);
        // The basis vector actually pairs to zero with v.
        LatticeVector b{comp.basis.at(0, 0), comp.basis.at(1, 0)};
        CHECK(pairing(u, b, v) == 0);
    }

    SECTION("v = e is isotropic; complement contains it") {
        OrthogonalComplement comp = orthogonal_complement(u, {1, 0});
        REQUIRE(comp.lattice.rank() == 1);
        CHECK(comp.lattice.gram.at(0, 0) == 0);
    }

    SECTION("rank-2 complement in the witness lattice") {
        IntegralLattice l3 = witness_lattice(2);
        LatticeVector v{-1, 1, 0};
        OrthogonalComplement comp = orthogonal_complement(l3, v);
        REQUIRE(comp.lattice.rank() == 2);
        for (long j = 0; j < 2; ++j) {
            LatticeVector b{comp.basis.at(0, j), comp.basis.at(1, j), comp.basis.at(2, j)};
            CHECK(pairing(l3, b, v) == 0);
        }
        // det multiplicativity: disc<v> * disc(v^perp) = disc(L) * index^2.
        Int lhs = pairing(l3, v, v) * gram_det(comp.lattice);
        Int rhs = gram_det(l3);
        CHECK(mod_floor(lhs, rhs) == 0);
        CHECK(is_square(div_exact(lhs, rhs)));
    }

    CHECK_THROWS_AS(orthogonal_complement(u, {0, 0}), std::invalid_argument);
}

TEST_CASE("sublattice discriminants and saturation indices") {
    SECTION("span of (lambda1, lambda2, w) for d = 14 is already saturated") {
        IntegralLattice l3 = witness_lattice(2);
        SublatticeInfo info = sublattice_disc(
            l3, {{1, 0, 0}, {0, 1, 0}, {-1, -1, 1}});
        CHECK(info.index == 1);
        CHECK(info.span_disc == info.saturation_disc);
        CHECK(info.index_relation_ok);
    }

    SECTION("single vector of norm 6") {
        SublatticeInfo info = sublattice_disc(hyperbolic_plane(), {{1, 3}});
        CHECK(info.span_disc == 6);
        CHECK(info.index_relation_ok);
    }

    SECTION("2Z inside Z with gram [[2]] has disc ratio 4") {
        IntegralLattice z(IntMat(1, 1, {Int(2)}));
        SublatticeInfo info = sublattice_disc(z, {{2}});
        CHECK(info.span_disc == 8);
        CHECK(info.index == 2);
        CHECK(info.saturation_disc == 2);
        CHECK(info.index_relation_ok);
    }

    CHECK_THROWS_AS(sublattice_disc(hyperbolic_plane(), {{1, 0}, {2, 0}}),
                    std::invalid_argument);
}

TEST_CASE("weight-2 convention negates the Euler pairing") {
    IntMat g(2, 2, {Int(-2), Int(1), Int(1), Int(-2)});
    IntegralLattice euler(g);
    IntegralLattice mukai(g, PairingConvention::weight2);
    LatticeVector l1{1, 0};
    CHECK(pairing(euler, l1, l1) == -2);
    CHECK(pairing(mukai, l1, l1) == 2);
    CHECK(discriminant_group(euler) == discriminant_group(mukai));
}

TEST_CASE("isotropic partner search") {
    SECTION("hyperbolic plane: w = e answers v = f") {
        IsotropicSearch s = find_isotropic_partner(hyperbolic_plane(), {0, 1}, 3);
        REQUIRE(s.found());
        CHECK(pairing(hyperbolic_plane(), s.w, s.w) == 0);
        CHECK(pairing(hyperbolic_plane(), s.w, {0, 1}) == 1);
    }

    SECTION("witness lattice at k = 2 finds the vector for d = 14") {
        IntegralLattice l3 = witness_lattice(2);
        LatticeVector diff{-1, 1, 0};
        IsotropicSearch s = find_isotropic_partner(l3, diff, 3);
        REQUIRE(s.found());
        CHECK(s.w == LatticeVector{-1, -1, 1});
        CHECK(pairing(l3, s.w, s.w) == 0);
        CHECK(pairing(l3, s.w, diff) == 1);
    }

    SECTION("definite lattices certify nonexistence") {
        IsotropicSearch s = find_isotropic_partner(a2_euler(), {1, 0}, 10);
        CHECK(s.outcome == IsotropicSearch::Outcome::definite);
    }
}
