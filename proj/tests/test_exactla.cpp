#include <doctest.h>

#include <random>

#include "spinconf/exactla.hpp"
#include "test_oracles.hpp"

using namespace spinconf::exactla;

namespace {

ExactScalar rnd_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return ExactScalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

ExactMatrix rnd_matrix(std::mt19937& rng, int dim) {
    ExactMatrix m(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m.at(r, c) = rnd_scalar(rng);
    return m;
}

}  // namespace

TEST_CASE("rational parsing keeps the canonical form") {
    Rational q = parse_rational("-6/4");
    CHECK(rational_str(q) == "-3/2");
    CHECK(parse_rational("5") == Rational(5));
    CHECK_THROWS(parse_rational("x/y"));
}

TEST_CASE("exact scalar arithmetic is exact") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        ExactScalar a = rnd_scalar(rng), b = rnd_scalar(rng);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("commutator basics") {
    std::mt19937 rng(5);
    ExactMatrix a = rnd_matrix(rng, 3);
    CHECK(commutator(a, a).is_zero());

    // 2x2 hand check: [diag(1,2), offdiag]
    ExactMatrix d(2), o(2);
    d.at(0, 0) = ExactScalar(1);
    d.at(1, 1) = ExactScalar(2);
    o.at(0, 1) = ExactScalar(1);
    o.at(1, 0) = ExactScalar(1);
    ExactMatrix c = commutator(d, o);
    CHECK(c.at(0, 1) == ExactScalar(-1));
    CHECK(c.at(1, 0) == ExactScalar(1));
    CHECK(c.at(0, 0).is_zero());

    CHECK_THROWS(commutator(rnd_matrix(rng, 2), rnd_matrix(rng, 3)));
}

TEST_CASE("anticommutator basics") {
    std::mt19937 rng(6);
    ExactMatrix a = rnd_matrix(rng, 3);
    CHECK(anticommutator(a, a) == a * a + a * a);
    ExactMatrix z(3);
    CHECK(anticommutator(z, a).is_zero());
}

TEST_CASE("gamma matrices: Clifford relations and products") {
    auto gam = test_oracles::gamma_basis();
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            ExactMatrix ac = anticommutator(gam[mu], gam[nu]);
            long g = (mu == nu) ? (mu == 0 ? -2 : 2) : 0;
            CHECK(ac == ExactScalar(g) * ExactMatrix::identity(4));
        }
    // gamma0, gamma1 anticommute, so [g0, g1] = 2 g0 g1 (direct multiplication oracle)
    CHECK(commutator(gam[0], gam[1]) == ExactScalar(2) * (gam[0] * gam[1]));
}

TEST_CASE("trace identities") {
    std::mt19937 rng(7);
    for (int t = 0; t < 25; ++t) {
        ExactMatrix a = rnd_matrix(rng, 4), b = rnd_matrix(rng, 4);
        CHECK((a * b).trace() == (b * a).trace());
        CHECK(commutator(a, b).trace().is_zero());
    }
    CHECK(ExactMatrix::zero(3).trace().is_zero());
}

TEST_CASE("Jacobi identity holds exactly for random matrices") {
    std::mt19937 rng(8);
    for (int t = 0; t < 10; ++t) {
        ExactMatrix a = rnd_matrix(rng, 3), b = rnd_matrix(rng, 3), c = rnd_matrix(rng, 3);
        ExactMatrix j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                        commutator(c, commutator(a, b));
        CHECK(j.is_zero());
    }
}

TEST_CASE("minimal polynomial: identity matrix gives x - 1") {
    ExactPolynomial p = minimal_polynomial(ExactMatrix::identity(5));
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == ExactScalar(-1));
    CHECK(p.coeff(1) == ExactScalar(1));
}

TEST_CASE("minimal polynomial: zero and nilpotent") {
    CHECK(minimal_polynomial(ExactMatrix::zero(3)).degree() == 1);
    ExactMatrix nil(3);
    nil.at(0, 1) = ExactScalar(1);
    nil.at(1, 2) = ExactScalar(1);
    CHECK(minimal_polynomial(nil).degree() == 3);  // x^3
}

TEST_CASE("minimal polynomial divides the characteristic polynomial") {
    std::mt19937 rng(9);
    for (int dim : {2, 3, 4, 6, 20}) {
        ExactMatrix m = rnd_matrix(rng, dim);
        if (dim == 20) {  // keep dim-20 entries small integers for speed
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c)
                    m.at(r, c) = ExactScalar((r * 7 + c * 3) % 5 - 2);
        }
        ExactPolynomial mp = minimal_polynomial(m);
        ExactPolynomial cp = test_oracles::characteristic_polynomial(m);
        CHECK(test_oracles::divides(mp, cp));
    }
}

TEST_CASE("synthetic division") {
    // (x^2 - 1/4) / (x - 1/2) = x + 1/2
    ExactPolynomial p({ExactScalar::of(-1, 4), ExactScalar(0), ExactScalar(1)});
    ExactPolynomial q = synthetic_divide(p, ExactScalar::of(1, 2));
    CHECK(q.degree() == 1);
    CHECK(q.coeff(0) == ExactScalar::of(1, 2));
    CHECK(q.coeff(1) == ExactScalar(1));

    CHECK_THROWS(synthetic_divide(p, ExactScalar(3)));
}

TEST_CASE("synthetic divide then multiply-back round trip") {
    std::mt19937 rng(10);
    for (int t = 0; t < 20; ++t) {
        std::vector<ExactScalar> roots;
        for (int k = 0; k < 4; ++k) roots.push_back(rnd_scalar(rng));
        ExactPolynomial p = ExactPolynomial::from_roots(roots);
        ExactPolynomial q = synthetic_divide(p, roots[0]);
        ExactPolynomial back = q * ExactPolynomial({-roots[0], ExactScalar(1)});
        CHECK(back == p);
    }
}

TEST_CASE("eval_poly") {
    ExactMatrix m(2);
    m.at(0, 0) = ExactScalar(2);
    m.at(1, 1) = ExactScalar(3);
    // p(x) = x^2 - 5x + 6 annihilates diag(2,3)
    ExactPolynomial p({ExactScalar(6), ExactScalar(-5), ExactScalar(1)});
    CHECK(eval_poly(p, m).is_zero());
}

TEST_CASE("rank via fraction-free elimination") {
    ExactMatrix m(3);
    m.at(0, 0) = ExactScalar::of(1, 2);
    m.at(0, 1) = ExactScalar(1);
    m.at(1, 0) = ExactScalar(1);
    m.at(1, 1) = ExactScalar(2);  // row 2 = 2 * row 1
    CHECK(rank(m) == 1);
    CHECK(rank(ExactMatrix::identity(4)) == 4);
    CHECK(rank(ExactMatrix::zero(3)) == 0);

    std::mt19937 rng(12);
    for (int t = 0; t < 10; ++t) {
        ExactMatrix a = rnd_matrix(rng, 4);
        CHECK(rank(a * a) <= rank(a));
    }
}

TEST_CASE("linear solve over the column span") {
    std::mt19937 rng(13);
    std::vector<ExactVector> cols;
    for (int k = 0; k < 3; ++k) {
        ExactVector v(5);
        for (auto& x : v) x = rnd_scalar(rng);
        cols.push_back(v);
    }
    ExactVector target(5);
    for (int r = 0; r < 5; ++r)
        target[r] = cols[0][r] + ExactScalar(2) * cols[1][r] - ExactScalar::of(1, 3) * cols[2][r];
    LinearSolve ls = solve_columns(cols, target);
    REQUIRE(ls.consistent);
    CHECK(ls.nullspace.empty());
    CHECK(ls.particular[0] == ExactScalar(1));
    CHECK(ls.particular[1] == ExactScalar(2));
    CHECK(ls.particular[2] == ExactScalar::of(-1, 3));

    ExactVector off(5);
    off[0] = ExactScalar(1);
    // generically outside a 3-dim span of random columns
    LinearSolve bad = solve_columns(cols, off);
    CHECK_FALSE(bad.consistent);
}

TEST_CASE("serialization round trip") {
    ExactScalar s(Rational(-3, 7), Rational(22, 5));
    auto [re, im] = scalar_strings(s);
    CHECK(re == "-3/7");
    CHECK(im == "22/5");
    CHECK(scalar_from_strings(re, im) == s);
}
