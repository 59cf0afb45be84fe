#include <doctest.h>

#include <random>

#include "polymo/int_matrix.hpp"
#include "polymo/linear.hpp"
#include "polymo/rational.hpp"
#include "test_fans.hpp"

using namespace polymo;

TEST_CASE("rationals are stored canonically") {
    Rational q = rat_from_string("3/6");
    CHECK(q.get_num() == 1);
    CHECK(q.get_den() == 2);

    Rational z = rat(0, 7);
    CHECK(z.get_num() == 0);
    CHECK(z.get_den() == 1);

    Rational neg = rat_from_string("4/-6");
    CHECK(neg.get_num() == -2);
    CHECK(neg.get_den() == 3);
    CHECK(rat_to_string(neg) == "-2/3");
    CHECK(rat_to_string(rat(5)) == "5");

    CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic spot checks") {
    std::mt19937 rng(7001);
    for (int i = 0; i < 50; ++i) {
        Rational a = testing::random_rational(rng);
        Rational b = testing::random_rational(rng);
        Rational c = testing::random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        // canonical storage after arithmetic
        Rational s = a + b;
        CHECK(gcd(mpz_class(s.get_num()), mpz_class(s.get_den())) == 1);
        CHECK(s.get_den() > 0);
    }
}

namespace {

bool is_diagonal_with_chain(const IntMatrix& d) {
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (i != j && d.at(i, j) != 0) return false;
    int m = std::min(d.rows(), d.cols());
    for (int i = 0; i + 1 < m; ++i) {
        if (d.at(i, i) < 0) return false;
        if (d.at(i + 1, i + 1) != 0 && d.at(i, i) == 0) return false;
        if (d.at(i, i) != 0 && d.at(i + 1, i + 1) % d.at(i, i) != 0) return false;
    }
    return true;
}

void check_snf(const IntMatrix& a) {
    SmithNormalForm snf = smith_normal_form(a);
    CHECK(snf.U * a * snf.V == snf.D);
    CHECK(is_diagonal_with_chain(snf.D));
    CHECK(abs(snf.U.det()) == 1);
    CHECK(abs(snf.V.det()) == 1);
}

}  // namespace

TEST_CASE("smith normal form: identity") {
    IntMatrix id = IntMatrix::identity(3);
    SmithNormalForm snf = smith_normal_form(id);
    CHECK(snf.D == id);
    check_snf(id);
}

TEST_CASE("smith normal form: diag(4,6) -> diag(2,12)") {
    IntMatrix a = IntMatrix::from_rows({{4, 0}, {0, 6}});
    SmithNormalForm snf = smith_normal_form(a);
    CHECK(snf.D.at(0, 0) == 2);
    CHECK(snf.D.at(1, 1) == 12);
    check_snf(a);
}

TEST_CASE("smith normal form: P^2 ray matrix has invariant factors (1,1)") {
    IntMatrix a = IntMatrix::from_rows({{1, 0}, {0, 1}, {-1, -1}});
    SmithNormalForm snf = smith_normal_form(a);
    CHECK(snf.D.at(0, 0) == 1);
    CHECK(snf.D.at(1, 1) == 1);
    check_snf(a);  // cokernel rank = 3 - 2 = 1
}

TEST_CASE("smith normal form: random recomposition property") {
    std::mt19937 rng(7002);
    std::uniform_int_distribution<int> entry(-6, 6);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix a(dim(rng), dim(rng));
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);
        check_snf(a);
    }
}

TEST_CASE("hermite row form canonicalizes a GL_r(Z) orbit") {
    // two bases of the same row lattice
    IntMatrix a = IntMatrix::from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}});
    IntMatrix b = IntMatrix::from_rows({{1, 1, 1, 1}, {3, 2, 3, 2}});
    CHECK(hermite_row_form(a) == hermite_row_form(b));
    CHECK(hermite_row_form(a) == a);
}

TEST_CASE("solve_linear: identity system") {
    QMatrix a = QMatrix::identity(3);
    QVector b = {rat(2), rat(-1), rat(5, 3)};
    LinearSolution sol = solve_linear(a, b);
    CHECK(sol.consistent);
    CHECK(sol.particular == b);
    CHECK(sol.kernel.empty());
}

TEST_CASE("solve_linear: underdetermined row") {
    QMatrix a(1, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    LinearSolution sol = solve_linear(a, {rat(1)});
    CHECK(sol.consistent);
    CHECK(sol.particular == QVector{rat(1), rat(0)});
    REQUIRE(sol.kernel.size() == 1);
    CHECK(sol.kernel[0][0] == -sol.kernel[0][1]);
}

TEST_CASE("solve_linear: inconsistency reported") {
    QMatrix a(2, 1);
    a.at(0, 0) = 1;
    a.at(1, 0) = 1;
    LinearSolution sol = solve_linear(a, {rat(1), rat(2)});
    CHECK_FALSE(sol.consistent);
}

TEST_CASE("solve_linear: random 5x5 invertible systems solve exactly") {
    std::mt19937 rng(7004);
    int solved = 0;
    while (solved < 10) {
        QMatrix a(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) a.at(i, j) = testing::random_rational(rng);
        QVector b;
        for (int i = 0; i < 5; ++i) b.push_back(testing::random_rational(rng));
        LinearSolution sol = solve_linear(a, b);
        if (sol.rank != 5) continue;  // singular draw, try again
        REQUIRE(sol.consistent);
        CHECK(sol.kernel.empty());
        CHECK(a.apply(sol.particular) == b);
        ++solved;
    }
}

TEST_CASE("solve_linear: random systems recompose exactly") {
    std::mt19937 rng(7003);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> dim(1, 5);
        int m = dim(rng), n = dim(rng);
        QMatrix a(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = testing::random_rational(rng);
        QVector b;
        for (int i = 0; i < m; ++i) b.push_back(testing::random_rational(rng));
        LinearSolution sol = solve_linear(a, b);
        if (sol.consistent) CHECK(a.apply(sol.particular) == b);
        for (const auto& k : sol.kernel) CHECK(a.apply(k) == QVector(m, Rational(0)));
        CHECK(int(sol.kernel.size()) == n - sol.rank);
    }
}

TEST_CASE("sparse row reducer computes rank and normal forms") {
    SparseRowReducer red;
    CHECK(red.insert(SparseVec{{0, rat(1)}, {1, rat(1)}}));
    CHECK(red.insert(SparseVec{{1, rat(2)}}));
    CHECK_FALSE(red.insert(SparseVec{{0, rat(3)}, {1, rat(-4)}}));  // dependent
    CHECK(red.rank() == 2);
    SparseVec nf = red.reduce(SparseVec{{0, rat(5)}, {2, rat(1)}});
    CHECK(nf == SparseVec{{2, rat(1)}});
}
