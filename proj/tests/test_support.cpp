#include <doctest.h>

#include "support/digest.hpp"
#include "support/intmat.hpp"
#include "support/prng.hpp"
#include "support/rational.hpp"

using namespace morse;

TEST_CASE("rational arithmetic stays normalized") {
    Rational a(2, 4), b(-1, 3);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    CHECK((a + b).str() == "1/6");
    CHECK((a * b).str() == "-1/6");
    CHECK((a - a).str() == "0");
    CHECK((a / b).str() == "-3/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational::parse("-7/14") == Rational(-1, 2));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("sha256 known vectors") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("prng is deterministic") {
    Prng a(7), b(7);
    for (int i = 0; i < 100; ++i)
        CHECK(a.next() == b.next());
    Prng c(7);
    for (int i = 0; i < 100; ++i) {
        auto v = c.below(10);
        CHECK(v < 10);
    }
}

TEST_CASE("smith normal form with transforms") {
    IntMat a(3, 3);
    long long vals[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            a.at(i, j) = vals[i][j];
    SmithForm s = smith_normal_form(a);
    CHECK(s.rank == 3);
    CHECK(s.diag == std::vector<long long>{2, 2, 156});
    // u*a*v == d and the tracked inverses really invert
    CHECK(s.u.mul(a).mul(s.v) == s.d);
    CHECK(s.u.mul(s.u_inv) == IntMat::identity(3));
    CHECK(s.v.mul(s.v_inv) == IntMat::identity(3));
    for (long long x : s.diag)
        CHECK(x > 0);
    // divisibility chain
    for (size_t i = 1; i < s.diag.size(); ++i)
        CHECK(s.diag[i] % s.diag[i - 1] == 0);
}

TEST_CASE("smith normal form of rank-deficient matrix") {
    IntMat a(2, 3);
    a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(0, 2) = 3;
    a.at(1, 0) = 2; a.at(1, 1) = 4; a.at(1, 2) = 6;
    SmithForm s = smith_normal_form(a);
    CHECK(s.rank == 1);
    CHECK(s.u.mul(a).mul(s.v) == s.d);
}

TEST_CASE("determinant") {
    IntMat a(2, 2);
    a.at(0, 0) = 3; a.at(0, 1) = 7;
    a.at(1, 0) = 1; a.at(1, 1) = 4;
    CHECK(a.det() == 5);
    CHECK(IntMat::identity(4).det() == 1);
    IntMat z(3, 3);
    CHECK(z.det() == 0);
}
