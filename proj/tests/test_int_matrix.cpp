#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "defex/int_matrix.hpp"

using namespace defex;

namespace {

// Independent oracle: invariant factors via gcds of k x k minors.
// d_1 * ... * d_k = gcd of all k x k minors. Only usable on small shapes.
Int minor_det(const IntMatrix& m, const std::vector<std::size_t>& ri,
              const std::vector<std::size_t>& ci) {
    std::size_t n = ri.size();
    if (n == 0) return 1;
    if (n == 1) return m(ri[0], ci[0]);
    Int det = 0;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::size_t> sub_ri(ri.begin() + 1, ri.end());
        std::vector<std::size_t> sub_ci;
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) sub_ci.push_back(ci[j]);
        det += sign * m(ri[0], ci[k]) * minor_det(m, sub_ri, sub_ci);
        sign = -sign;
    }
    return det;
}

void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur(k);
    auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= n; ++i) {
            cur[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
}

std::vector<Int> invariant_factors_by_minors(const IntMatrix& m) {
    std::size_t nmin = std::min(m.rows(), m.cols());
    std::vector<Int> dk(nmin + 1);
    dk[0] = 1;
    std::vector<Int> out;
    for (std::size_t k = 1; k <= nmin; ++k) {
        std::vector<std::vector<std::size_t>> ris, cis;
        subsets_of_size(m.rows(), k, ris);
        subsets_of_size(m.cols(), k, cis);
        Int g = 0;
        for (const auto& ri : ris)
            for (const auto& ci : cis) g = gcd(g, minor_det(m, ri, ci));
        dk[k] = g;
        if (g == 0) break;
        out.push_back(dk[k] / dk[k - 1]);
    }
    return out;  // nonzero invariant factors only
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    if (m.rows() == 0) return true;
    std::vector<std::size_t> all(m.rows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    Int det = minor_det(m, all, all);
    return det == 1 || det == -1;
}

void check_snf_contract(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK((s.u * s.u_inv).is_identity());
    CHECK((s.v * s.v_inv).is_identity());
    // diagonal with divisibility chain, zeros last
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d(i, j) == 0);
    auto diag = s.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i] == 0)
            CHECK(diag[i + 1] == 0);
        else
            CHECK(diag[i + 1] % diag[i] == 0);
    }
}

}  // namespace

TEST_CASE("snf identity and zero") {
    IntMatrix i2 = IntMatrix::identity(2);
    SmithDecomposition s = smith_normal_form(i2);
    CHECK(s.d == i2);
    CHECK(s.u.is_identity());
    CHECK(s.v.is_identity());

    IntMatrix z = IntMatrix::zero(2, 2);
    SmithDecomposition sz = smith_normal_form(z);
    CHECK(sz.d.is_zero());
    CHECK(sz.rank == 0);
}

TEST_CASE("snf of [[2,4],[6,8]] matches minor-gcd oracle") {
    IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
    SmithDecomposition s = smith_normal_form(m);
    // frozen from the oracle: gcd of entries = 2, |det| = 8 -> diag(2, 4)
    CHECK(s.d(0, 0) == 2);
    CHECK(s.d(1, 1) == 4);
    auto oracle = invariant_factors_by_minors(m);
    REQUIRE(oracle.size() == 2);
    CHECK(oracle[0] == 2);
    CHECK(oracle[1] == 4);
    check_snf_contract(m);
}

TEST_CASE("snf on empty shapes") {
    check_snf_contract(IntMatrix::zero(0, 3));
    check_snf_contract(IntMatrix::zero(3, 0));
    check_snf_contract(IntMatrix::zero(0, 0));
    CHECK(kernel_basis(IntMatrix::zero(0, 3)).is_identity());
}

TEST_CASE("snf random contract + oracle agreement") {
    std::mt19937_64 rng(20240901);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(0, 4);
        IntMatrix m = random_matrix(rng, dim(rng), dim(rng), -9, 9);
        check_snf_contract(m);
        SmithDecomposition s = smith_normal_form(m);
        std::vector<Int> nonzero;
        for (const auto& d : s.diagonal())
            if (d != 0) nonzero.push_back(d);
        CHECK(nonzero == invariant_factors_by_minors(m));
    }
}

TEST_CASE("snf determinism") {
    std::mt19937_64 rng(7);
    IntMatrix m = random_matrix(rng, 4, 3, -20, 20);
    SmithDecomposition a = smith_normal_form(m);
    SmithDecomposition b = smith_normal_form(m);
    CHECK(a.u == b.u);
    CHECK(a.d == b.d);
    CHECK(a.v == b.v);
}

TEST_CASE("unimodularity of transforms") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m = random_matrix(rng, 3, 3, -6, 6);
        SmithDecomposition s = smith_normal_form(m);
        CHECK(is_unimodular(s.u));
        CHECK(is_unimodular(s.v));
    }
}

TEST_CASE("solve_integer basics") {
    IntMatrix i3 = IntMatrix::identity(3);
    IntMatrix b = IntMatrix::from_rows({{5}, {-2}, {0}});
    auto x = solve_integer(i3, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    IntMatrix two = IntMatrix::from_rows({{2}});
    CHECK(solve_integer(two, IntMatrix::from_rows({{4}})).value() ==
          IntMatrix::from_rows({{2}}));
    CHECK_FALSE(solve_integer(two, IntMatrix::from_rows({{3}})).has_value());

    CHECK_THROWS_AS(solve_integer(two, IntMatrix::zero(2, 1)), std::invalid_argument);
}

TEST_CASE("solve_integer random: solutions verify, rejections are honest") {
    std::mt19937_64 rng(4242);
    int solved = 0, rejected = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 3);
        std::size_t r = dim(rng), c = dim(rng);
        IntMatrix m = random_matrix(rng, r, c, -4, 4);
        IntMatrix b = random_matrix(rng, r, 1, -6, 6);
        auto x = solve_integer(m, b);
        if (x.has_value()) {
            ++solved;
            CHECK(m * *x == b);
        } else {
            ++rejected;
            // brute-force search in a Hadamard-style box: no solution may exist
            long bound = 40;
            std::vector<long> v(c, -bound);
            bool found = false;
            for (;;) {
                IntMatrix xx(c, 1);
                for (std::size_t i = 0; i < c; ++i) xx(i, 0) = v[i];
                if (m * xx == b) {
                    found = true;
                    break;
                }
                std::size_t i = 0;
                while (i < c && v[i] == bound) v[i++] = -bound;
                if (i == c) break;
                ++v[i];
            }
            CHECK_FALSE(found);
        }
    }
    CHECK(solved > 0);
    CHECK(rejected > 0);
}

TEST_CASE("kernel_basis examples") {
    // M = [1, 1] -> kernel spanned by (1, -1)
    IntMatrix m = IntMatrix::from_rows({{1, 1}});
    IntMatrix k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
    IntMatrix target = IntMatrix::from_rows({{1}, {-1}});
    auto coeff = solve_integer(k, target);
    REQUIRE(coeff.has_value());  // (1,-1) lies in the lattice spanned by k

    CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0);
    CHECK(kernel_basis(IntMatrix::zero(2, 4)).is_identity());
}

TEST_CASE("kernel_basis random: M*K = 0 and lattice is saturated") {
    std::mt19937_64 rng(31415);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(0, 4);
        IntMatrix m = random_matrix(rng, dim(rng), dim(rng), -7, 7);
        IntMatrix k = kernel_basis(m);
        CHECK((m * k).is_zero());
        // saturation: invariant factors of the basis matrix are all 1
        SmithDecomposition s = smith_normal_form(k);
        CHECK(s.rank == k.cols());
        for (const auto& d : s.diagonal())
            CHECK((d == 0 || d == 1));
        // rank bookkeeping: dim ker + rank = #cols
        CHECK(k.cols() + smith_normal_form(m).rank == m.cols());
    }
}
