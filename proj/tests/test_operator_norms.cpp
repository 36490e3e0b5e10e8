#include <catch2/catch_amalgamated.hpp>

#include <nclab/operator_norms.hpp>
#include <nclab/rng.hpp>

#include <cmath>

using namespace nclab;

TEST_CASE("pnorm bracket: identity and scalar multiples") {
    VnAlgebra alg = VnAlgebra::diagonal(6, 0.8);
    Matrix id = Matrix::Identity(6, 6);
    for (double p : {1.0, 1.7, 2.0, 4.0, kInf}) {
        PnormBracket b = operator_pnorm_bracket(alg, id, p, 5);
        CHECK(b.lower == Catch::Approx(1.0).epsilon(1e-10));
        CHECK(b.upper == Catch::Approx(1.0).epsilon(1e-10));
    }
    PnormBracket b2 = operator_pnorm_bracket(alg, 2.0 * id, 1.7, 5);
    CHECK(b2.lower == Catch::Approx(2.0).epsilon(1e-10));
    CHECK(b2.upper == Catch::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("pnorm bracket: circulant at p=4 sits inside the certified range") {
    const int n = 8;
    VnAlgebra alg = VnAlgebra::diagonal(n);
    Rng rng(139);
    std::vector<Complex> h(n);
    for (auto& v : h) v = rng.cgaussian();
    Matrix K(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) K(i, j) = h[static_cast<std::size_t>((i - j + n) % n)];

    PnormBracket b = operator_pnorm_bracket(alg, K, 4.0, 7);
    double n2 = operator_pnorm_bracket(alg, K, 2.0, 7).lower;
    double ninf = operator_pnorm_bracket(alg, K, kInf, 7).lower;
    CHECK(b.lower <= b.upper);
    CHECK(b.lower >= n2 * (1.0 - 1e-9));
    CHECK(b.upper <= std::sqrt(n2) * std::sqrt(ninf) * (1.0 + 1e-12));
}

TEST_CASE("pnorm bracket: weighted exact endpoints agree with direct optimization") {
    // two-point space with unequal weights; compare against a dense search
    VnAlgebra alg({{1, 2.0}, {1, 0.5}});
    Matrix K(2, 2);
    K << Complex(1.0, 0.0), Complex(2.0, 0.0), Complex(-0.5, 0.0), Complex(3.0, 0.0);
    // ||K||_1 = max_j (sum_i w_i |K_ij|) / w_j
    double c0 = (2.0 * 1.0 + 0.5 * 0.5) / 2.0;
    double c1 = (2.0 * 2.0 + 0.5 * 3.0) / 0.5;
    CHECK(operator_pnorm_bracket(alg, K, 1.0).lower == Catch::Approx(std::max(c0, c1)));
    // ||K||_inf = max_i sum_j |K_ij|
    CHECK(operator_pnorm_bracket(alg, K, kInf).lower == Catch::Approx(3.5));
}

TEST_CASE("pnorm bracket: Riesz-Thorin log-convexity at exact exponents") {
    Rng rng(149);
    VnAlgebra alg = VnAlgebra::diagonal(7, 1.3);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix K(7, 7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) K(i, j) = rng.cgaussian();
        double n1 = operator_pnorm_bracket(alg, K, 1.0).lower;
        double n2 = operator_pnorm_bracket(alg, K, 2.0).lower;
        double ninf = operator_pnorm_bracket(alg, K, kInf).lower;
        CHECK(n2 <= std::sqrt(n1 * ninf) * (1.0 + 1e-12));
    }
}

TEST_CASE("pnorm bracket rejects non-commutative instances") {
    VnAlgebra alg({{2, 1.0}});
    CHECK_THROWS_AS(operator_pnorm_bracket(alg, Matrix::Identity(1, 1), 2.0),
                    std::invalid_argument);
}

TEST_CASE("exact 1->inf kernel norm") {
    VnAlgebra alg({{1, 1.0}, {1, 4.0}});
    Matrix K(2, 2);
    K << Complex(1.0, 0.0), Complex(8.0, 0.0), Complex(2.0, 0.0), Complex(0.0, 0.0);
    CHECK(opnorm_one_to_inf(alg, K) == Catch::Approx(2.0));  // 8/4 = 2 vs 2/1 = 2 vs 1/1
}
