#include <catch2/catch_amalgamated.hpp>

#include <nclab/fourier.hpp>

#include <cmath>
#include <numbers>

using namespace nclab;

namespace {

AlgElement delta0(const VnAlgebra& src) {
    std::vector<Complex> v(src.block_count(), 0.0);
    v[0] = 1.0;
    return AlgElement::diagonal(src, v);
}

}  // namespace

TEST_CASE("cyclic: N=1 forward is the identity scalar map") {
    FourierStructure f = make_cyclic(1);
    AlgElement x = AlgElement::diagonal(f.source, {Complex(2.5, -1.0)});
    CHECK(f.forward(x).diagonal_values()[0] == Complex(2.5, -1.0));
}

TEST_CASE("cyclic: delta_0 on Z_4 transforms to the constant 1") {
    FourierStructure f = make_cyclic(4);
    AlgElement d = delta0(f.source);
    AlgElement dh = f.forward(d);
    for (auto v : dh.diagonal_values()) CHECK(std::abs(v - Complex(1.0, 0.0)) < 1e-14);
    CHECK(lp_norm(d, 2.0) == Catch::Approx(1.0));
    CHECK(lp_norm(dh, 2.0) == Catch::Approx(1.0));  // tau-hat weight 1/4
}

TEST_CASE("cyclic: axioms hold across sizes") {
    for (int n : {2, 3, 8, 17, 64}) {
        AxiomReport rep = check_axioms(make_cyclic(n), 20, 1000 + static_cast<unsigned>(n));
        INFO("cyclic " << n);
        CHECK(rep.pass());
    }
}

TEST_CASE("finite group on Z_N reproduces make_cyclic") {
    FourierStructure fc = make_cyclic(6);
    FourierStructure fg = make_finite_group(groups::cyclic(6));
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        AlgElement x = random_element(fc.source, rng);
        auto a = fc.forward(x).diagonal_values();
        // same source algebra, reuse x's point values
        AlgElement fxg = fg.forward(AlgElement::diagonal(fg.source, x.diagonal_values()));
        auto b = fxg.diagonal_values();
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-10);
    }
}

TEST_CASE("S3: dual block dimensions and Plancherel") {
    GroupData s3 = groups::symmetric3();
    FourierStructure f = make_finite_group(s3);
    std::vector<int> dims;
    for (const auto& b : f.dual.blocks()) dims.push_back(b.n);
    CHECK(dims == std::vector<int>{1, 1, 2});
    int sum_d2 = 0;
    for (const auto& r : s3.irreps) sum_d2 += r.dim * r.dim;
    CHECK(sum_d2 == 6);

    AxiomReport rep = check_axioms(f, 100, 42);
    CHECK(rep.plancherel_err < 1e-10);
    CHECK(rep.pass());
}

TEST_CASE("all bundled groups satisfy the axioms") {
    for (const char* name : {"S3", "S4", "D4", "Q8", "Z2xZ2"}) {
        GroupData gd = groups::by_name(name);
        gd.validate();
        AxiomReport rep = check_axioms(make_finite_group(gd), 25, 99);
        INFO(name);
        CHECK(rep.pass());
    }
}

TEST_CASE("swapped structures satisfy the axioms too") {
    AxiomReport rep = check_axioms(make_finite_group(groups::symmetric3()).swapped(), 25, 17);
    CHECK(rep.pass());
    AxiomReport rep2 = check_axioms(make_cyclic(12).swapped(), 25, 18);
    CHECK(rep2.pass());
}

TEST_CASE("incomplete representation list is rejected") {
    GroupData bad = groups::symmetric3();
    bad.irreps.pop_back();
    CHECK_THROWS_AS(make_finite_group(bad), std::invalid_argument);
}

TEST_CASE("trivial instance") {
    VnAlgebra alg({{2, 1.0}, {3, 1.5}});
    FourierStructure f = make_trivial(alg);
    Rng rng(5);
    AlgElement x = random_element(alg, rng);
    CHECK(lp_norm(f.forward(x) - x, 2.0) == 0.0);
    AxiomReport rep = check_axioms(f, 25, 3);
    CHECK(rep.pass());

    CHECK_THROWS_AS(make_trivial(VnAlgebra({{2, 0.5}})), std::invalid_argument);

    MultiplierOp id(f, AlgElement::identity(alg));
    CHECK(lp_norm(apply_multiplier(id, x) - x, 2.0) < 1e-12);
}

TEST_CASE("multiplicative unitary") {
    // Z_2: W maps (p,q) -> (p, p+q); explicit 4x4 permutation
    GroupTable z2 = groups::cyclic(2).table;
    Matrix w = multiplicative_unitary(z2);
    Matrix expected = Matrix::Zero(4, 4);
    // basis order (p,q) = (0,0),(0,1),(1,0),(1,1); p^{-1} q = p+q mod 2
    expected(0, 0) = 1.0;
    expected(1, 1) = 1.0;
    expected(2, 3) = 1.0;
    expected(3, 2) = 1.0;
    CHECK((w - expected).cwiseAbs().maxCoeff() == 0.0);
    CHECK((w * w.adjoint() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

    // S3: 36x36 permutation, unitary
    Matrix ws = multiplicative_unitary(groups::symmetric3().table);
    CHECK((ws.adjoint() * ws - Matrix::Identity(36, 36)).cwiseAbs().maxCoeff() == 0.0);

    // non-group table rejected
    GroupTable broken = z2;
    broken.table[1][1] = 1;  // 1*1 = 1 breaks inverses
    CHECK_THROWS_AS(multiplicative_unitary(broken), std::invalid_argument);
}

TEST_CASE("reconstruction identity on Z_4") {
    const int n = 4;
    GroupTable t = groups::cyclic(n).table;
    FourierStructure f = make_cyclic(n);
    Rng rng(21);
    // character basis diagonalizes the reconstructed convolution operator and
    // recovers the DFT values
    Matrix u(n, n);
    for (int g = 0; g < n; ++g)
        for (int k = 0; k < n; ++k) {
            double th = 2.0 * std::numbers::pi * g * k / n;
            u(g, k) = Complex(std::cos(th), std::sin(th)) / std::sqrt(double(n));
        }
    for (int trial = 0; trial < 20; ++trial) {
        AlgElement x = random_element(f.source, rng);
        Matrix m = reconstruction_transform(t, x.diagonal_values());
        // M(q,q') = x(q - q')
        for (int q = 0; q < n; ++q)
            for (int qp = 0; qp < n; ++qp)
                CHECK(std::abs(m(q, qp) -
                               x.diagonal_values()[static_cast<std::size_t>((q - qp + n) % n)]) <
                      1e-12);
        Matrix diag = u.adjoint() * m * u;
        auto fx = f.forward(x).diagonal_values();
        double dev = 0.0;
        for (int k = 0; k < n; ++k) {
            dev = std::max(dev, std::abs(diag(k, k) - fx[static_cast<std::size_t>(k)]));
            for (int l = 0; l < n; ++l)
                if (l != k) dev = std::max(dev, std::abs(diag(k, l)));
        }
        CHECK(dev < 1e-12);
    }
}

TEST_CASE("apply_multiplier: identity symbol round-trips") {
    FourierStructure f = make_cyclic(12);
    MultiplierOp m(f, AlgElement::identity(f.dual));
    Rng rng(31);
    AlgElement x = random_element(f.source, rng);
    CHECK(lp_norm(apply_multiplier(m, x) - x, 2.0) / lp_norm(x, 2.0) < 1e-10);
}

TEST_CASE("apply_multiplier: frequency-0 indicator is the mean projection") {
    FourierStructure f = make_cyclic(8);
    std::vector<Complex> ind(8, 0.0);
    ind[0] = 1.0;
    MultiplierOp m(f, AlgElement::diagonal(f.dual, ind));
    Rng rng(37);
    AlgElement x = random_element(f.source, rng);
    Complex mean = 0.0;
    for (auto v : x.diagonal_values()) mean += v;
    mean /= 8.0;
    for (auto v : apply_multiplier(m, x).diagonal_values())
        CHECK(std::abs(v - mean) < 1e-12);
}

TEST_CASE("multiplier module identity and composition") {
    FourierStructure f = make_finite_group(groups::dihedral4());
    Rng rng(41);
    AlgElement s1 = random_element(f.dual, rng);
    AlgElement s2 = random_element(f.dual, rng);
    AlgElement x = random_element(f.source, rng);

    MultiplierOp m1(f, s1), m2(f, s2), m12(f, s1 * s2);
    AlgElement lhs = apply_multiplier(m1, apply_multiplier(m2, x));
    AlgElement rhs = apply_multiplier(m12, x);
    CHECK(lp_norm(lhs - rhs, 2.0) / lp_norm(rhs, 2.0) < 1e-10);

    // F(A x) = sigma F(x)
    AlgElement ax = apply_multiplier(m1, x);
    CHECK(lp_norm(f.forward(ax) - s1 * f.forward(x), 2.0) / lp_norm(s1 * f.forward(x), 2.0) <
          1e-10);
}

TEST_CASE("Hausdorff-Young with constant one on every instance") {
    std::vector<FourierStructure> instances;
    for (int n : {2, 5, 16}) instances.push_back(make_cyclic(n));
    for (const char* g : {"S3", "S4", "D4", "Q8", "Z2xZ2"})
        instances.push_back(make_finite_group(groups::by_name(g)));
    Rng rng(53);
    for (const auto& f : instances) {
        for (double p : {1.0, 4.0 / 3.0, 1.5, 2.0}) {
            double pp = (p == 1.0) ? kInf : p / (p - 1.0);
            for (int trial = 0; trial < 25; ++trial) {
                AlgElement x = random_element(f.source, rng);
                double ratio = lp_norm(f.forward(x), pp) / lp_norm(x, p);
                INFO(f.descriptor << " p=" << p);
                CHECK(ratio <= 1.0 + 1e-9);
            }
        }
    }
}

TEST_CASE("default dirac operator") {
    FourierStructure f = make_cyclic(8);
    AlgElement d = default_dirac(f);
    auto v = d.diagonal_values();
    CHECK(v[0] == Complex(1.0, 0.0));
    CHECK(std::abs(v[4] - Complex(std::sqrt(17.0), 0.0)) < 1e-15);
    CHECK(std::abs(v[5] - v[3]) < 1e-15);  // |k| symmetry
}
