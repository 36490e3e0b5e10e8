#include <catch2/catch_amalgamated.hpp>

#include <nclab/serialization.hpp>

using namespace nclab;

TEST_CASE("step function JSON round-trip") {
    StepFunction f({0.0, 1.5, 2.25}, {3.0, 1.0}, 0.0);
    json j = to_json(f);
    CHECK(j.at("breakpoints").size() == 3);
    StepFunction g = step_function_from_json(j);
    CHECK(g.breakpoints() == f.breakpoints());
    CHECK(g.values() == f.values());
    CHECK(g.tail() == f.tail());
}

TEST_CASE("algebra and element JSON round-trip") {
    VnAlgebra alg({{2, 1.0}, {1, 0.5}});
    Rng rng(3);
    AlgElement x = random_element(alg, rng);
    AlgElement y = element_from_json(to_json(x));
    CHECK(y.algebra() == alg);
    for (std::size_t k = 0; k < x.block_count(); ++k)
        CHECK((y.block(k) - x.block(k)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("group data JSON round-trip builds a working structure") {
    GroupData s3 = groups::symmetric3();
    GroupData back = group_from_json(to_json(s3), "S3");
    FourierStructure f = make_finite_group(back);
    CHECK(check_axioms(f, 10, 5).pass());

    // incomplete irrep list rejected on load
    json j = to_json(s3);
    j["irreps"].erase(2);
    CHECK_THROWS_AS(group_from_json(j), std::invalid_argument);
}

TEST_CASE("JSONL and CSV report emission") {
    FourierStructure f = make_cyclic(8);
    Rng rng(9);
    std::vector<InequalityReport> reports;
    reports.push_back(check_hausdorff_young(f, random_element(f.source, rng), 1.5, 7));
    reports.push_back(check_hy_lorentz(f, random_element(f.source, rng), 1.5, 8));

    std::string jl = to_jsonl(reports);
    CHECK(std::count(jl.begin(), jl.end(), '\n') == 2);
    json first = json::parse(jl.substr(0, jl.find('\n')));
    CHECK(first.at("kind") == "HY");
    CHECK(first.at("instance") == "cyclic:8");
    CHECK(first.at("seed") == 7);

    std::string csv = to_csv(reports);
    CHECK(csv.rfind("kind,p,q,r,gamma,beta,lhs,rhs,ratio,seed\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("deterministic double formatting") {
    CHECK(format_double(kInf) == "inf");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.10000000000000001");
}
