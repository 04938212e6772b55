#include "doctest.h"

#include <random>
#include <set>

#include "cliffwave/io.hpp"
#include "cliffwave/operators.hpp"
#include "cliffwave/verify.hpp"
#include "test_support.hpp"

using namespace cliffwave;
using cliffwave::io::json;

TEST_SUITE("cli") {
  TEST_CASE("exact multivector and polynomial json round trip") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
      ExactMV a = cliffwave::testing::random_exact(4, rng);
      CHECK(io::exact_mv_from_json(json::parse(io::to_json(a).dump())) == a);
    }
    ExactPoly p = random_polynomial(VarSystem(2, 3), 3, 6, 9);
    CHECK(io::exact_poly_from_json(json::parse(io::to_json(p).dump())) == p);
  }

  TEST_CASE("signal and coefficient json round trip") {
    BasisPtr basis = MonogenicBasis::build(2, 3);
    auto rule = std::make_shared<QuadratureRule>(build_quadrature(2, required_exactness(3)));
    SpectralCoefficients c = SpectralCoefficients::zeros(*basis);
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    for (auto& x : c.coeffs) x.add(1, Approx(g(rng), g(rng)));
    SphereSignal s = synthesize(c, *basis, rule);

    SphereSignal back = io::signal_from_json(json::parse(io::to_json(s).dump()));
    CHECK(back.rule->degree == rule->degree);
    CHECK(relative_l2_error(back, s) == 0.0);

    SpectralCoefficients cb = io::coefficients_from_json(json::parse(io::to_json(c, *basis).dump()), *basis);
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) CHECK(cb.coeffs[i] == c.coeffs[i]);

    json nodes_only = io::to_json(s);
    nodes_only.erase("degree");
    CHECK(io::signal_from_json(nodes_only).rule->degree == rule->degree);
  }

  TEST_CASE("wavelet file header carries the family hash") {
    BasisPtr basis = MonogenicBasis::build(2, 2);
    WaveletFamily fam = wavelet_family(SpectralProfile::heat_h(2), ScaleGrid::geometric(1e-2, 5.0, 1.3), *basis);
    WaveletCoefficients w = wavelet_transform(SpectralCoefficients::zeros(*basis), fam);
    json j = io::to_json(w, fam, *basis);
    io::WaveletFile f = io::wavelet_header_from_json(j);
    CHECK(f.family_hash == fam.family_hash);
    CHECK(family_hash(f.profile, f.grid, f.max_degree) == fam.family_hash);
    CHECK(io::wavelet_coefficients_from_json(j, *basis).scales.size() == fam.grid.size());
  }

  TEST_CASE("malformed input is rejected") {
    BasisPtr basis = MonogenicBasis::build(2, 1);
    CHECK_THROWS_AS(io::exact_mv_from_json(json{{"m", 3}}), io::IoError);
    CHECK_THROWS_AS(io::exact_mv_from_json(json::parse(R"({"m":2,"coeffs":[{"blade":4,"re":"1","im":"0"}]})")),
                    io::IoError);
    CHECK_THROWS_AS(io::exact_mv_from_json(json::parse(R"({"m":2,"coeffs":[{"blade":1,"re":"x/y","im":"0"}]})")),
                    io::IoError);
    CHECK_THROWS_AS(io::coefficients_from_json(json::parse(R"({"m":2,"max_degree":1,"coeffs":{"9/9,9/V":{}}})"), *basis),
                    io::IoError);
    CHECK_THROWS_AS(io::read_json("/nonexistent/path.json"), io::IoError);
    json s = io::to_json(synthesize(SpectralCoefficients::zeros(*basis), *basis,
                                    std::make_shared<QuadratureRule>(build_quadrature(2, 4))));
    s["nodes"][0][0] = 0.5;
    CHECK_THROWS_AS(io::signal_from_json(s), io::IoError);
  }

  TEST_CASE("verify battery sections and negative control") {
    VerifyConfig cfg;
    cfg.max_m = 3;
    cfg.max_degree = 2;
    cfg.weight_bound = 2;
    cfg.random_polys = 2;
    VerifyReport r = run_verification(cfg);
    CHECK(r.ok());
    std::set<std::string> sections;
    for (const auto& c : r.checks) sections.insert(c.section);
    CHECK(sections == std::set<std::string>{"Gamma", "Delta", "Casimir", "simplicial", "mixed-Laplacian", "Spin"});

    cfg.casimir_constant = Exact::rational(1, 2);
    VerifyReport bad = run_verification(cfg);
    CHECK_FALSE(bad.ok());
    for (const auto& c : bad.checks)
      if (!c.pass && c.asserted) CHECK(c.section == "Casimir");
  }
}
