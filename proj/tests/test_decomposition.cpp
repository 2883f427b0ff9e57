#include <cmath>

#include "doctest.h"
#include "fuzznorm/decomposition.hpp"
#include "fuzznorm/verification.hpp"

using namespace fuzznorm;

namespace {
constexpr double kTol = 1e-9;
}

TEST_CASE("closed-form alpha cuts") {
  CHECK(alpha_cut_oracle(Generator::standard(1), 0.9, 2.0) == doctest::Approx(18.0));
  CHECK(alpha_cut_oracle(Generator::exponential(1), std::exp(-1.0), 5.0) ==
        doctest::Approx(5.0));
  CHECK(alpha_cut_oracle(Generator::shifted(1, 0.5), 0.75, 4.0) == doctest::Approx(4.0));
  CHECK(alpha_cut_oracle(Generator::shifted(1, 0.5), 0.25, 4.0) == 0.0);
  CHECK(alpha_cut_oracle(Generator::indicator(1, 2.0), 0.3, 3.0) == doctest::Approx(1.5));
  CHECK(alpha_cut_oracle(Generator::piecewise_linear(1), 0.5, 1.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(
      alpha_cut_oracle(min_combine({Generator::standard(1)}), 0.5, 1.0),
      std::invalid_argument);
  CHECK_THROWS_AS(alpha_cut_oracle(Generator::standard(1), 1.5, 1.0), std::invalid_argument);
}

TEST_CASE("alpha_cut by bisection matches hand-derived values") {
  const FuzzyNorm std2 = norm_from_generator(Generator::standard(2));
  // ||x|| = 3, alpha = 0.5: invert t/(t+3) > 0.5 to t > 3
  auto r = alpha_cut(std2, Vector{3.0, 0.0}, 0.5, kTol);
  CHECK(r.flag == CutFlag::Ok);
  CHECK(r.value == doctest::Approx(3.0).epsilon(1e-8));

  const FuzzyNorm ind = norm_from_generator(Generator::indicator(1, 1.0));
  for (double alpha : {0.1, 0.5, 0.9}) {
    r = alpha_cut(ind, Vector{2.0}, alpha, kTol);
    CHECK(r.flag == CutFlag::Ok);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
  }

  r = alpha_cut(std2, Vector::zero(2), 0.7, kTol);
  CHECK(r.flag == CutFlag::Ok);
  CHECK(r.value == 0.0);
}

TEST_CASE("vanishing-at-0 failure shows up as the degenerate flag") {
  const FuzzyNorm sh = norm_from_generator(Generator::shifted(1, 0.5));
  auto r = alpha_cut(sh, Vector{1.0}, 0.25, kTol);
  CHECK(r.flag == CutFlag::Degenerate);
  CHECK(r.value == 0.0);
  // above the shift the cut is regular again
  r = alpha_cut(sh, Vector{1.0}, 0.75, kTol);
  CHECK(r.flag == CutFlag::Ok);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("bisection agrees with the oracle across the scalar families") {
  const std::vector<Generator> gs = {
      Generator::standard(1), Generator::indicator(1, 1.0), Generator::exponential(1),
      Generator::piecewise_linear(1), Generator::shifted(1, 0.5)};
  for (const Generator& g : gs) {
    const FuzzyNorm N = norm_from_generator(g);
    for (double alpha : {0.05, 0.25, 0.5, 0.75, 0.95}) {
      for (double s : {0.1, 1.0, 10.0}) {
        const double expected = alpha_cut_oracle(g, alpha, s);
        const CutResult got = alpha_cut(N, Vector{s}, alpha, kTol);
        CAPTURE(g.kind_name());
        CAPTURE(alpha);
        CAPTURE(s);
        CHECK(std::fabs(got.value - expected) <= kTol + 1e-12);
        if (g.kind() == Generator::Kind::Shifted && alpha <= 0.5)
          CHECK(got.flag == CutFlag::Degenerate);
        else
          CHECK(got.flag == CutFlag::Ok);
      }
    }
  }
}

TEST_CASE("alpha_cut upper bias stays within tol") {
  // the bisection returns the certified-true endpoint, so the value may only
  // exceed the infimum, never undercut it by more than rounding
  const FuzzyNorm N = norm_from_generator(Generator::standard(1));
  for (double alpha : {0.2, 0.5, 0.8}) {
    for (double s : {0.5, 2.0, 7.0}) {
      const double truth = alpha * s / (1.0 - alpha);
      const CutResult got = alpha_cut(N, Vector{s}, alpha, kTol);
      CHECK(got.value >= truth - 1e-12);
      CHECK(got.value <= truth + kTol);
    }
  }
}

TEST_CASE("decompose_table columns") {
  const FuzzyNorm N = norm_from_generator(Generator::standard(1));
  const AlphaCutTable table =
      decompose_table(N, {0.25, 0.5, 0.75}, {Vector{1.0}, Vector::zero(1)}, kTol);
  CHECK(table.values[0][0] == doctest::Approx(1.0 / 3.0).epsilon(1e-8));
  CHECK(table.values[1][0] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(table.values[2][0] == doctest::Approx(3.0).epsilon(1e-8));
  for (int i = 0; i < 3; ++i) CHECK(table.values[i][1] == 0.0);

  const FuzzyNorm I = norm_from_generator(Generator::indicator(1, 1.0));
  const AlphaCutTable it = decompose_table(I, {0.1, 0.4, 0.8}, {Vector{1.0}}, kTol);
  for (int i = 0; i < 3; ++i) CHECK(it.values[i][0] == doctest::Approx(1.0).epsilon(1e-8));

  CHECK_THROWS_AS(decompose_table(N, {0.5, 0.25}, {Vector{1.0}}, kTol), std::invalid_argument);
  CHECK_THROWS_AS(decompose_table(N, {0.5}, {Vector{1.0, 2.0}}, kTol), std::invalid_argument);
}

TEST_CASE("extracted cuts behave like norms: homogeneity and triangle") {
  CheckConfig cfg = CheckConfig::defaults();
  const FuzzyNorm N = norm_from_generator(Generator::exponential(2));
  const auto xs = sample_vectors(2, 60, cfg);
  CheckConfig alt = cfg;
  alt.seed = cfg.seed + 5;
  const auto ys = sample_vectors(2, 60, alt);
  const double alpha = 0.5;
  auto p = [&](const Vector& v) { return alpha_cut(N, v, alpha, kTol).value; };
  for (size_t i = 0; i < xs.size(); ++i) {
    for (double lam : {-2.0, -0.5, 0.5, 3.0})
      CHECK(std::fabs(p(lam * xs[i]) - std::fabs(lam) * p(xs[i])) <=
            (1.0 + std::fabs(lam)) * kTol);
    CHECK(p(xs[i] + ys[i]) <= p(xs[i]) + p(ys[i]) + 3.0 * kTol);
  }
}

TEST_CASE("ascending family across alphas") {
  CheckConfig cfg = CheckConfig::defaults();
  std::vector<double> alphas;
  for (int i = 1; i <= 19; ++i) alphas.push_back(i * 0.05);
  for (const Generator& g : {Generator::standard(2), Generator::piecewise_linear(2)}) {
    const FuzzyNorm N = norm_from_generator(g);
    const AlphaCutTable table = decompose_table(N, alphas, sample_vectors(2, 20, cfg), kTol);
    const CheckReport r = check_ascending_family(table);
    CHECK(r.verdict == Verdict::Pass);
  }
}

TEST_CASE("reconstruction from a dense table approximates the norm") {
  std::vector<double> alphas;
  for (int i = 1; i <= 99; ++i) alphas.push_back(i * 0.01);

  const FuzzyNorm N = norm_from_generator(Generator::standard(1));
  const ReconstructedNorm R = reconstruct_norm(decompose_table(N, alphas, {Vector{1.0}}, kTol));
  CHECK(std::fabs(R.eval(Vector{1.0}, 1.0) - 0.5) <= 0.01 + 1e-9);
  CHECK(std::fabs(R.eval(Vector{2.0}, 1.0) - N.eval(Vector{2.0}, 1.0)) <= 0.01 + 1e-9);
  // t below every tabulated cut: empty set convention
  CHECK(R.eval(Vector{1.0}, 1e-6) == 0.0);

  const FuzzyNorm I = norm_from_generator(Generator::indicator(1, 1.0));
  const ReconstructedNorm RI =
      reconstruct_norm(decompose_table(I, alphas, {Vector{1.0}}, kTol));
  CHECK(RI.eval(Vector{1.0}, 2.0) == doctest::Approx(0.99));  // max grid alpha

  CHECK_THROWS_AS(R.eval(Vector{1.0}, -1.0), std::invalid_argument);
}

TEST_CASE("reconstruction rejects points outside the tabulated rays") {
  const FuzzyNorm N = norm_from_generator(Generator::standard(2));
  const ReconstructedNorm R =
      reconstruct_norm(decompose_table(N, {0.25, 0.5}, {Vector{1.0, 0.0}}, kTol));
  CHECK_THROWS_AS(R.eval(Vector{0.0, 1.0}, 1.0), std::invalid_argument);
  CHECK_NOTHROW(R.eval(Vector{-3.0, 0.0}, 1.0));
}

TEST_CASE("a planted corruption is detected with its cell as witness") {
  const FuzzyNorm N = norm_from_generator(Generator::standard(1));
  AlphaCutTable table =
      decompose_table(N, {0.25, 0.5, 0.75}, {Vector{1.0}, Vector{2.0}}, kTol);
  table.values[2][1] = table.values[1][1] - 1.0;  // lower one cell
  const CheckReport r = check_ascending_family(table);
  REQUIRE(r.verdict == Verdict::Fail);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->scalars[0] == doctest::Approx(0.5));
  CHECK(r.witness->scalars[1] == doctest::Approx(0.75));
  CHECK(r.witness->points[0] == Vector{2.0});
}

TEST_CASE("degenerate flags propagate through the table") {
  const FuzzyNorm sh = norm_from_generator(Generator::shifted(1, 0.5));
  const AlphaCutTable table = decompose_table(sh, {0.25, 0.75}, {Vector{1.0}}, kTol);
  CHECK(table.flags[0][0] == CutFlag::Degenerate);
  CHECK(table.values[0][0] == 0.0);
  CHECK(table.flags[1][0] == CutFlag::Ok);
}
