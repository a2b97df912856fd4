#include <doctest.h>

#include <cmath>

#include "orthoframes/errors.hpp"
#include <random>

#include "orthoframes/symbol.hpp"

using namespace orthoframes;

namespace {

OverlapSequence delta_sequence_1d(int radius) {
  OverlapSequence ov(1, radius, "delta");
  ov.set(0, Complex(1.0));
  return ov;
}

// I with entries {1, beta/2, beta/2}: symbol 1 + beta cos p
OverlapSequence cosine_sequence(double beta, int radius) {
  OverlapSequence ov(1, radius, "cosine");
  ov.set(0, Complex(1.0));
  ov.set(1, Complex(beta / 2));
  ov.set(-1, Complex(beta / 2));
  return ov;
}

OverlapSequence translates_rect_overlaps() {
  return translate_overlaps(SeedFunction::rectangle(0.75, 0.75, 1.0), 1.0, 8);
}

}  // namespace

TEST_SUITE("symbol") {
  TEST_CASE("translate symbol alpha(p) = 1.5 + cos p") {
    const SymbolFunction sym = build_symbol(translates_rect_overlaps(), 4096);
    CHECK(sym.dims() == 1);
    CHECK(sym.value(0.0).real() == doctest::Approx(2.5).epsilon(1e-13));
    CHECK(sym.value(kPi).real() == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(sym.min_value() == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(sym.max_value() == doctest::Approx(2.5).epsilon(1e-10));
    CHECK(std::abs(sym.min_p2() - kPi) < kTwoPi / 4096 + 1e-12);
    CHECK(sym.realness_error() < 1e-12);
    // 2 pi periodicity of the evaluator
    CHECK(std::abs(sym.value(0.0) - sym.value(kTwoPi)) < 1e-12);
  }

  TEST_CASE("Example 1 symbol is 1 + (2/3) cos P2, independent of P1") {
    const LatticeParams lat = LatticeParams::from_L(4);
    const SeedFunction g = SeedFunction::normalized_rectangle(0.0, 0.75 * lat.a);
    const SymbolFunction sym = build_symbol(gabor_overlaps(g, lat, 6), 256);
    CHECK(sym.value(0.0, 0.0).real() == doctest::Approx(5.0 / 3.0).epsilon(1e-10));
    CHECK(sym.value(0.0, kPi).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    for (double p1 : {0.5, 1.0, 2.0, 3.0})
      CHECK(std::abs(sym.value(p1, 1.0) - sym.value(0.0, 1.0)) < 1e-10);
    CHECK(sym.realness_error() < 1e-10);
    CHECK(sym.min_value() == doctest::Approx(1.0 / 3.0).epsilon(1e-8));
  }

  TEST_CASE("coherent symbols: L=2 value and the L=1 obstruction") {
    const SymbolFunction f2 = build_symbol(coherent_overlaps(LatticeParams::from_L(2), 6), 512);
    // direct-summation value of F_2(0,0) = (sum_m e^{-pi m^2})^2
    double theta = 0.0;
    for (int m = -6; m <= 6; ++m) theta += std::exp(-kPi * m * m);
    CHECK(f2.value(0.0, 0.0).real() == doctest::Approx(theta * theta).epsilon(1e-12));
    CHECK(f2.value(0.0, 0.0).real() == doctest::Approx(1.18034059902).epsilon(1e-9));
    CHECK(check_positive(f2).ok);

    const SymbolFunction f1 = build_symbol(coherent_overlaps(LatticeParams::from_L(1), 6), 512);
    const PositivityReport rep = check_positive(f1);
    CHECK_FALSE(rep.ok);
    CHECK(rep.min_value < 1e-3 * f1.value(0.0, 0.0).real());
    CHECK(std::abs(rep.min_p1 - kPi) < 0.05);
    CHECK(std::abs(rep.min_p2 - kPi) < 0.05);
    CHECK_THROWS_AS(require_positive(f1), SymbolNotPositive);
    CHECK_THROWS_AS((void)coefficients(f1, 4), SymbolNotPositive);
  }

  TEST_CASE("constant symbol passes positivity with min 1") {
    const SymbolFunction sym = build_symbol(delta_sequence_1d(2), 1024);
    CHECK(check_positive(sym, 1e-6).ok);
    CHECK(sym.min_value() == doctest::Approx(1.0).epsilon(1e-13));
    const CoefficientTable t = coefficients(sym, 4);
    CHECK(t.c(0).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t.alpha_hat(0).real() == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 1; k <= 4; ++k) {
      CHECK(std::abs(t.c(k)) < 1e-12);
      CHECK(std::abs(t.alpha_hat(k)) < 1e-12);
    }
  }

  TEST_CASE("Example 1 coefficients reproduce the printed values") {
    const LatticeParams lat = LatticeParams::from_L(4);
    const SeedFunction g = SeedFunction::normalized_rectangle(0.0, 0.75 * lat.a);
    const SymbolFunction sym = build_symbol(gabor_overlaps(g, lat, 8), 512);
    const CoefficientTable t = coefficients(sym, 8);
    CHECK(t.c(0, 0).real() == doctest::Approx(1.1130811157).epsilon(1e-9));
    CHECK(t.c(0, 1).real() == doctest::Approx(-0.2167688203).epsilon(1e-8));
    CHECK(t.c(0, 2).real() == doctest::Approx(0.0625106020).epsilon(1e-7));
    CHECK(t.alpha_hat(0, 0).real() == doctest::Approx(0.9685685688).epsilon(1e-9));
    CHECK(t.alpha_hat(0, 1).real() == doctest::Approx(0.1750950856).epsilon(1e-8));
    CHECK(t.alpha_hat(0, 2).real() == doctest::Approx(-0.0164003890).epsilon(1e-7));
    CHECK(t.axis_shaped());
    // Hermitian symmetry of the table; real even symbol gives real entries
    for (int k = 0; k <= 8; ++k) {
      CHECK(std::abs(t.c(0, -k) - std::conj(t.c(0, k))) < 1e-14);
      CHECK(std::abs(t.c(0, k).imag()) < 1e-12);
    }
  }

  TEST_CASE("Example 3 coefficients from the window translate overlaps") {
    const double a = std::sqrt(kTwoPi);
    const OverlapSequence ov = translate_overlaps(SeedFunction::cosine_window(a), a, 8);
    const CoefficientTable t = coefficients(build_symbol(ov, 4096), 8);
    CHECK(t.c(0).real() == doctest::Approx(1.0996981156).epsilon(1e-8));
    CHECK(t.c(1).real() == doctest::Approx(-0.2010504798).epsilon(1e-7));
    CHECK(t.c(2).real() == doctest::Approx(0.0545131017).epsilon(1e-7));
  }

  TEST_CASE("coefficient extraction aborts when the grid cannot stabilize") {
    // min F = 1e-9: the F^{-1/2} spike is far narrower than any grid in the
    // doubling schedule, so successive grids keep disagreeing.
    const SymbolFunction sym = build_symbol(cosine_sequence(1.0 - 1e-9, 2), 256);
    CHECK_THROWS_AS((void)coefficients(sym, 4, 1e-12), NonConvergedQuadrature);
  }

  TEST_CASE("Parseval pairs agree with closed forms") {
    // translates: both routes equal 2/sqrt(5)
    const SymbolFunction alpha = build_symbol(translates_rect_overlaps(), 4096);
    const CoefficientTable t = coefficients(alpha, 16);
    const auto [lhs, rhs] = parseval_sum(t, alpha);
    CHECK(lhs == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-9));
    CHECK(rhs == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-9));

    // Example 1 symbol: both equal 3/sqrt(5)
    const SymbolFunction f = build_symbol(cosine_sequence(2.0 / 3.0, 2), 4096);
    const CoefficientTable tf = coefficients(f, 16);
    const auto [l2, r2] = parseval_sum(tf, f);
    CHECK(l2 == doctest::Approx(3.0 / std::sqrt(5.0)).epsilon(1e-9));
    CHECK(r2 == doctest::Approx(3.0 / std::sqrt(5.0)).epsilon(1e-9));

    // constant symbol: (1, 1)
    const SymbolFunction one = build_symbol(delta_sequence_1d(1), 512);
    const auto [l3, r3] = parseval_sum(coefficients(one, 4), one);
    CHECK(l3 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r3 == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("sum rule holds for every example symbol") {
    const SymbolFunction alpha = build_symbol(translates_rect_overlaps(), 4096);
    CHECK(coefficients(alpha, 16).sum_rule() == doctest::Approx(1.0).epsilon(1e-9));

    const SymbolFunction ex1 = build_symbol(cosine_sequence(2.0 / 3.0, 2), 4096);
    CHECK(coefficients(ex1, 16).sum_rule() == doctest::Approx(1.0).epsilon(1e-9));

    const SymbolFunction ex3 = build_symbol(cosine_sequence(2.0 / kPi, 2), 4096);
    CHECK(coefficients(ex3, 16).sum_rule() == doctest::Approx(1.0).epsilon(1e-9));

    const SymbolFunction coh = build_symbol(coherent_overlaps(LatticeParams::from_L(2), 6), 512);
    CHECK(coefficients(coh, 6).sum_rule() == doctest::Approx(1.0).epsilon(1e-9));
  }

  TEST_CASE("alpha_hat convolved with itself rebuilds the symbol coefficients") {
    const OverlapSequence ov = translates_rect_overlaps();
    const CoefficientTable t = coefficients(build_symbol(ov, 4096), 16);
    // sqrt(F) * sqrt(F) = F at coefficient level
    for (int m = 0; m <= 2; ++m) {
      Complex conv = 0.0;
      for (int j = -16; j <= 16; ++j) conv += t.alpha_hat(j) * t.alpha_hat(m - j);
      CHECK(std::abs(conv - ov.at(m)) < 1e-8);
    }
  }

  TEST_CASE("symbol-level Gram: c conv conj(c) conv I is a delta") {
    const OverlapSequence ov = translates_rect_overlaps();
    const CoefficientTable t = coefficients(build_symbol(ov, 4096), 16);
    for (int n = 0; n <= 3; ++n) {
      Complex acc = 0.0;
      for (int k = -16; k <= 16; ++k)
        for (int j = -16; j <= 16; ++j)
          acc += std::conj(t.c(k)) * t.c(j) * ov.at(k + n - j);
      CHECK(std::abs(acc - (n == 0 ? 1.0 : 0.0)) < 1e-8);
    }
  }

  TEST_CASE("coefficients decay at least geometrically over the computed range") {
    const SymbolFunction ex1 = build_symbol(cosine_sequence(2.0 / 3.0, 2), 4096);
    const CoefficientTable t = coefficients(ex1, 12);
    for (int k = 1; k < 12; ++k) {
      const double cur = std::abs(t.c(k));
      const double nxt = std::abs(t.c(k + 1));
      if (cur > 1e-12) CHECK(nxt < 0.7 * cur);
    }
    CHECK(t.decay_certificate() == std::abs(t.c(12)));
  }

  TEST_CASE("random Hermitian sequences: realness, table symmetry, sum rule") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int trial = 0; trial < 12; ++trial) {
      const int radius = 2 + static_cast<int>(rng() % 4);
      OverlapSequence ov(1, radius, "random");
      ov.set(0, Complex(1.0));
      for (int m = 1; m <= radius; ++m) {
        // keep the off-center mass well below 1 so the symbol stays
        // strictly positive and the coefficients decay fast
        const Complex v(0.2 * d(rng) / radius, 0.2 * d(rng) / radius);
        ov.set(m, v);
        ov.set(-m, std::conj(v));
      }
      const SymbolFunction sym = build_symbol(ov, 1024);
      CHECK(sym.realness_error() < 1e-12);
      CHECK(sym.min_value() > 0.0);
      const CoefficientTable t = coefficients(sym, radius + 16);
      CHECK(std::abs(t.sum_rule() - 1.0) < 1e-9);
      for (int k = 0; k <= radius + 16; ++k) {
        CHECK(std::abs(t.c(-k) - std::conj(t.c(k))) < 1e-13);
        CHECK(std::abs(t.alpha_hat(-k) - std::conj(t.alpha_hat(k))) < 1e-13);
      }
      // Gram of the symbol against its own coefficients is a delta
      const int R = t.radius();
      for (int n = 0; n <= 2; ++n) {
        Complex g = 0.0;
        for (int k = -R; k <= R; ++k)
          for (int j = -R; j <= R; ++j) g += std::conj(t.c(k)) * t.c(j) * ov.at(k + n - j);
        CHECK(std::abs(g - (n == 0 ? 1.0 : 0.0)) < 1e-8);
      }
    }
  }

  TEST_CASE("CSV layout for 1D and 2D tables") {
    const CoefficientTable t1 = coefficients(build_symbol(delta_sequence_1d(1), 256), 2);
    CHECK(coefficients_to_csv(t1).rfind("k1,c_re,c_im,alphahat_re,alphahat_im\n", 0) == 0);
    const CoefficientTable t2 =
        coefficients(build_symbol(coherent_overlaps(LatticeParams::from_L(2), 4), 256), 2);
    CHECK(coefficients_to_csv(t2).rfind("k1,k2,c_re,c_im,alphahat_re,alphahat_im\n", 0) == 0);
  }
}
