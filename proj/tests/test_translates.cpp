#include <doctest.h>

#include <cmath>

#include "orthoframes/errors.hpp"
#include "orthoframes/symbol.hpp"
#include "orthoframes/synth.hpp"
#include "orthoframes/translates.hpp"

using namespace orthoframes;

namespace {

SeedFunction rect_width(double a) {  // chi_[0, a), height 1
  return SeedFunction::rectangle(a / 2, a / 2, 1.0, "chi");
}

}  // namespace

TEST_SUITE("translates") {
  TEST_CASE("periodized spectrum of chi_[0,3/2) is a + 2(a-1) cos(2 pi p)") {
    const double a = 1.5;
    const PeriodizedSpectrum spec = periodized_spectrum(rect_width(a), 512);
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
      const double p = static_cast<double>(i) / spec.values.size();
      CHECK(std::abs(spec.values[i] - (a + 2 * (a - 1) * std::cos(kTwoPi * p))) < 1e-8);
    }
    CHECK(spec.min_value() == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(spec.max_value() == doctest::Approx(2.5).epsilon(1e-8));
  }

  TEST_CASE("spectrum equals the overlap symbol: Phi(p) = alpha(2 pi p)") {
    const SeedFunction g = rect_width(1.5);
    const SymbolFunction alpha = build_symbol(translate_overlaps(g, 1.0, 4), 512);
    for (double p : {0.01, 0.2, 0.37, 0.5, 0.81}) {
      CHECK(std::abs(periodized_spectrum_point(g, p) - alpha.value(kTwoPi * p).real()) < 1e-8);
    }
  }

  TEST_CASE("unit rectangle: spectrum is identically 1") {
    const PeriodizedSpectrum spec = periodized_spectrum(SeedFunction::unit_rectangle(), 256);
    for (double v : spec.values) CHECK(std::abs(v - 1.0) < 1e-8);
  }

  TEST_CASE("Gaussian spectrum: strictly positive, matches the overlap route") {
    const SeedFunction gauss = SeedFunction::gaussian();
    const PeriodizedSpectrum spec = periodized_spectrum(gauss, 64);
    CHECK(spec.min_value() > 0.0);
    const SymbolFunction alpha = build_symbol(translate_overlaps(gauss, 1.0, 12), 256);
    for (std::size_t i = 0; i < spec.values.size(); i += 7) {
      const double p = static_cast<double>(i) / spec.values.size();
      CHECK(std::abs(spec.values[i] - alpha.value(kTwoPi * p).real()) < 1e-8);
    }
  }

  TEST_CASE("1-periodic endpoint consistency") {
    const SeedFunction g = rect_width(1.5);
    CHECK(std::abs(periodized_spectrum_point(g, 0.0) - periodized_spectrum_point(g, 1.0)) <
          1e-12);
    CHECK(std::abs(periodized_spectrum_point(g, 0.999999) -
                   periodized_spectrum_point(g, 0.0)) < 1e-4);
  }

  TEST_CASE("frame bounds") {
    // a = 3/2 rectangle: the (2-a, 3a-2) frame
    PeriodizedSpectrum s15 = periodized_spectrum(rect_width(1.5), 4096);
    const FrameBounds fb15 = frame_bounds(s15);
    CHECK(fb15.A_bound == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(fb15.B_bound == doctest::Approx(2.5).epsilon(1e-8));
    CHECK(fb15.is_frame);
    CHECK(s15.zero_set_measure_estimate == 0.0);

    // a = 1.9: (0.1, 3.7)
    PeriodizedSpectrum s19 = periodized_spectrum(rect_width(1.9), 4096);
    const FrameBounds fb19 = frame_bounds(s19);
    CHECK(fb19.A_bound == doctest::Approx(0.1).epsilon(1e-7));
    CHECK(fb19.B_bound == doctest::Approx(3.7).epsilon(1e-8));

    // orthonormal translates: a tight (1,1) frame
    PeriodizedSpectrum s1 = periodized_spectrum(SeedFunction::unit_rectangle(), 1024);
    const FrameBounds fb1 = frame_bounds(s1);
    CHECK(fb1.A_bound == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(fb1.B_bound == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(fb1.is_frame);
  }

  TEST_CASE("overflow guard raises NotAFrame") {
    PeriodizedSpectrum huge =
        periodized_spectrum(SeedFunction::rectangle(0.75, 0.75, 1e7), 64);
    CHECK_THROWS_AS((void)frame_bounds(huge), NotAFrame);
  }

  TEST_CASE("width-2 rectangle: the spectrum zero is detected and excluded") {
    PeriodizedSpectrum s2 = periodized_spectrum(rect_width(2.0), 4096);
    const FrameBounds fb = frame_bounds(s2);
    CHECK(s2.zero_set_measure_estimate > 0.0);
    CHECK(fb.A_bound < 1e-4);  // essential infimum collapses toward zero
    CHECK_THROWS_AS((void)mra_orthonormalize(rect_width(2.0), {0.0, 0.1, 11}, 4096),
                    SymbolNotPositive);
  }

  TEST_CASE("already-orthonormal translates: phitilde is the seed itself") {
    const SeedFunction unit = SeedFunction::unit_rectangle();
    const UniformGrid grid{-2.0, 0.01, 501};
    const MraGenerator gen = mra_orthonormalize(unit, grid, 1024);
    CHECK(gen.radius == 0);
    for (double x : {-0.5, 0.1, 0.5, 0.99, 1.5})
      CHECK(std::abs(gen.evaluate(x) - unit.evaluate(x)) < 1e-8);
  }

  TEST_CASE("a = 3/2: phitilde generates orthonormal translates") {
    const SeedFunction g = rect_width(1.5);
    const UniformGrid grid{-20.0, 0.02, 2001};
    const MraGenerator gen = mra_orthonormalize(g, grid, 4096);
    CHECK(std::abs(mra_overlap(gen, 0).real() - 1.0) < 1e-6);
    for (int shift = 1; shift <= 3; ++shift)
      CHECK(std::abs(mra_overlap(gen, shift)) < 1e-6);
  }

  TEST_CASE("both orthonormalization routes produce the same generator") {
    // Fourier-division route
    const SeedFunction g = rect_width(1.5);
    const UniformGrid grid{-20.0, 0.02, 2001};
    const MraGenerator gen = mra_orthonormalize(g, grid, 4096);

    // overlap-symbol route
    const LatticeParams unit_lat{1, 1.0, 1.0};
    const CoefficientTable table =
        coefficients(build_symbol(translate_overlaps(g, 1.0, 24), 4096), 24);
    const SynthesizedFunction psi = synthesize(g, unit_lat, table, 24);

    // generators agree pointwise away from the jump set and both families
    // are orthonormal; the two computations share no intermediate data
    double max_diff = 0.0;
    for (double x = -10.0; x < 10.0; x += 0.171)
      max_diff = std::max(max_diff, std::abs(psi.evaluate(x) - gen.evaluate(x)));
    CHECK(max_diff < 1e-6);

    for (int shift = 1; shift <= 3; ++shift) {
      CHECK(std::abs(gram_oracle(psi, 0, shift)) < 1e-6);
      CHECK(std::abs(mra_overlap(gen, shift)) < 1e-6);
    }
  }
}
