#include <doctest.h>

#include <cmath>

#include "orthoframes/errors.hpp"
#include "orthoframes/overlaps.hpp"

using namespace orthoframes;

TEST_SUITE("overlaps") {
  TEST_CASE("translate overlaps of the width-3/2 rectangle are exact") {
    // chi_[0, 3/2) under integer shifts: a_0 = 3/2, a_{+-1} = 1/2, 0 beyond
    const SeedFunction g = SeedFunction::rectangle(0.75, 0.75, 1.0);
    const OverlapSequence ov = translate_overlaps(g, 1.0, 4);
    CHECK(ov.at(0).real() == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(ov.at(1).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ov.at(-1).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ov.at(2) == Complex(0.0));
    CHECK(ov.at(-3) == Complex(0.0));
    CHECK(ov.tail_bound() == 0.0);
  }

  TEST_CASE("unit rectangle translates are already orthonormal") {
    const OverlapSequence ov = translate_overlaps(SeedFunction::unit_rectangle(), 1.0, 3);
    CHECK(ov.at(0).real() == doctest::Approx(1.0));
    for (int j = 1; j <= 3; ++j) CHECK(std::abs(ov.at(j)) < 1e-14);
  }

  TEST_CASE("cosine window translate overlap equals 1/pi") {
    const double a = std::sqrt(kTwoPi);
    const OverlapSequence ov = translate_overlaps(SeedFunction::cosine_window(a), a, 3);
    CHECK(ov.at(0).real() == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(ov.at(1).real() == doctest::Approx(1.0 / kPi).epsilon(1e-10));
    CHECK(ov.at(-1).real() == doctest::Approx(1.0 / kPi).epsilon(1e-10));
    CHECK(ov.at(2) == Complex(0.0));
  }

  TEST_CASE("Gabor overlaps of the Example-1 rectangle at L=4") {
    const LatticeParams lat = LatticeParams::from_L(4);
    const SeedFunction g = SeedFunction::normalized_rectangle(0.0, 0.75 * lat.a);
    const OverlapSequence ov = gabor_overlaps(g, lat, 4);
    CHECK(ov.at(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ov.at(0, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
    CHECK(ov.at(0, -1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
    // the n1 modulation integral vanishes because sin(6 pi n1) = 0
    for (int n1 = 1; n1 <= 4; ++n1) CHECK(std::abs(ov.at(n1, 0)) < 1e-12);
    CHECK(std::abs(ov.at(2, 1)) < 1e-12);
    // |n2| >= 2 is an exact zero by the support shortcut
    CHECK(ov.at(1, 2) == Complex(0.0));
    CHECK(ov.at(0, -3) == Complex(0.0));
  }

  TEST_CASE("cosine-window Gabor overlaps match the closed form 1/(pi - 4 pi L^2 n1^2)") {
    for (int L : {1, 2}) {
      const LatticeParams lat = LatticeParams::from_L(L);
      const OverlapSequence ov = gabor_overlaps(SeedFunction::cosine_window(lat.a), lat, 3);
      for (int n1 = -2; n1 <= 2; ++n1) {
        const double want = 1.0 / (kPi - 4.0 * kPi * L * L * n1 * n1);
        CHECK(std::abs(ov.at(n1, 1) - want) < 1e-10);
        CHECK(std::abs(ov.at(n1, 0) - (n1 == 0 ? 1.0 : 0.0)) < 1e-10);
      }
    }
  }

  TEST_CASE("Gaussian overlaps match the closed form in modulus") {
    const SeedFunction gauss = SeedFunction::gaussian();
    for (int L : {1, 2}) {
      const LatticeParams lat = LatticeParams::from_L(L);
      const OverlapSequence ov = gabor_overlaps(gauss, lat, 3);
      for (int n1 = -3; n1 <= 3; ++n1)
        for (int n2 = -3; n2 <= 3; ++n2) {
          const double want = std::exp(-0.5 * kPi * L * (double(n1) * n1 + double(n2) * n2));
          CHECK(std::abs(std::abs(ov.at(n1, n2)) - want) < 1e-8);
        }
    }
  }

  TEST_CASE("coherent overlaps: closed form with the alternating sign") {
    const OverlapSequence ov1 = coherent_overlaps(LatticeParams::from_L(1), 3);
    CHECK(ov1.at(0, 0).real() == doctest::Approx(1.0));
    CHECK(ov1.at(1, 1).real() == doctest::Approx(-std::exp(-kPi)).epsilon(1e-14));
    CHECK(ov1.at(1, 0).real() == doctest::Approx(std::exp(-kPi / 2)).epsilon(1e-14));

    const OverlapSequence ov2 = coherent_overlaps(LatticeParams::from_L(2), 3);
    CHECK(ov2.at(1, 1).real() == doctest::Approx(std::exp(-kTwoPi)).epsilon(1e-14));
  }

  TEST_CASE("coherent closed form agrees with Gaussian quadrature overlaps") {
    const SeedFunction gauss = SeedFunction::gaussian();
    for (int L : {1, 2}) {
      const LatticeParams lat = LatticeParams::from_L(L);
      const OverlapSequence quad = gabor_overlaps(gauss, lat, 3);
      const OverlapSequence closed = coherent_overlaps(lat, 3);
      for (int n1 = -3; n1 <= 3; ++n1)
        for (int n2 = -3; n2 <= 3; ++n2)
          CHECK(std::abs(std::abs(quad.at(n1, n2)) - std::abs(closed.at(n1, n2))) < 1e-8);
    }
  }

  TEST_CASE("Hermitian symmetry holds for every builder") {
    const LatticeParams lat = LatticeParams::from_L(2);
    CHECK(translate_overlaps(SeedFunction::cosine_window(lat.a), lat.a, 3).hermitian_error() <
          1e-12);
    CHECK(gabor_overlaps(SeedFunction::gaussian(), lat, 2).hermitian_error() < 1e-12);
    CHECK(coherent_overlaps(lat, 3).hermitian_error() == 0.0);
  }

  TEST_CASE("total Gaussian overlap mass decreases with L") {
    const SeedFunction gauss = SeedFunction::gaussian();
    double prev = 1e300;
    for (int L = 1; L <= 4; ++L) {
      const double s = gabor_overlaps(gauss, LatticeParams::from_L(L), 3).sum_abs();
      CHECK(s <= prev + 1e-12);
      prev = s;
    }
  }

  TEST_CASE("tail bound records the outermost shell") {
    const OverlapSequence ov = coherent_overlaps(LatticeParams::from_L(1), 2);
    double want = 0.0;
    for (int n = -2; n <= 2; ++n) {
      want = std::max(want, std::abs(ov.at(n, 2)));
      want = std::max(want, std::abs(ov.at(n, -2)));
      want = std::max(want, std::abs(ov.at(2, n)));
      want = std::max(want, std::abs(ov.at(-2, n)));
    }
    CHECK(ov.tail_bound() == want);
    CHECK(ov.tail_bound() == doctest::Approx(std::exp(-0.5 * kPi * 4)).epsilon(1e-12));
  }

  TEST_CASE("CSV emission carries the full index set") {
    const OverlapSequence ov = coherent_overlaps(LatticeParams::from_L(2), 1);
    const std::string csv = overlaps_to_csv(ov);
    CHECK(csv.find("n1,n2,re,im") == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);  // header + 9 entries
  }
}
