#include <cmath>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "ledchan/optics.hpp"

using namespace ledchan;

namespace {

GeometryConfig bench_geometry() {
  GeometryConfig g;
  g.xa = 1.77;
  g.tilt_deg = 6.9474259;
  g.on_len = 1.0;
  g.ref_dist = 1.77;
  g.beta = 1.0;
  return g;
}

}  // namespace

TEST_CASE("emitting angle at the four bench distances") {
  const GeometryConfig g = bench_geometry();
  const double golden[4][2] = {
      {2.54, 38.877}, {3.27, 50.2814}, {4.02, 56.9296}, {5.08, 62.6616}};
  for (const auto& [dist, angle] : golden)
    CHECK(std::abs(emitting_angle(g, dist) - angle) < 0.001);
}

TEST_CASE("emitting angle edge cases") {
  GeometryConfig g = bench_geometry();
  g.tilt_deg = 0.0;
  CHECK(emitting_angle(g, g.xa) == doctest::Approx(0.0));

  CHECK_THROWS_AS(emitting_angle(g, 1.0), Error);
  try {
    emitting_angle(g, 1.0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DistanceBelowDrop);
  }
}

TEST_CASE("emitting angle can be slightly negative just past the drop") {
  const GeometryConfig g = bench_geometry();
  CHECK(emitting_angle(g, 1.77) == doctest::Approx(-6.9474259));
}

TEST_CASE("emitting angle strictly increases with distance") {
  const GeometryConfig g = bench_geometry();
  double last = emitting_angle(g, g.xa);
  for (double d = g.xa + 0.05; d < 12.0; d += 0.05) {
    const double a = emitting_angle(g, d);
    CHECK(a > last);
    last = a;
  }
}

TEST_CASE("effective shine length is the cosine projection") {
  const GeometryConfig g = bench_geometry();
  CHECK(effective_shine_length(g, 0.0) == doctest::Approx(1.0));
  CHECK(effective_shine_length(g, 60.0) == doctest::Approx(0.5));
  CHECK(effective_shine_length(g, 90.0) == 0.0);
  CHECK(effective_shine_length(g, -90.0) == 0.0);
  CHECK_THROWS_AS(effective_shine_length(g, 90.5), Error);
}

TEST_CASE("received brightness at the reference point and at four meters") {
  const GeometryConfig g = bench_geometry();
  CHECK(received_brightness(g, 1.77) == doctest::Approx(0.99266).epsilon(1e-4));
  CHECK(received_brightness(g, 4.0) == doctest::Approx(0.107).epsilon(5e-3));
  const double ratio = received_brightness(g, 4.0) / received_brightness(g, 1.77);
  CHECK(ratio > 0.08);
  CHECK(ratio < 0.13);
}

TEST_CASE("received brightness normalization") {
  GeometryConfig g = bench_geometry();
  g.tilt_deg = 0.0;
  g.beta = 2.5;
  g.on_len = 0.4;
  // at dist = ref_dist = xa the angle and the inverse-square term vanish
  CHECK(received_brightness(g, 1.77) == doctest::Approx(g.beta * g.on_len));
}

TEST_CASE("received brightness strictly decreases with distance") {
  const GeometryConfig g = bench_geometry();
  double last = received_brightness(g, g.xa);
  for (double d = g.xa + 0.05; d < 20.0; d += 0.05) {
    const double b = received_brightness(g, d);
    CHECK(b < last);
    last = b;
  }
}

TEST_CASE("received brightness decays to zero") {
  const GeometryConfig g = bench_geometry();
  CHECK(received_brightness(g, 1e4) < 1e-7);
}

TEST_CASE("geometry validation") {
  GeometryConfig g = bench_geometry();
  g.tilt_deg = 95.0;
  CHECK_THROWS_AS(g.validate(), Error);
  g = bench_geometry();
  g.ref_dist = 0.0;
  CHECK_THROWS_AS(g.validate(), Error);
}

TEST_CASE("geometry loads from a key-value file") {
  const char* path = "geometry_test.cfg";
  {
    std::ofstream out(path);
    out << "# bench arrangement\n";
    out << "xa = 1.77\n";
    out << "tilt = 6.9474259\n";
    out << "on-len = 2\n";
    out << "ref_dist = 1.5\n";
    out << "beta = 0.75\n";
  }
  const GeometryConfig g = load_geometry(path);
  CHECK(g.xa == doctest::Approx(1.77));
  CHECK(g.tilt_deg == doctest::Approx(6.9474259));
  CHECK(g.on_len == doctest::Approx(2.0));
  CHECK(g.ref_dist == doctest::Approx(1.5));
  CHECK(g.beta == doctest::Approx(0.75));
  std::remove(path);

  CHECK_THROWS_AS(load_geometry("no_such_file.cfg"), Error);
}
