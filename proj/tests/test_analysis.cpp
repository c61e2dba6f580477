#include <cmath>

#include "doctest.h"
#include "ledchan/analysis.hpp"

using namespace ledchan;

namespace {

GeometryConfig bench_geometry() {
  GeometryConfig g;
  g.xa = 1.77;
  g.tilt_deg = 6.9474259;
  return g;
}

ProbeConfig bench_probe() {
  ProbeConfig probe;
  probe.geometry = bench_geometry();
  probe.camera.fps = 30.0;
  probe.camera.ambient = 16.0;
  probe.camera.gain = 219.0;
  BfskParams p;
  p.block_rate = 30;
  p.bit_blocks = 6;
  p.f0 = 0.0;
  p.f1 = 5.0;
  probe.scheme = p;
  probe.message_len = 128;
  probe.trials = 4;
  probe.seed = 11;
  return probe;
}

}  // namespace

TEST_CASE("ber counts flipped bits") {
  CHECK(ber({1, 0, 1, 1}, {1, 0, 1, 1}) == 0.0);
  CHECK(ber({1, 0, 1, 1}, {0, 1, 0, 0}) == 1.0);
  Bits sent(256, 0), received(256, 0);
  received[100] = 1;
  CHECK(ber(sent, received) == doctest::Approx(1.0 / 256.0));
}

TEST_CASE("ber error paths") {
  CHECK_THROWS_AS(ber({}, {}), Error);
  CHECK_THROWS_AS(ber({1, 0}, {1}), Error);
  try {
    ber({1, 0}, {1});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LengthMismatch);
  }
}

TEST_CASE("binary entropy endpoints and symmetry") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  for (double p = 0.05; p < 0.5; p += 0.05)
    CHECK(binary_entropy(p) == doctest::Approx(binary_entropy(1.0 - p)).epsilon(1e-12));
  CHECK_THROWS_AS(binary_entropy(-0.1), Error);
  CHECK_THROWS_AS(binary_entropy(1.1), Error);
}

TEST_CASE("capacity at one third of the symbols flipped") {
  CHECK(std::abs(capacity(1.0 / 3.0) - 0.081704166) < 1e-6);
  CHECK(capacity(0.0) == 1.0);
  CHECK(capacity(0.5) == doctest::Approx(0.0));
}

TEST_CASE("capacity is symmetric and falls on the left half") {
  for (double p = 0.0; p <= 0.5; p += 0.01)
    CHECK(capacity(p) == doctest::Approx(capacity(1.0 - p)).epsilon(1e-12));
  double last = capacity(0.0);
  for (double p = 0.01; p <= 0.5 + 1e-12; p += 0.01) {
    const double c = capacity(p);
    CHECK(c < last);
    last = c;
  }
}

TEST_CASE("symbols per information bit") {
  CHECK(min_bits_per_info_bit(1.0 / 3.0) > 12.0);
  CHECK(min_bits_per_info_bit(1.0 / 3.0) == doctest::Approx(12.239278).epsilon(1e-6));
  CHECK(min_bits_per_info_bit(0.0) == 1.0);
  CHECK(min_bits_per_info_bit(0.25) == doctest::Approx(1.0 / capacity(0.25)));
  CHECK_THROWS_AS(min_bits_per_info_bit(0.5), Error);
  try {
    min_bits_per_info_bit(0.5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroCapacity);
  }
  CHECK_THROWS_AS(min_bits_per_info_bit(0.7), Error);
}

TEST_CASE("flicker tradeoff table") {
  const auto rows = flicker_tradeoff_table(25.0, 1, 50);
  REQUIRE(rows.size() == 50);
  CHECK(rows[0].rate == doctest::Approx(25.0));
  CHECK(rows[0].f_ook == doctest::Approx(1.0));
  CHECK(rows[0].f_bfsk == doctest::Approx(1.0 / 1.5).epsilon(1e-12));
  CHECK(rows[49].f_ook == doctest::Approx(0.02));
  CHECK(rows[49].f_bfsk == doctest::Approx(1.0 / 50.5).epsilon(1e-12));
  for (const auto& row : rows) {
    CHECK(row.f_bfsk == doctest::Approx(1.0 / (row.enc1_len + 0.5)).epsilon(1e-12));
    CHECK(row.f_bfsk < row.f_ook);
  }
}

TEST_CASE("bisection matches a linear scan for monotone predicates") {
  const double res = 0.01;
  for (double threshold : {2.6, 3.0, 3.339, 4.51, 5.0799}) {
    const auto passes = [&](double d) { return d <= threshold; };
    const double via_bisect = largest_passing_distance(passes, 2.54, 5.08, res);

    double via_scan = 2.54;
    for (double d = 2.54; d <= 5.08 + 1e-12; d += res) {
      if (passes(d))
        via_scan = d;
      else
        break;
    }
    CHECK(std::abs(via_bisect - via_scan) <= res + 1e-9);
    CHECK(passes(via_bisect));
  }
}

TEST_CASE("bisection endpoints") {
  const auto always = [](double) { return true; };
  CHECK(largest_passing_distance(always, 1.0, 2.0) == 2.0);

  const auto never = [](double) { return false; };
  CHECK_THROWS_AS(largest_passing_distance(never, 1.0, 2.0), Error);
  try {
    largest_passing_distance(never, 1.0, 2.0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotReachable);
  }
}

TEST_CASE("estimate_ber is zero on a noiseless channel") {
  const ProbeConfig probe = bench_probe();
  const BerEstimate est = estimate_ber(probe, 2.54, 0.0);
  CHECK(est.mean_ber == 0.0);
  CHECK(est.capacity == 1.0);
  CHECK(est.std_error == 0.0);
}

TEST_CASE("estimate_ber is reproducible for a fixed seed") {
  ProbeConfig probe = bench_probe();
  probe.camera.noise_sigma = 20.0;
  const BerEstimate a = estimate_ber(probe, 3.3, 20.0);
  const BerEstimate b = estimate_ber(probe, 3.3, 20.0);
  CHECK(a.mean_ber == b.mean_ber);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("effective distance on a noiseless channel reaches the range end") {
  ProbeConfig probe = bench_probe();
  probe.camera.noise_sigma = 0.0;
  CHECK(effective_distance(probe, 1.0 / 12.0, 2.54, 5.08) == 5.08);
}

TEST_CASE("overwhelming noise makes every distance unreachable") {
  ProbeConfig probe = bench_probe();
  probe.camera.noise_sigma = 4000.0;  // dwarfs the whole 8-bit range
  CHECK_THROWS_AS(effective_distance(probe, 1.0 / 12.0, 2.54, 5.08), Error);
}

TEST_CASE("a noise ramp yields a finite bound strictly inside the range") {
  ProbeConfig probe = bench_probe();
  probe.camera.noise_sigma = 21.0;
  const double bound = effective_distance(probe, 1.0 / 12.0, 2.54, 5.08);
  CHECK(bound >= 2.54);
  CHECK(bound < 5.08);
}

TEST_CASE("sweep produces the full grid in order and is deterministic") {
  SweepConfig config;
  config.geometry = bench_geometry();
  config.camera.fps = 30.0;
  BfskParams p;
  p.block_rate = 30;
  p.bit_blocks = 6;
  p.f0 = 0.0;
  p.f1 = 5.0;
  config.scheme = p;
  config.distances = {2.54, 3.27};
  config.ambients = {16.0, 64.0};
  config.sigmas = {0.0, 12.0};
  config.decoders = {Decoder::Dips, Decoder::Mean};
  config.trials = 3;
  config.message_len = 64;
  config.master_seed = 99;

  const SweepResult a = run_sweep(config);
  REQUIRE(a.rows.size() == 16);

  // grid order: distance, ambient, sigma, decoder
  CHECK(a.rows[0].distance == 2.54);
  CHECK(a.rows[0].decoder == Decoder::Dips);
  CHECK(a.rows[1].decoder == Decoder::Mean);
  CHECK(a.rows[2].noise_sigma == 12.0);
  CHECK(a.rows[4].ambient == 64.0);
  CHECK(a.rows[8].distance == 3.27);

  for (const SweepRow& row : a.rows) {
    CHECK(row.ber_norm >= 0.0);
    CHECK(row.ber_norm <= 0.5);
    CHECK(row.capacity >= 0.0);
    CHECK(row.capacity <= 1.0);
  }

  const SweepResult b = run_sweep(config);
  CHECK(sweep_to_csv(config, a) == sweep_to_csv(config, b));

  config.master_seed = 100;
  const SweepResult c = run_sweep(config);
  CHECK(sweep_to_csv(config, a) != sweep_to_csv(config, c));
}

TEST_CASE("noiseless sweep cells have zero error") {
  SweepConfig config;
  config.geometry = bench_geometry();
  config.camera.fps = 30.0;
  BfskParams p;
  p.block_rate = 30;
  p.bit_blocks = 6;
  p.f0 = 0.0;
  p.f1 = 5.0;
  config.scheme = p;
  config.distances = {2.54};
  config.ambients = {16.0};
  config.sigmas = {0.0};
  config.decoders = {Decoder::Dips};
  config.trials = 1;
  config.message_len = 64;

  const SweepResult result = run_sweep(config);
  REQUIRE(result.rows.size() == 1);
  CHECK(result.rows[0].ber_raw == 0.0);
  CHECK(result.rows[0].capacity == 1.0);
}

TEST_CASE("sweep rejects an empty grid") {
  SweepConfig config;
  config.geometry = bench_geometry();
  CHECK_THROWS_AS(run_sweep(config), Error);
}

TEST_CASE("on-off keying runs through the probe harness") {
  ProbeConfig probe = bench_probe();
  OokParams p;
  p.carrier = 15.0;
  p.enc1_len = 4;
  probe.scheme = p;
  probe.camera.fps = 30.0;  // one frame per half-period block
  const BerEstimate est = estimate_ber(probe, 2.54, 0.0);
  CHECK(est.mean_ber == 0.0);
}

TEST_CASE("on-off keying sweeps collapse the decoder axis") {
  SweepConfig config;
  config.geometry = bench_geometry();
  config.camera.fps = 30.0;
  OokParams p;
  p.carrier = 15.0;
  p.enc1_len = 4;
  config.scheme = p;
  config.distances = {2.54};
  config.ambients = {16.0};
  config.sigmas = {0.0};
  config.trials = 1;
  config.message_len = 32;

  const SweepResult result = run_sweep(config);
  REQUIRE(result.rows.size() == 1);  // one row despite three configured decoders
  CHECK(result.rows[0].ber_raw == 0.0);
  const std::string csv = sweep_to_csv(config, result);
  CHECK(csv.find(",threshold\n") != std::string::npos);
}

TEST_CASE("decoder names parse") {
  CHECK(parse_decoder("dips") == Decoder::Dips);
  CHECK(parse_decoder("mean") == Decoder::Mean);
  CHECK(parse_decoder("variance") == Decoder::Variance);
  CHECK_THROWS_AS(parse_decoder("fft"), Error);
}
