// Command line front end: encode / decode / simulate / sweep / geometry /
// flicker / distance subcommands composing the library pipeline. Data goes
// to stdout (or --out), diagnostics to stderr. Exit codes: 0 ok, 1 error,
// 2 when no effective distance is reachable.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ledchan/analysis.hpp"
#include "ledchan/camera.hpp"
#include "ledchan/kvfile.hpp"
#include "ledchan/modem.hpp"
#include "ledchan/optics.hpp"
#include "ledchan/series_io.hpp"
#include "ledchan/signal.hpp"
#include "ledchan/yuvio.hpp"

namespace {

using namespace ledchan;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// ---- config file support ----------------------------------------------
// Precedence: command line flags > config file values > built-in defaults.
// The config file is flat "key = value" text; keys are the long option
// names without the leading dashes ('-' and '_' interchangeable).

std::string kv_key(const std::string& flag) { return flag.substr(flag.find_first_not_of('-')); }

template <typename T>
void kv_override(const CLI::App& cmd, const KvMap& kv, const std::string& flag, T& var) {
  if (cmd.count(flag) > 0) return;  // explicit flag wins
  const auto value = kv_get(kv, kv_key(flag));
  if (!value) return;
  std::istringstream in(*value);
  T parsed{};
  if (!(in >> parsed)) fail(Errc::ParseError, "config value for '" + flag + "': '" + *value + "'");
  var = parsed;
}

void kv_override(const CLI::App& cmd, const KvMap& kv, const std::string& flag, std::string& var) {
  if (cmd.count(flag) > 0) return;
  if (const auto value = kv_get(kv, kv_key(flag))) var = *value;
}

// ---- shared flag groups -------------------------------------------------

struct GeometryFlags {
  double xa = 1.77;
  double tilt = 6.9474259;
  double on_len = 1.0;
  double ref_dist = 1.77;
  double beta = 1.0;

  void attach(CLI::App& cmd) {
    cmd.add_option("--xa", xa, "vertical drop from camera plane to LED, m");
    cmd.add_option("--tilt", tilt, "keyboard tilt against the desktop, degrees");
    cmd.add_option("--on-len", on_len, "LED length in the direction of change");
    cmd.add_option("--ref-dist", ref_dist, "reference distance for the inverse-square term, m");
    cmd.add_option("--beta", beta, "brightness coefficient");
  }
  void merge(const CLI::App& cmd, const KvMap& kv) {
    kv_override(cmd, kv, "--xa", xa);
    kv_override(cmd, kv, "--tilt", tilt);
    kv_override(cmd, kv, "--on-len", on_len);
    kv_override(cmd, kv, "--ref-dist", ref_dist);
    kv_override(cmd, kv, "--beta", beta);
  }
  GeometryConfig build() const {
    GeometryConfig g;
    g.xa = xa;
    g.tilt_deg = tilt;
    g.on_len = on_len;
    g.ref_dist = ref_dist;
    g.beta = beta;
    g.validate();
    return g;
  }
  std::string echo() const {
    return "xa=" + fmt_num(xa) + " tilt=" + fmt_num(tilt) + " on-len=" + fmt_num(on_len) +
           " ref-dist=" + fmt_num(ref_dist) + " beta=" + fmt_num(beta);
  }
};

struct CameraFlags {
  double fps = 30.0;
  double noise_sigma = 0.0;
  double ambient = 16.0;
  double gain = 219.0;
  std::uint64_t seed = 1;
  double phase = 0.0;

  void attach(CLI::App& cmd) {
    cmd.add_option("--fps", fps, "camera frames per second");
    cmd.add_option("--noise-sigma", noise_sigma, "luminance noise standard deviation");
    cmd.add_option("--ambient", ambient, "ambient luminance offset, 0..255");
    cmd.add_option("--gain", gain, "luminance per unit received brightness");
    cmd.add_option("--seed", seed, "RNG master seed");
    cmd.add_option("--phase", phase, "sampling phase offset, seconds");
  }
  void merge(const CLI::App& cmd, const KvMap& kv) {
    kv_override(cmd, kv, "--fps", fps);
    kv_override(cmd, kv, "--noise-sigma", noise_sigma);
    kv_override(cmd, kv, "--ambient", ambient);
    kv_override(cmd, kv, "--gain", gain);
    kv_override(cmd, kv, "--seed", seed);
    kv_override(cmd, kv, "--phase", phase);
  }
  CameraConfig build() const {
    CameraConfig c;
    c.fps = fps;
    c.noise_sigma = noise_sigma;
    c.ambient = ambient;
    c.gain = gain;
    c.seed = seed;
    c.phase = phase;
    c.validate();
    return c;
  }
  std::string echo() const {
    return "fps=" + fmt_num(fps) + " noise-sigma=" + fmt_num(noise_sigma) +
           " ambient=" + fmt_num(ambient) + " gain=" + fmt_num(gain) +
           " seed=" + std::to_string(seed) + " phase=" + fmt_num(phase);
  }
};

struct SchemeFlags {
  std::string scheme = "bfsk";
  double f0 = 0.0;
  double f1 = 5.0;
  int block_rate = 30;
  int bit_blocks = 6;
  double carrier = 25.0;  // --F
  int enc1_len = 4;       // --L

  void attach(CLI::App& cmd) {
    cmd.add_option("--scheme", scheme, "modulation scheme: bfsk or ook")
        ->check(CLI::IsMember({"bfsk", "ook"}));
    cmd.add_option("--f0", f0, "bfsk: dip frequency for bit 0, Hz");
    cmd.add_option("--f1", f1, "bfsk: dip frequency for bit 1, Hz");
    cmd.add_option("--block-rate", block_rate, "bfsk: LED state changes per second");
    cmd.add_option("--bit-blocks", bit_blocks, "bfsk: blocks per bit");
    cmd.add_option("--F,--carrier", carrier, "ook: carrier frequency, Hz");
    cmd.add_option("--L,--enc1-len", enc1_len, "ook: codeword length for plain bit 1");
  }
  void merge(const CLI::App& cmd, const KvMap& kv) {
    kv_override(cmd, kv, "--scheme", scheme);
    kv_override(cmd, kv, "--f0", f0);
    kv_override(cmd, kv, "--f1", f1);
    kv_override(cmd, kv, "--block-rate", block_rate);
    kv_override(cmd, kv, "--bit-blocks", bit_blocks);
    kv_override(cmd, kv, "--carrier", carrier);
    kv_override(cmd, kv, "--enc1-len", enc1_len);
  }
  SchemeParams build() const {
    if (scheme == "ook") {
      OokParams p;
      p.carrier = carrier;
      p.enc1_len = enc1_len;
      p.validate();
      return p;
    }
    BfskParams p;
    p.block_rate = block_rate;
    p.bit_blocks = bit_blocks;
    p.f0 = f0;
    p.f1 = f1;
    p.validate();
    return p;
  }
  double max_carrier() const { return scheme == "ook" ? carrier : std::max(f0, f1); }
  std::string echo() const {
    if (scheme == "ook")
      return "ook carrier=" + fmt_num(carrier) + " enc1-len=" + std::to_string(enc1_len);
    return "bfsk block-rate=" + std::to_string(block_rate) +
           " bit-blocks=" + std::to_string(bit_blocks) + " f0=" + fmt_num(f0) +
           " f1=" + fmt_num(f1);
  }
};

// ---- small parsing helpers ----------------------------------------------

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end == item.c_str() || *end != '\0')
      fail(Errc::ParseError, "bad number in list: '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) fail(Errc::ParseError, "empty list");
  return values;
}

Roi parse_roi(const std::string& text) {
  const std::vector<double> v = parse_list(text);
  if (v.size() != 4) fail(Errc::ParseError, "--roi needs L,T,W,H");
  Roi roi;
  roi.left = static_cast<int>(v[0]);
  roi.top = static_cast<int>(v[1]);
  roi.width = static_cast<int>(v[2]);
  roi.height = static_cast<int>(v[3]);
  return roi;
}

Bits bits_from_flag_or_stdin(const CLI::App& cmd, const std::string& bits_flag) {
  if (cmd.count("--bits") > 0) return parse_bits(bits_flag);
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return parse_bits(buf.str());
}

/// stdout unless --out was given.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path, std::ios::trunc);
    if (!file_) fail(Errc::IoError, "cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

double midrange(const std::vector<double>& values) {
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  return (*mn + *mx) / 2.0;
}

Bits decode_series(const LuminanceSeries& series, const SchemeFlags& scheme,
                   const std::string& method, double threshold, double split, double var_split) {
  const SchemeParams params = scheme.build();
  if (std::holds_alternative<OokParams>(params)) {
    const double thr = std::isnan(threshold) ? midrange(series.samples) : threshold;
    return ook_decode(series, std::get<OokParams>(params), thr);
  }
  const BfskParams& p = std::get<BfskParams>(params);
  if (method == "mean") {
    const double s = std::isnan(split) ? midrange(bfsk_window_means(series, p)) : split;
    return bfsk_decode_mean(series, p, s);
  }
  if (method == "variance") {
    const double s =
        std::isnan(var_split) ? midrange(bfsk_window_variances(series, p)) : var_split;
    return bfsk_decode_variance(series, p, s);
  }
  const double thr = std::isnan(threshold) ? midrange(series.samples) : threshold;
  return bfsk_decode_dips(series, p, thr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LED-indicator covert channel simulator and analyzer"};
  app.require_subcommand(1);

  std::string config_path;

  // encode
  auto* encode_cmd = app.add_subcommand("encode", "modulate bits into a block sequence");
  SchemeFlags encode_scheme;
  std::string encode_bits;
  std::string encode_out;
  encode_cmd->add_option("--config", config_path, "key = value config file");
  encode_scheme.attach(*encode_cmd);
  encode_cmd->add_option("--bits", encode_bits, "message bits, '0'/'1' (default: stdin)");
  encode_cmd->add_option("--out", encode_out, "write output to a file instead of stdout");

  // decode
  auto* decode_cmd = app.add_subcommand("decode", "demodulate a luminance series back into bits");
  SchemeFlags decode_scheme;
  std::string decode_in, decode_frames, decode_sidecar, decode_method = "dips",
                                                        decode_roi = "28,14,8,8", decode_out;
  double decode_threshold = kNaN, decode_split = kNaN, decode_var_split = kNaN;
  decode_cmd->add_option("--config", config_path, "key = value config file");
  decode_scheme.attach(*decode_cmd);
  decode_cmd->add_option("--in", decode_in, "series CSV file (default: stdin)");
  decode_cmd->add_option("--from-frames", decode_frames, "raw planar YUV file to decode");
  decode_cmd->add_option("--sidecar", decode_sidecar, "metadata sidecar (default: <frames>.meta)");
  decode_cmd->add_option("--roi", decode_roi, "LED rectangle L,T,W,H in frame pixels");
  decode_cmd->add_option("--method", decode_method, "bfsk discriminator: dips, mean or variance")
      ->check(CLI::IsMember({"dips", "mean", "variance"}));
  decode_cmd->add_option("--threshold", decode_threshold,
                         "dip/ook luminance threshold (default: series midrange)");
  decode_cmd->add_option("--split", decode_split,
                         "mean discriminator split level (default: window-mean midrange)");
  decode_cmd->add_option("--var-split", decode_var_split,
                         "variance discriminator split (default: window-variance midrange)");
  decode_cmd->add_option("--out", decode_out, "write output to a file instead of stdout");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "push a message through the simulated channel");
  SchemeFlags sim_scheme;
  GeometryFlags sim_geometry;
  CameraFlags sim_camera;
  std::string sim_bits, sim_sequence, sim_out, sim_frames, sim_format = "yuv420",
                                                           sim_roi = "28,14,8,8";
  double sim_dist = 2.54;
  int sim_width = 64, sim_height = 36;
  sim_cmd->add_option("--config", config_path, "key = value config file");
  sim_scheme.attach(*sim_cmd);
  sim_geometry.attach(*sim_cmd);
  sim_camera.attach(*sim_cmd);
  auto* sim_bits_opt =
      sim_cmd->add_option("--bits", sim_bits, "message bits to encode (default: stdin)");
  sim_cmd->add_option("--sequence", sim_sequence, "pre-encoded '<rate>:<pattern>' block sequence")
      ->excludes(sim_bits_opt);
  sim_cmd->add_option("--dist", sim_dist, "LED-to-camera distance, m");
  sim_cmd->add_option("--out", sim_out, "write series CSV to a file instead of stdout");
  sim_cmd->add_option("--emit-frames", sim_frames,
                      "also render raw planar YUV frames to this path (+ .meta sidecar)");
  sim_cmd->add_option("--frame-width", sim_width, "rendered frame width");
  sim_cmd->add_option("--frame-height", sim_height, "rendered frame height");
  sim_cmd->add_option("--format", sim_format, "rendered pixel format: yuv444/yuv422/yuv420");
  sim_cmd->add_option("--roi", sim_roi, "LED rectangle L,T,W,H in frame pixels");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "BER sweep over distance/ambient/noise/decoder");
  SchemeFlags sweep_scheme;
  GeometryFlags sweep_geometry;
  CameraFlags sweep_camera;
  std::string sweep_dists = "2.54,3.27,4.02,5.08", sweep_ambients = "16", sweep_sigmas = "8",
              sweep_decoders = "dips,mean,variance", sweep_out;
  int sweep_trials = 16, sweep_msglen = 256;
  sweep_cmd->add_option("--config", config_path, "key = value config file");
  sweep_scheme.attach(*sweep_cmd);
  sweep_geometry.attach(*sweep_cmd);
  sweep_camera.attach(*sweep_cmd);
  sweep_cmd->add_option("--dists", sweep_dists, "comma list of distances, m");
  sweep_cmd->add_option("--ambients", sweep_ambients, "comma list of ambient offsets");
  sweep_cmd->add_option("--sigmas", sweep_sigmas, "comma list of noise sigmas");
  sweep_cmd->add_option("--decoders", sweep_decoders, "comma list of discriminators");
  sweep_cmd->add_option("--trials", sweep_trials, "Monte-Carlo messages per cell");
  sweep_cmd->add_option("--message-len", sweep_msglen, "bits per Monte-Carlo message");
  sweep_cmd->add_option("--out", sweep_out, "write CSV to a file instead of stdout");

  // geometry
  auto* geo_cmd = app.add_subcommand("geometry", "emitting angle and brightness per distance");
  GeometryFlags geo_geometry;
  std::string geo_dists, geo_out;
  geo_cmd->add_option("--config", config_path, "key = value config file");
  geo_geometry.attach(*geo_cmd);
  geo_cmd->add_option("--dists", geo_dists, "comma list of distances, m")->required();
  geo_cmd->add_option("--out", geo_out, "write CSV to a file instead of stdout");

  // flicker
  auto* flicker_cmd =
      app.add_subcommand("flicker", "rate/flicker tradeoff of on-off keying vs frequency pairs");
  double flicker_carrier = 25.0;
  int flicker_lmin = 1, flicker_lmax = 50;
  std::string flicker_out;
  flicker_cmd->add_option("--F,--carrier", flicker_carrier, "carrier frequency, Hz");
  flicker_cmd->add_option("--Lmin", flicker_lmin, "smallest codeword length");
  flicker_cmd->add_option("--Lmax", flicker_lmax, "largest codeword length");
  flicker_cmd->add_option("--out", flicker_out, "write CSV to a file instead of stdout");

  // distance
  auto* dist_cmd =
      app.add_subcommand("distance", "largest distance whose capacity clears the floor");
  SchemeFlags dist_scheme;
  GeometryFlags dist_geometry;
  CameraFlags dist_camera;
  std::string dist_method = "dips", dist_out;
  double dist_floor = 1.0 / 12.0, dist_min = 2.54, dist_max = 5.08;
  int dist_trials = 16, dist_msglen = 256;
  dist_cmd->add_option("--config", config_path, "key = value config file");
  dist_scheme.attach(*dist_cmd);
  dist_geometry.attach(*dist_cmd);
  dist_camera.attach(*dist_cmd);
  dist_cmd->add_option("--floor", dist_floor, "capacity floor, bits/symbol");
  dist_cmd->add_option("--d-min", dist_min, "search range start, m");
  dist_cmd->add_option("--d-max", dist_max, "search range end, m");
  dist_cmd->add_option("--trials", dist_trials, "Monte-Carlo messages per probe");
  dist_cmd->add_option("--message-len", dist_msglen, "bits per Monte-Carlo message");
  dist_cmd->add_option("--method", dist_method, "bfsk discriminator")
      ->check(CLI::IsMember({"dips", "mean", "variance"}));
  dist_cmd->add_option("--out", dist_out, "write output to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    const KvMap kv = config_path.empty() ? KvMap{} : read_kv_file(config_path);

    if (encode_cmd->parsed()) {
      encode_scheme.merge(*encode_cmd, kv);
      const Bits bits = bits_from_flag_or_stdin(*encode_cmd, encode_bits);
      const SchemeParams params = encode_scheme.build();
      const BlockSequence seq = std::holds_alternative<OokParams>(params)
                                    ? ook_encode(bits, std::get<OokParams>(params))
                                    : bfsk_encode(bits, std::get<BfskParams>(params));
      Output out(encode_out);
      out.stream() << seq.to_text() << "\n";
      return 0;
    }

    if (decode_cmd->parsed()) {
      decode_scheme.merge(*decode_cmd, kv);
      LuminanceSeries series;
      if (!decode_frames.empty()) {
        const std::string sidecar =
            decode_sidecar.empty() ? decode_frames + ".meta" : decode_sidecar;
        const RawMeta meta = load_sidecar(sidecar);
        const auto frames = read_raw(decode_frames, meta);
        series = frames_to_series(frames, parse_roi(decode_roi), meta.fps);
      } else if (!decode_in.empty() && decode_in != "-") {
        std::ifstream in(decode_in);
        if (!in) fail(Errc::IoError, "cannot open '" + decode_in + "'");
        series = read_series_csv(in);
      } else {
        series = read_series_csv(std::cin);
      }
      const Bits bits = decode_series(series, decode_scheme, decode_method, decode_threshold,
                                      decode_split, decode_var_split);
      Output out(decode_out);
      out.stream() << bits_to_string(bits) << "\n";
      return 0;
    }

    if (sim_cmd->parsed()) {
      sim_scheme.merge(*sim_cmd, kv);
      sim_geometry.merge(*sim_cmd, kv);
      sim_camera.merge(*sim_cmd, kv);
      kv_override(*sim_cmd, kv, "--dist", sim_dist);

      BlockSequence seq;
      if (sim_cmd->count("--sequence") > 0) {
        seq = BlockSequence::parse(sim_sequence);
      } else {
        const Bits bits = bits_from_flag_or_stdin(*sim_cmd, sim_bits);
        const SchemeParams params = sim_scheme.build();
        seq = std::holds_alternative<OokParams>(params)
                  ? ook_encode(bits, std::get<OokParams>(params))
                  : bfsk_encode(bits, std::get<BfskParams>(params));
      }

      const GeometryConfig geometry = sim_geometry.build();
      const CameraConfig camera = sim_camera.build();
      if (!nyquist_ok(sim_scheme.max_carrier(), camera.fps))
        std::cerr << "warning: carrier " << fmt_num(sim_scheme.max_carrier())
                  << " Hz exceeds fps/2 = " << fmt_num(camera.fps / 2.0)
                  << " Hz; decoding will alias\n";

      const LuminanceSeries series = sample_channel(seq, geometry, camera, sim_dist);

      if (!sim_frames.empty()) {
        const PixelFormat format = parse_pixel_format(sim_format);
        const Roi roi = parse_roi(sim_roi);
        const auto ambient_byte =
            static_cast<std::uint8_t>(std::clamp(std::round(camera.ambient), 0.0, 255.0));
        std::vector<FrameBuffer> frames;
        frames.reserve(series.samples.size());
        for (double y : series.samples)
          frames.push_back(render_frame(sim_width, sim_height, format, roi,
                                        static_cast<std::uint8_t>(y), ambient_byte));
        const RawMeta meta = write_raw(sim_frames, frames, camera.fps);
        save_sidecar(sim_frames + ".meta", meta);
        std::cerr << "wrote " << meta.frames << " " << to_string(meta.format) << " frames to "
                  << sim_frames << "\n";
      }

      Output out(sim_out);
      write_series_csv(out.stream(), series,
                       {{"command", "simulate"},
                        {"scheme", sim_scheme.echo()},
                        {"geometry", sim_geometry.echo()},
                        {"camera", sim_camera.echo()},
                        {"dist", fmt_num(sim_dist)}});
      return 0;
    }

    if (sweep_cmd->parsed()) {
      sweep_scheme.merge(*sweep_cmd, kv);
      sweep_geometry.merge(*sweep_cmd, kv);
      sweep_camera.merge(*sweep_cmd, kv);

      SweepConfig config;
      config.geometry = sweep_geometry.build();
      config.camera = sweep_camera.build();
      config.scheme = sweep_scheme.build();
      config.distances = parse_list(sweep_dists);
      config.ambients = parse_list(sweep_ambients);
      config.sigmas = parse_list(sweep_sigmas);
      config.decoders.clear();
      std::istringstream decs(sweep_decoders);
      std::string name;
      while (std::getline(decs, name, ',')) config.decoders.push_back(parse_decoder(name));
      config.trials = sweep_trials;
      config.message_len = sweep_msglen;
      config.master_seed = sweep_camera.seed;

      const SweepResult result = run_sweep(config);
      Output out(sweep_out);
      out.stream() << sweep_to_csv(config, result);
      return 0;
    }

    if (geo_cmd->parsed()) {
      geo_geometry.merge(*geo_cmd, kv);
      const GeometryConfig geometry = geo_geometry.build();
      Output out(geo_out);
      out.stream() << "# ledchan geometry\n";
      out.stream() << "# geometry " << geo_geometry.echo() << "\n";
      out.stream() << "distance_m,angle_deg,brightness\n";
      for (double d : parse_list(geo_dists))
        out.stream() << fmt_num(d) << ',' << fmt_num(emitting_angle(geometry, d)) << ','
                     << fmt_num(received_brightness(geometry, d)) << '\n';
      return 0;
    }

    if (flicker_cmd->parsed()) {
      const auto rows = flicker_tradeoff_table(flicker_carrier, flicker_lmin, flicker_lmax);
      Output out(flicker_out);
      out.stream() << "# ledchan flicker\n";
      out.stream() << "# carrier=" << fmt_num(flicker_carrier) << "\n";
      out.stream() << "enc1_len,rate_bits_s,f_ook,f_bfsk,bfsk_lower\n";
      for (const auto& row : rows)
        out.stream() << row.enc1_len << ',' << fmt_num(row.rate) << ',' << fmt_num(row.f_ook)
                     << ',' << fmt_num(row.f_bfsk) << ','
                     << (row.f_bfsk < row.f_ook ? "true" : "false") << '\n';
      return 0;
    }

    if (dist_cmd->parsed()) {
      dist_scheme.merge(*dist_cmd, kv);
      dist_geometry.merge(*dist_cmd, kv);
      dist_camera.merge(*dist_cmd, kv);

      ProbeConfig probe;
      probe.geometry = dist_geometry.build();
      probe.camera = dist_camera.build();
      probe.scheme = dist_scheme.build();
      probe.decoder = parse_decoder(dist_method);
      probe.message_len = dist_msglen;
      probe.trials = dist_trials;
      probe.seed = dist_camera.seed;

      const double bound = effective_distance(probe, dist_floor, dist_min, dist_max);
      Output out(dist_out);
      out.stream() << "# ledchan distance\n";
      out.stream() << "# scheme=" << dist_scheme.echo() << "\n";
      out.stream() << "# geometry " << dist_geometry.echo() << "\n";
      out.stream() << "# camera " << dist_camera.echo() << "\n";
      out.stream() << "# floor=" << fmt_num(dist_floor) << " d-min=" << fmt_num(dist_min)
                   << " d-max=" << fmt_num(dist_max) << "\n";
      out.stream() << "effective_distance_m\n" << fmt_num(bound) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::NotReachable ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
