// Python bindings for the simulator core. The extension is published as
// ledchan._core and re-exported by the ledchan package.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ledchan/analysis.hpp"
#include "ledchan/camera.hpp"
#include "ledchan/modem.hpp"
#include "ledchan/optics.hpp"
#include "ledchan/series_io.hpp"
#include "ledchan/signal.hpp"
#include "ledchan/yuvio.hpp"

namespace py = pybind11;
using namespace ledchan;

PYBIND11_MODULE(_core, m) {
  m.doc() = "LED-indicator covert channel simulator";

  py::register_exception<Error>(m, "Error");

  // ---- block signals -----------------------------------------------------

  py::enum_<Block>(m, "Block").value("OFF", Block::Off).value("ON", Block::On);

  py::class_<BlockSequence>(m, "BlockSequence")
      .def(py::init<>())
      .def(py::init([](int block_rate, const std::vector<Block>& states) {
             BlockSequence seq;
             seq.block_rate = block_rate;
             seq.states = states;
             return seq;
           }),
           py::arg("block_rate"), py::arg("states"))
      .def_readwrite("block_rate", &BlockSequence::block_rate)
      .def_readwrite("states", &BlockSequence::states)
      .def("duration_s", &BlockSequence::duration_s)
      .def("to_text", &BlockSequence::to_text)
      .def_static("parse", &BlockSequence::parse, py::arg("text"))
      .def("__len__", [](const BlockSequence& seq) { return seq.states.size(); })
      .def("__repr__", [](const BlockSequence& seq) {
        std::ostringstream out;
        out << "BlockSequence('" << seq.to_text() << "')";
        return out.str();
      });

  py::class_<RunStats>(m, "RunStats")
      .def_readonly("on_runs", &RunStats::on_runs)
      .def_readonly("off_runs", &RunStats::off_runs)
      .def_readonly("d_on", &RunStats::d_on)
      .def_readonly("d_off", &RunStats::d_off);

  py::enum_<CovertnessClass>(m, "CovertnessClass")
      .value("IMPERCEPTIBLE", CovertnessClass::Imperceptible)
      .value("TINY_DITHER", CovertnessClass::TinyDither)
      .value("PERCEPTIBLE", CovertnessClass::Perceptible);

  m.def("run_lengths", &run_lengths, py::arg("seq"));
  m.def("flicker_value", &flicker_value, py::arg("seq"));
  m.def("brightness_index", &brightness_index, py::arg("seq"));
  m.def("classify_covertness", &classify_covertness, py::arg("off_run_duration_ms"));

  // ---- modem ---------------------------------------------------------------

  py::class_<BfskParams>(m, "BfskParams")
      .def(py::init<>())
      .def(py::init([](int block_rate, int bit_blocks, double f0, double f1) {
             BfskParams p;
             p.block_rate = block_rate;
             p.bit_blocks = bit_blocks;
             p.f0 = f0;
             p.f1 = f1;
             return p;
           }),
           py::arg("block_rate") = 30, py::arg("bit_blocks") = 6, py::arg("f0") = 0.0,
           py::arg("f1") = 5.0)
      .def_readwrite("block_rate", &BfskParams::block_rate)
      .def_readwrite("bit_blocks", &BfskParams::bit_blocks)
      .def_readwrite("f0", &BfskParams::f0)
      .def_readwrite("f1", &BfskParams::f1)
      .def("validate", &BfskParams::validate)
      .def("period_blocks", &BfskParams::period_blocks, py::arg("f"))
      .def("dips_per_bit", &BfskParams::dips_per_bit, py::arg("f"));

  py::class_<OokParams>(m, "OokParams")
      .def(py::init<>())
      .def(py::init([](double carrier, int enc1_len) {
             OokParams p;
             p.carrier = carrier;
             p.enc1_len = enc1_len;
             return p;
           }),
           py::arg("carrier") = 25.0, py::arg("enc1_len") = 4)
      .def_readwrite("carrier", &OokParams::carrier)
      .def_readwrite("enc1_len", &OokParams::enc1_len)
      .def("block_rate", &OokParams::block_rate)
      .def("validate", &OokParams::validate);

  py::class_<LuminanceSeries>(m, "LuminanceSeries")
      .def(py::init<>())
      .def(py::init([](double sample_rate, const std::vector<double>& samples) {
             LuminanceSeries s;
             s.sample_rate = sample_rate;
             s.samples = samples;
             return s;
           }),
           py::arg("sample_rate"), py::arg("samples"))
      .def_readwrite("sample_rate", &LuminanceSeries::sample_rate)
      .def_readwrite("samples", &LuminanceSeries::samples)
      .def("__len__", [](const LuminanceSeries& s) { return s.samples.size(); });

  py::class_<BfskCalibration>(m, "BfskCalibration")
      .def_readonly("dip_threshold", &BfskCalibration::dip_threshold)
      .def_readonly("mean_split", &BfskCalibration::mean_split)
      .def_readonly("variance_split", &BfskCalibration::variance_split);

  m.def("parse_bits", &parse_bits, py::arg("text"));
  m.def("bits_to_string", &bits_to_string, py::arg("bits"));
  m.def("bfsk_encode", &bfsk_encode, py::arg("bits"), py::arg("params"));
  m.def("ook_encode", &ook_encode, py::arg("bits"), py::arg("params"));
  m.def("bfsk_decode_dips", &bfsk_decode_dips, py::arg("series"), py::arg("params"),
        py::arg("threshold"));
  m.def("bfsk_decode_mean", &bfsk_decode_mean, py::arg("series"), py::arg("params"),
        py::arg("split"));
  m.def("bfsk_decode_variance", &bfsk_decode_variance, py::arg("series"), py::arg("params"),
        py::arg("split"));
  m.def("bfsk_window_means", &bfsk_window_means, py::arg("series"), py::arg("params"));
  m.def("bfsk_window_variances", &bfsk_window_variances, py::arg("series"), py::arg("params"));
  m.def("bfsk_calibrate", &bfsk_calibrate, py::arg("params"), py::arg("on_level"),
        py::arg("off_level"));
  m.def("ook_decode", &ook_decode, py::arg("series"), py::arg("params"), py::arg("threshold"));
  m.def("ook_rate", &ook_rate, py::arg("carrier"), py::arg("enc1_len"));
  m.def("ook_flicker", &ook_flicker, py::arg("enc1_len"));
  m.def("bfsk_rate", &bfsk_rate, py::arg("f1"));
  m.def("bfsk_flicker", &bfsk_flicker, py::arg("carrier"), py::arg("f1"));

  // ---- optics ----------------------------------------------------------------

  py::class_<GeometryConfig>(m, "GeometryConfig")
      .def(py::init<>())
      .def(py::init([](double xa, double tilt_deg, double on_len, double ref_dist, double beta) {
             GeometryConfig g;
             g.xa = xa;
             g.tilt_deg = tilt_deg;
             g.on_len = on_len;
             g.ref_dist = ref_dist;
             g.beta = beta;
             return g;
           }),
           py::arg("xa") = 1.77, py::arg("tilt_deg") = 6.9474259, py::arg("on_len") = 1.0,
           py::arg("ref_dist") = 1.77, py::arg("beta") = 1.0)
      .def_readwrite("xa", &GeometryConfig::xa)
      .def_readwrite("tilt_deg", &GeometryConfig::tilt_deg)
      .def_readwrite("on_len", &GeometryConfig::on_len)
      .def_readwrite("ref_dist", &GeometryConfig::ref_dist)
      .def_readwrite("beta", &GeometryConfig::beta)
      .def("validate", &GeometryConfig::validate);

  m.def("emitting_angle", &emitting_angle, py::arg("geometry"), py::arg("dist"));
  m.def("effective_shine_length", &effective_shine_length, py::arg("geometry"),
        py::arg("angle_deg"));
  m.def("received_brightness", &received_brightness, py::arg("geometry"), py::arg("dist"));
  m.def("load_geometry", &load_geometry, py::arg("path"));

  // ---- camera ------------------------------------------------------------------

  py::class_<CameraConfig>(m, "CameraConfig")
      .def(py::init<>())
      .def(py::init([](double fps, double noise_sigma, double ambient, double gain,
                       std::uint64_t seed, double phase) {
             CameraConfig c;
             c.fps = fps;
             c.noise_sigma = noise_sigma;
             c.ambient = ambient;
             c.gain = gain;
             c.seed = seed;
             c.phase = phase;
             return c;
           }),
           py::arg("fps") = 25.0, py::arg("noise_sigma") = 0.0, py::arg("ambient") = 16.0,
           py::arg("gain") = 219.0, py::arg("seed") = 1, py::arg("phase") = 0.0)
      .def_readwrite("fps", &CameraConfig::fps)
      .def_readwrite("noise_sigma", &CameraConfig::noise_sigma)
      .def_readwrite("ambient", &CameraConfig::ambient)
      .def_readwrite("gain", &CameraConfig::gain)
      .def_readwrite("seed", &CameraConfig::seed)
      .def_readwrite("phase", &CameraConfig::phase)
      .def("validate", &CameraConfig::validate);

  m.def("sample_channel", &sample_channel, py::arg("seq"), py::arg("geometry"), py::arg("camera"),
        py::arg("dist"));
  m.def("nyquist_ok", &nyquist_ok, py::arg("f_carrier"), py::arg("fps"));
  m.def("series_to_csv", &series_to_csv, py::arg("series"), py::arg("provenance") = Provenance{});
  m.def("series_from_csv", &series_from_csv, py::arg("text"));

  // ---- raw frames -----------------------------------------------------------------

  py::enum_<PixelFormat>(m, "PixelFormat")
      .value("YUV444", PixelFormat::YUV444)
      .value("YUV422", PixelFormat::YUV422)
      .value("YUV420", PixelFormat::YUV420);

  py::class_<Roi>(m, "Roi")
      .def(py::init([](int left, int top, int width, int height) {
             return Roi{left, top, width, height};
           }),
           py::arg("left"), py::arg("top"), py::arg("width"), py::arg("height"))
      .def_readwrite("left", &Roi::left)
      .def_readwrite("top", &Roi::top)
      .def_readwrite("width", &Roi::width)
      .def_readwrite("height", &Roi::height);

  py::class_<FrameBuffer>(m, "FrameBuffer")
      .def_static("make", &FrameBuffer::make, py::arg("width"), py::arg("height"),
                  py::arg("format"), py::arg("fill_y") = 0, py::arg("fill_uv") = 128)
      .def_readwrite("width", &FrameBuffer::width)
      .def_readwrite("height", &FrameBuffer::height)
      .def_readwrite("format", &FrameBuffer::format)
      .def_readwrite("y", &FrameBuffer::y)
      .def_readwrite("u", &FrameBuffer::u)
      .def_readwrite("v", &FrameBuffer::v)
      .def("bytes", &FrameBuffer::bytes);

  py::class_<RawMeta>(m, "RawMeta")
      .def(py::init<>())
      .def_readwrite("width", &RawMeta::width)
      .def_readwrite("height", &RawMeta::height)
      .def_readwrite("format", &RawMeta::format)
      .def_readwrite("fps", &RawMeta::fps)
      .def_readwrite("frames", &RawMeta::frames);

  m.def("y_offset", &y_offset, py::arg("col"), py::arg("row"), py::arg("width"),
        "1-based luma offset");
  m.def("uv_offset_420", &uv_offset_420, py::arg("col"), py::arg("row"), py::arg("width"),
        "1-based 4:2:0 chroma offset");
  m.def("y_index", &y_index, py::arg("col"), py::arg("row"), py::arg("width"));
  m.def("uv_index_420", &uv_index_420, py::arg("col"), py::arg("row"), py::arg("width"));
  m.def("uv_index", &uv_index, py::arg("format"), py::arg("col"), py::arg("row"),
        py::arg("width"));
  m.def("frame_bytes", &frame_bytes, py::arg("format"), py::arg("width"), py::arg("height"));
  m.def("render_frame", &render_frame, py::arg("width"), py::arg("height"), py::arg("format"),
        py::arg("roi"), py::arg("led_y"), py::arg("ambient_y"));
  m.def("extract_roi_mean", &extract_roi_mean, py::arg("frame"), py::arg("roi"));
  m.def("write_raw", &write_raw, py::arg("path"), py::arg("frames"), py::arg("fps"));
  m.def("read_raw", &read_raw, py::arg("path"), py::arg("meta"));
  m.def("save_sidecar", &save_sidecar, py::arg("path"), py::arg("meta"));
  m.def("load_sidecar", &load_sidecar, py::arg("path"));
  m.def("frames_to_series", &frames_to_series, py::arg("frames"), py::arg("roi"), py::arg("fps"));

  // ---- analysis ----------------------------------------------------------------------

  py::enum_<Decoder>(m, "Decoder")
      .value("DIPS", Decoder::Dips)
      .value("MEAN", Decoder::Mean)
      .value("VARIANCE", Decoder::Variance);

  py::class_<ProbeConfig>(m, "ProbeConfig")
      .def(py::init<>())
      .def_readwrite("geometry", &ProbeConfig::geometry)
      .def_readwrite("camera", &ProbeConfig::camera)
      .def_readwrite("scheme", &ProbeConfig::scheme)
      .def_readwrite("decoder", &ProbeConfig::decoder)
      .def_readwrite("message_len", &ProbeConfig::message_len)
      .def_readwrite("trials", &ProbeConfig::trials)
      .def_readwrite("seed", &ProbeConfig::seed);

  py::class_<BerEstimate>(m, "BerEstimate")
      .def_readonly("mean_ber", &BerEstimate::mean_ber)
      .def_readonly("std_error", &BerEstimate::std_error)
      .def_readonly("ber_norm", &BerEstimate::ber_norm)
      .def_readonly("capacity", &BerEstimate::capacity);

  py::class_<FlickerTradeoffRow>(m, "FlickerTradeoffRow")
      .def_readonly("enc1_len", &FlickerTradeoffRow::enc1_len)
      .def_readonly("rate", &FlickerTradeoffRow::rate)
      .def_readonly("f_ook", &FlickerTradeoffRow::f_ook)
      .def_readonly("f_bfsk", &FlickerTradeoffRow::f_bfsk);

  py::class_<SweepConfig>(m, "SweepConfig")
      .def(py::init<>())
      .def_readwrite("geometry", &SweepConfig::geometry)
      .def_readwrite("camera", &SweepConfig::camera)
      .def_readwrite("scheme", &SweepConfig::scheme)
      .def_readwrite("distances", &SweepConfig::distances)
      .def_readwrite("ambients", &SweepConfig::ambients)
      .def_readwrite("sigmas", &SweepConfig::sigmas)
      .def_readwrite("decoders", &SweepConfig::decoders)
      .def_readwrite("message_len", &SweepConfig::message_len)
      .def_readwrite("trials", &SweepConfig::trials)
      .def_readwrite("master_seed", &SweepConfig::master_seed);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("distance", &SweepRow::distance)
      .def_readonly("ambient", &SweepRow::ambient)
      .def_readonly("noise_sigma", &SweepRow::noise_sigma)
      .def_readonly("decoder", &SweepRow::decoder)
      .def_readonly("ber_raw", &SweepRow::ber_raw)
      .def_readonly("ber_norm", &SweepRow::ber_norm)
      .def_readonly("capacity", &SweepRow::capacity);

  py::class_<SweepResult>(m, "SweepResult").def_readonly("rows", &SweepResult::rows);

  m.def("ber", &ber, py::arg("sent"), py::arg("received"));
  m.def("binary_entropy", &binary_entropy, py::arg("p"));
  m.def("capacity", &capacity, py::arg("p"));
  m.def("min_bits_per_info_bit", &min_bits_per_info_bit, py::arg("p"));
  m.def("estimate_ber", &estimate_ber, py::arg("probe"), py::arg("dist"), py::arg("noise_sigma"));
  m.def("effective_distance", &effective_distance, py::arg("probe"), py::arg("capacity_floor"),
        py::arg("d_min"), py::arg("d_max"));
  m.def("flicker_tradeoff_table", &flicker_tradeoff_table, py::arg("carrier"), py::arg("l_min"),
        py::arg("l_max"));
  m.def("run_sweep", &run_sweep, py::arg("config"));
  m.def("sweep_to_csv", &sweep_to_csv, py::arg("config"), py::arg("result"));
}
