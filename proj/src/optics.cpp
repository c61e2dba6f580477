#include "ledchan/optics.hpp"

#include <cmath>

#include "ledchan/kvfile.hpp"

namespace ledchan {

namespace {
constexpr double kPi = 3.14159265358979323846;
double to_radians(double deg) { return deg * kPi / 180.0; }
double to_degrees(double rad) { return rad * 180.0 / kPi; }
}  // namespace

void GeometryConfig::validate() const {
  if (xa <= 0.0) fail(Errc::InvalidParams, "xa must be > 0");
  if (tilt_deg < 0.0 || tilt_deg >= 90.0) fail(Errc::InvalidParams, "tilt must be in [0, 90)");
  if (on_len <= 0.0) fail(Errc::InvalidParams, "on_len must be > 0");
  if (ref_dist <= 0.0) fail(Errc::InvalidParams, "ref_dist must be > 0");
  if (beta <= 0.0) fail(Errc::InvalidParams, "beta must be > 0");
}

double emitting_angle(const GeometryConfig& g, double dist) {
  g.validate();
  if (dist < g.xa)
    fail(Errc::DistanceBelowDrop, "distance is shorter than the vertical drop");
  return to_degrees(std::acos(g.xa / dist)) - g.tilt_deg;
}

double effective_shine_length(const GeometryConfig& g, double angle_deg) {
  g.validate();
  if (angle_deg < -90.0 || angle_deg > 90.0)
    fail(Errc::AngleOutOfRange, "angle must be within [-90, 90] degrees");
  if (angle_deg == -90.0 || angle_deg == 90.0) return 0.0;
  return g.on_len * std::cos(to_radians(angle_deg));
}

double received_brightness(const GeometryConfig& g, double dist) {
  const double angle = emitting_angle(g, dist);
  if (angle >= 90.0)
    fail(Errc::BeyondEmissionCone, "camera sits outside the emission cone");
  const double ratio = dist / g.ref_dist;
  return g.beta * g.on_len * std::cos(to_radians(angle)) / (ratio * ratio);
}

GeometryConfig load_geometry(const std::string& path) {
  const KvMap kv = read_kv_file(path);
  GeometryConfig g;
  g.xa = kv_number(kv, "xa", g.xa);
  g.tilt_deg = kv_number(kv, "tilt", g.tilt_deg);
  g.on_len = kv_number(kv, "on_len", g.on_len);
  g.ref_dist = kv_number(kv, "ref_dist", g.ref_dist);
  g.beta = kv_number(kv, "beta", g.beta);
  g.validate();
  return g;
}

}  // namespace ledchan
