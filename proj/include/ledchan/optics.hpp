#pragma once

#include <string>

#include "ledchan/error.hpp"

namespace ledchan {

/// Geometry of the keyboard indicator relative to a ceiling camera. The
/// camera sits on a horizontal plane `xa` meters above the LED; the keyboard
/// surface is tilted by `tilt_deg`, and the LED emits along the surface
/// normal.
struct GeometryConfig {
  double xa = 1.77;          ///< vertical drop from camera plane to LED, m
  double tilt_deg = 6.9474259;  ///< keyboard tilt against the desktop, degrees
  double on_len = 1.0;       ///< LED extent in the direction of change
  double ref_dist = 1.77;    ///< reference distance for the inverse-square term, m
  double beta = 1.0;         ///< brightness coefficient

  void validate() const;  // InvalidParams
};

/// Angle between the LED emission axis and the camera direction, degrees.
/// Grows with distance; slightly negative when the camera is nearly overhead
/// (the emission axis overshoots it). Throws DistanceBelowDrop for
/// dist < xa.
double emitting_angle(const GeometryConfig& g, double dist);

/// Projection of the LED extent onto the camera direction: on_len*cos(angle).
/// Accepts angles in [-90, 90] degrees and returns exactly 0 at the
/// boundary; AngleOutOfRange beyond it.
double effective_shine_length(const GeometryConfig& g, double angle_deg);

/// Brightness at the camera: beta * on_len * cos(emitting_angle) divided by
/// (dist/ref_dist)^2. Strictly decreasing in distance on the valid domain.
double received_brightness(const GeometryConfig& g, double dist);

/// Load a GeometryConfig from a flat key-value file. Recognized keys:
/// xa, tilt, on-len, ref-dist, beta ('-' and '_' are interchangeable);
/// missing keys keep their defaults.
GeometryConfig load_geometry(const std::string& path);

}  // namespace ledchan
