#include "ledchan/series_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace ledchan {

std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  if (std::strtod(buf, nullptr) != v) std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_series_csv(std::ostream& out, const LuminanceSeries& series,
                      const Provenance& provenance) {
  out << "# ledchan series\n";
  out << "# fps=" << fmt_num(series.sample_rate) << "\n";
  for (const auto& [key, value] : provenance) out << "# " << key << "=" << value << "\n";
  out << "frame,t_seconds,y\n";
  for (std::size_t k = 0; k < series.samples.size(); ++k) {
    out << k << ',' << fmt_num(static_cast<double>(k) / series.sample_rate) << ','
        << fmt_num(series.samples[k]) << '\n';
  }
}

std::string series_to_csv(const LuminanceSeries& series, const Provenance& provenance) {
  std::ostringstream out;
  write_series_csv(out, series, provenance);
  return out.str();
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

bool parse_number(const std::string& s, double& out) {
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) return false;
  while (*end == ' ' || *end == '\r' || *end == '\t') ++end;
  return *end == '\0';
}

}  // namespace

LuminanceSeries read_series_csv(std::istream& in) {
  LuminanceSeries series;
  series.sample_rate = 0.0;
  double fps_comment = 0.0;
  std::vector<double> times;

  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto pos = line.find("fps=");
      if (pos != std::string::npos) {
        double fps = 0.0;
        if (parse_number(line.substr(pos + 4), fps) && fps > 0.0) fps_comment = fps;
      }
      continue;
    }
    const auto fields = split_csv(line);
    double t = 0.0, y = 0.0;
    if (fields.size() == 3) {
      double frame = 0.0;
      if (!parse_number(fields[0], frame)) continue;  // header row
      if (!parse_number(fields[1], t) || !parse_number(fields[2], y))
        fail(Errc::ParseError, "bad series row: '" + line + "'");
    } else if (fields.size() == 2) {
      if (!parse_number(fields[0], t)) continue;  // header row
      if (!parse_number(fields[1], y)) fail(Errc::ParseError, "bad series row: '" + line + "'");
    } else {
      fail(Errc::ParseError, "series rows need 2 or 3 columns: '" + line + "'");
    }
    times.push_back(t);
    series.samples.push_back(y);
  }

  if (series.samples.empty()) fail(Errc::ParseError, "no data rows in series");
  if (fps_comment > 0.0) {
    series.sample_rate = fps_comment;
  } else if (times.size() >= 2 && times.back() > times.front()) {
    series.sample_rate = static_cast<double>(times.size() - 1) / (times.back() - times.front());
  } else {
    fail(Errc::ParseError, "cannot infer sample rate: no fps comment and no usable timestamps");
  }
  return series;
}

LuminanceSeries series_from_csv(const std::string& text) {
  std::istringstream in(text);
  return read_series_csv(in);
}

}  // namespace ledchan
