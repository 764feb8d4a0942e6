#pragma once

// Shared test-side helpers: independent oracles and a small process-capture
// wrapper for exercising the CLI binary.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace testhelpers {

struct GridContact {
  double r0 = 0.0;
  double theta_deg = 0.0;
  double r_resolution = 0.0;
};

// Brute-force contact oracle: scan R descending over [s, s+2L] and theta
// over [0, 90 deg]; report the outermost R whose sphere-to-lobe minimum
// distance falls to s.  Independent of the production nested solver.
inline GridContact grid_scan_contact(double s, double big_l, bool perpendicular,
                                     int nr = 10000, int ntheta = 10000) {
  std::vector<double> along(ntheta + 1), lateral(ntheta + 1);
  for (int j = 0; j <= ntheta; ++j) {
    const double th = std::numbers::pi / 2 * j / ntheta;
    const double trig = perpendicular ? std::sin(th) : std::cos(th);
    const double r = big_l * trig * trig;
    along[j] = r * std::cos(th);
    lateral[j] = r * std::sin(th);
  }
  const double s2 = s * s;
  const double lo = s;
  const double hi = s + 2.0 * big_l;
  const double step = (hi - lo) / nr;

  for (int i = 0; i <= nr; ++i) {
    const double r_axis = hi - i * step;
    bool touches = false;
    for (int j = 0; j <= ntheta; ++j) {
      const double dx = r_axis - along[j];
      if (dx * dx + lateral[j] * lateral[j] <= s2) {
        touches = true;
        break;
      }
    }
    if (touches) {
      // theta of the closest lobe point at this R
      double best = 1e300;
      int bj = 0;
      for (int j = 0; j <= ntheta; ++j) {
        const double dx = r_axis - along[j];
        const double d2 = dx * dx + lateral[j] * lateral[j];
        if (d2 < best) {
          best = d2;
          bj = j;
        }
      }
      return {r_axis, 90.0 * bj / ntheta, step};
    }
  }
  throw std::runtime_error("grid_scan_contact: no contact found");
}

struct ProcessResult {
  int exit_code = -1;
  std::string output;
};

// Run a shell command and capture stdout.
inline ProcessResult run_command(const std::string& command) {
  ProcessResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace testhelpers
