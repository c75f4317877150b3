#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "landau/phasespace.hpp"

namespace landau::cli {

enum ExitCode { ok = 0, check_failed = 1, usage_error = 2, io_error = 3 };

struct Config {
  Params params;
  std::string format = "csv";
  double quad_tol = 1e-10;            // order vs order+8 agreement for numeric marginals
  double verify_tolerance_scale = 1;  // multiplies every suite tolerance
  void validate() const;
};

/// Reads a JSON config; keys not present keep their current values.
/// Throws std::ios_base::failure when the file cannot be read and
/// std::invalid_argument for malformed content.
void load_config(const std::string& path, Config& cfg);
/// LANDAU_QUAD_TOL and LANDAU_VERIFY_TOL_SCALE; tolerance knobs only.
void apply_env(Config& cfg);

/// 15 significant digits; "re+imi" when the imaginary part is nonzero.
std::string format_value(cplx z);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace landau::cli
