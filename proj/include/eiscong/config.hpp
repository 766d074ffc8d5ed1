#pragma once

#include <string>

namespace eiscong {

/// Runtime defaults, overridable by a key=value config file and by CLI flags.
struct Config {
  long q_precision = 0;   // 0: use max(200, 4k) per weight
  long p_precision = 12;  // M: ideals carry p^M
  long m_max = 8;         // cohomology level cap
  long threads = 0;       // 0: hardware concurrency
};

/// Loads from `path` if nonempty, else from $EISCONG_CONFIG, else from
/// ./eiscong.cfg when present; missing files yield defaults.
Config load_config(const std::string& path = "");

}  // namespace eiscong
