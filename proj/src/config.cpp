#include "eiscong/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eiscong {

Config load_config(const std::string& path) {
  Config cfg;
  std::string file = path;
  if (file.empty()) {
    if (const char* env = std::getenv("EISCONG_CONFIG")) file = env;
  }
  if (file.empty()) file = "eiscong.cfg";
  std::ifstream in(file);
  if (!in) {
    if (!path.empty()) throw std::runtime_error("config file not found: " + path);
    return cfg;
  }
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty()) continue;
    long v = std::stol(val);
    if (key == "q_precision")
      cfg.q_precision = v;
    else if (key == "p_precision")
      cfg.p_precision = v;
    else if (key == "m_max")
      cfg.m_max = v;
    else if (key == "threads")
      cfg.threads = v;
    else
      throw std::runtime_error("config: unknown key " + key);
  }
  return cfg;
}

}  // namespace eiscong
