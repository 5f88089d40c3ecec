#include "lcgroups/version.hpp"

#include <string>

namespace lcg {

const char* engine_string() {
  static const std::string s = std::string(kEngineName) + " " + kVersion;
  return s.c_str();
}

}  // namespace lcg
