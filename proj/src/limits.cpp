#include "xdescent/limits.hpp"

#include <cstdlib>
#include <string>

namespace xdescent {

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("XDESCENT_BUDGET")) {
    try {
      limits.work_limit = std::stoull(raw);
    } catch (...) {
      // ignore unparseable overrides, keep the default
    }
  }
  return limits;
}

}  // namespace xdescent
