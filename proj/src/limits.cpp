#include "ocw/limits.hpp"

namespace ocw {

Limits& limits() {
  static Limits instance;
  return instance;
}

}  // namespace ocw
