#include <rforge/stats.hpp>

namespace rforge::stats {

Counters& counters() {
  static Counters c;
  return c;
}

}  // namespace rforge::stats
