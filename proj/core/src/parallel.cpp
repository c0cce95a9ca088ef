#include "minlen/parallel.hpp"

#include <cstdlib>
#include <string>

namespace minlen {

int worker_count() {
  static const int count = [] {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("MINLEN_THREADS")) {
      try {
        int cap = std::stoi(env);
        if (cap >= 1) n = std::min(n, cap);
      } catch (...) {
        // unparsable value: ignore
      }
    }
    return n;
  }();
  return count;
}

} // namespace minlen
