#include "collapsim/capacity.hpp"

#include <cstdlib>
#include <string>

namespace collapsim {

Capacity Capacity::from_env() {
  Capacity cap;
  if (const char* raw = std::getenv("COLLAPSIM_MAX_DIM")) {
    try {
      const long long value = std::stoll(raw);
      if (value > 0) {
        cap.max_hilbert_dim = static_cast<std::size_t>(value);
        int spins = 0;
        while ((std::size_t{1} << (spins + 1)) <= cap.max_hilbert_dim && spins + 1 < 63) {
          ++spins;
        }
        cap.max_quantum_spins = spins;
      }
    } catch (const std::exception&) {
      // unparseable value: keep defaults
    }
  }
  return cap;
}

}  // namespace collapsim
