#include "permloc/caps.hpp"

#include <cstdlib>
#include <string>

#include "permloc/errors.hpp"

namespace permloc {

Caps Caps::from_env() {
  Caps caps;
  const char* raw = std::getenv("PERMLOC_CAP");
  if (raw == nullptr || *raw == '\0') return caps;
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
  } catch (const std::exception&) {
    raise(Errc::UsageError, "PERMLOC_CAP must be a positive integer");
  }
  if (value < 1) raise(Errc::UsageError, "PERMLOC_CAP must be a positive integer");
  caps.sn_n_max = value;
  caps.coset_n_max = value;
  caps.bt_len_max = value;
  return caps;
}

}  // namespace permloc
