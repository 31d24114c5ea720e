#include "cyclab/errors.hpp"

namespace cyclab {

void check_resource(std::size_t ambient, const std::string& what) {
  if (ambient > kResourceLimit) {
    // Sizes are often saturated at limit + 1.
    const std::string size = ambient == kResourceLimit + 1 ? "more than " + std::to_string(kResourceLimit)
                                                           : std::to_string(ambient);
    throw ResourceGuardError(what + " needs " + size + " basis elements (limit " + std::to_string(kResourceLimit) +
                             ")");
  }
}

}  // namespace cyclab
