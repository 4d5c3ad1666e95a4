#include "petersson/rat.hpp"

#include <ostream>

namespace petersson {

std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.str(); }

}  // namespace petersson
