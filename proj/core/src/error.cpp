#include "koszulkit/error.hpp"

namespace koszulkit {

UnknownElementError::UnknownElementError(const std::string& id)
    : Error("unknown element '" + id + "'"), element_(id) {}

IncomparableError::IncomparableError(const std::string& x, const std::string& y)
    : Error("elements '" + x + "' and '" + y + "' are incomparable") {}

NotGradedError::NotGradedError(const std::string& x, const std::string& y, int shortest,
                               int longest)
    : Error("poset is not graded: interval [" + x + "," + y + "] has maximal chains of lengths " +
            std::to_string(shortest) + " and " + std::to_string(longest)),
      lower_(x),
      upper_(y),
      shortest_(shortest),
      longest_(longest) {}

}  // namespace koszulkit
