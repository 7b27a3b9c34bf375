#include "heis/gauss.hpp"
#include "heis/rational.hpp"

#include <ostream>

namespace heis {

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

std::ostream& operator<<(std::ostream& os, const GaussRational& v) { return os << v.to_string(); }

} // namespace heis
