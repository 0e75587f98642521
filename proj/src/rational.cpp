#include "otg/rational.hpp"

namespace otg {

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

}  // namespace otg
