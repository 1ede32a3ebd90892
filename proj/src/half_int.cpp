#include "s3nf/half_int.hpp"

#include <stdexcept>

namespace s3nf {

int HalfInt::as_int() const {
  if (!is_integer()) throw std::logic_error("HalfInt::as_int on half-integer " + str());
  return twice / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

}  // namespace s3nf
