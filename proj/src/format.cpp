#include "newtres/format.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace newtres {

std::string format_double(double v) {
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (res.ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf.data(), res.ptr);
}

}  // namespace newtres
