#include "spincover/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace spincover {

std::string format_number(double value) {
    std::array<char, 32> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), result.ptr);
}

std::string format_number(Complex value) {
    const std::string im = format_number(value.imag());
    const bool explicit_sign = im.front() == '-' || im.front() == 'n' || im.front() == 'i';
    return format_number(value.real()) + (explicit_sign ? "" : "+") + im + "i";
}

} // namespace spincover
