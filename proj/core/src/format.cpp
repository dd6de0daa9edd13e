#include "dvr/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dvr {

std::string format_real(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex(Complex z)
{
    const double im = z.imag();
    std::string out = format_real(z.real());
    out += std::signbit(im) ? '-' : '+';
    out += format_real(std::abs(im));
    out += 'i';
    return out;
}

double parse_real(std::string_view text)
{
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double x = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, x);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("malformed real number: '" + std::string(text) + "'");
    }
    return x;
}

Complex parse_complex(std::string_view text)
{
    const std::string original(text);
    if (text.empty()) throw std::invalid_argument("empty complex number");
    if (text.back() != 'i') return {parse_real(text), 0.0};

    text.remove_suffix(1);
    // Split at the last sign that is not leading and not part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = text.size(); k-- > 1;) {
        if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_part = [&](std::string_view s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return parse_real(s);
    };
    try {
        if (split == std::string_view::npos) return {0.0, imag_part(text)};
        return {parse_real(text.substr(0, split)), imag_part(text.substr(split))};
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed complex number: '" + original + "'");
    }
}

} // namespace dvr
