#include "posit/format.hpp"

#include <cctype>

namespace posit {

std::string to_hex(const PositConfig& cfg, PositBits p) {
    static const char* digits = "0123456789abcdef";
    int width = (cfg.ps + 3) / 4;
    std::string out(width, '0');
    p &= cfg.mask();
    for (int i = width - 1; i >= 0; --i) {
        out[i] = digits[p & 0xf];
        p >>= 4;
    }
    return out;
}

PositBits parse_hex(const PositConfig& cfg, std::string_view text) {
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X'))
        text.remove_prefix(2);
    const int width = (cfg.ps + 3) / 4;
    if (text.size() != static_cast<std::size_t>(width))
        throw std::invalid_argument("expected " + std::to_string(width) +
                                    " hex digits for " + cfg.name());
    PositBits value = 0;
    for (char c : text) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument("malformed hex digit in pattern");
        value = (value << 4) | static_cast<PositBits>(d);
    }
    if (value > cfg.mask())
        throw std::invalid_argument("pattern exceeds " + std::to_string(cfg.ps) + " bits");
    return value;
}

}  // namespace posit
