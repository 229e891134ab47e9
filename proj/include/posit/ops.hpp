#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posit {

enum class ArithOp { Add, Sub, Mul, Div, Sqrt };

enum class Ordering { Less, Equal, Greater, Unordered };

inline std::string_view op_name(ArithOp op) {
    switch (op) {
        case ArithOp::Add: return "add";
        case ArithOp::Sub: return "sub";
        case ArithOp::Mul: return "mul";
        case ArithOp::Div: return "div";
        case ArithOp::Sqrt: return "sqrt";
    }
    return "?";
}

inline ArithOp op_from_name(std::string_view name) {
    if (name == "add") return ArithOp::Add;
    if (name == "sub") return ArithOp::Sub;
    if (name == "mul") return ArithOp::Mul;
    if (name == "div") return ArithOp::Div;
    if (name == "sqrt") return ArithOp::Sqrt;
    throw std::invalid_argument("unknown operation: " + std::string(name));
}

}  // namespace posit
