#pragma once

#include <stdexcept>
#include <string>

namespace gsq {

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TorusParams {
    int p = 3;
    int q = 2;

    void validate() const;
    int order() const { return p * q; }
    int genus() const { return (p - 1) * (q - 1); }
    std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
    friend bool operator==(const TorusParams&, const TorusParams&) = default;
};

} // namespace gsq
