#pragma once

#include <stdexcept>
#include <string>

namespace phopf {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Parse failures carry a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int col)
        : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          line(line), col(col) {}
    int line;
    int col;
};

}  // namespace phopf
