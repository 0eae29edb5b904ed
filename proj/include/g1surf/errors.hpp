#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace g1 {

// Every failure the library reports carries a stable machine-readable code
// (e.g. "ParseError", "EdgeReuse", "NotCrossing") next to the human message.
// The CLI maps codes to exit codes; tests match on codes.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace g1
