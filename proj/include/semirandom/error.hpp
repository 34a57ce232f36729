#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace semirandom {

// Library errors carry a short machine-readable code ("invalid-vertex",
// "strategy-fault", ...) next to the human-readable message. The CLI
// forwards the code in its JSON error records.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
    throw Error(std::move(code), message);
}

} // namespace semirandom
