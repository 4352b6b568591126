#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

/// Error for inputs outside an operation's domain (zero divisors, zero
/// operators where a nonzero one is required, truncation too small, ...).
/// `name()` is a stable machine-readable tag; `what()` adds detail.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

} // namespace weyl
