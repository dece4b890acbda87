#pragma once

#include <stdexcept>
#include <string>

namespace tycat {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& m) : Error("invalid-argument", m) {}
};
struct ArithmeticError : Error {
    explicit ArithmeticError(const std::string& m) : Error("arithmetic", m) {}
};
struct CapacityError : Error {
    explicit CapacityError(const std::string& m) : Error("capacity", m) {}
};
struct Unsupported : Error {
    explicit Unsupported(const std::string& m) : Error("unsupported", m) {}
};
struct ModularityViolation : Error {
    explicit ModularityViolation(const std::string& m) : Error("modularity-violation", m) {}
};
struct DegeneracyError : Error {
    explicit DegeneracyError(const std::string& m) : Error("degeneracy", m) {}
};

}  // namespace tycat
