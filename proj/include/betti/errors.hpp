#pragma once

#include <stdexcept>
#include <string>

namespace betti {

// Error taxonomy shared by the library and the CLI. exit_code() matches the
// process exit codes the CLI promises: 2 parameter, 3 capacity, 4 cone/span,
// 5 hypothesis violation.
class error : public std::runtime_error {
public:
    error(int exit_code, std::string kind, const std::string& what)
        : std::runtime_error(what), exit_code_(exit_code), kind_(std::move(kind)) {}
    int exit_code() const noexcept { return exit_code_; }
    const std::string& kind() const noexcept { return kind_; }

private:
    int exit_code_;
    std::string kind_;
};

struct parameter_error : error {
    explicit parameter_error(const std::string& what) : error(2, "parameter", what) {}
};

// Input demanded the exact-arithmetic path but got a float table (or vice versa).
struct mode_error : error {
    explicit mode_error(const std::string& what) : error(2, "mode", what) {}
};

// An enumeration would exceed the configured subset cap.
struct capacity_error : error {
    explicit capacity_error(const std::string& what) : error(3, "capacity", what) {}
};

// Table is not in the linear span of the pure diagrams.
struct span_error : error {
    explicit span_error(const std::string& what) : error(4, "span", what) {}
};

// Table is in the span but some coefficient is negative; carries the witness.
struct cone_error : error {
    cone_error(const std::string& what, int index, std::string value)
        : error(4, "cone", what), offending_index(index), offending_value(std::move(value)) {}
    int offending_index;
    std::string offending_value;
};

struct hypothesis_error : error {
    explicit hypothesis_error(const std::string& what) : error(5, "hypothesis", what) {}
};

}  // namespace betti
