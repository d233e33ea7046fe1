#ifndef SPLITDEL_ERRORS_HPP
#define SPLITDEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace splitdel {

class NotSplitError : public std::runtime_error {
public:
    NotSplitError() : std::runtime_error("graph is not a split graph") {}
};

class EmptyIndependentSideError : public std::runtime_error {
public:
    EmptyIndependentSideError() : std::runtime_error("independent side of the partition is empty") {}
};

/// A guarantee the branching analysis relies on did not hold at runtime.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

class TooLargeError : public std::runtime_error {
public:
    explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

class MalformedTraceError : public std::runtime_error {
public:
    MalformedTraceError(int line, const std::string& reason)
        : std::runtime_error("trace line " + std::to_string(line) + ": " + reason), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

} // namespace splitdel

#endif // SPLITDEL_ERRORS_HPP
