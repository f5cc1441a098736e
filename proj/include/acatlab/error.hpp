#pragma once

#include <stdexcept>
#include <string>

namespace acatlab {

enum class ErrorKind {
    Input,          // malformed group spec, bad table, unknown name
    CapExceeded,    // an enumeration would exceed a configured cap
    Hypothesis,     // a theorem's hypothesis does not hold for this input
    Invariant,      // a proved statement failed: implementation defect
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace acatlab
