#pragma once

#include <stdexcept>
#include <string>

namespace sympair {

/// Domain-level failure with a stable machine-readable name.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

inline Error not_nilpotent(const std::string& w) { return Error("NotNilpotent", w); }
inline Error not_semisimple(const std::string& w) { return Error("NotSemisimple", w); }
inline Error non_integer_weight(const std::string& w) { return Error("NonIntegerWeight", w); }
inline Error singular_base_map(const std::string& w) { return Error("SingularBaseMap", w); }
inline Error domain_error(const std::string& w) { return Error("DomainError", w); }
inline Error non_regular(const std::string& w) { return Error("NonRegular", w); }
inline Error quadrature_nonconvergence(const std::string& w) {
    return Error("QuadratureNonConvergence", w);
}
inline Error non_cancellation_failure(const std::string& w) {
    return Error("NonCancellationFailure", w);
}

}  // namespace sympair
