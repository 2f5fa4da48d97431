#pragma once

#include <stdexcept>
#include <string>

namespace ssu {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define SSU_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    };

SSU_DEFINE_ERROR(ParseError)
SSU_DEFINE_ERROR(RegularityViolation)
SSU_DEFINE_ERROR(NonSingletonRange)
SSU_DEFINE_ERROR(UniverseMismatch)
SSU_DEFINE_ERROR(InfiniteAnswer)
SSU_DEFINE_ERROR(ConstraintError)
SSU_DEFINE_ERROR(NotIdempotent)
SSU_DEFINE_ERROR(DomainError)
SSU_DEFINE_ERROR(Unsupported)
SSU_DEFINE_ERROR(NontrivialCocycle)
SSU_DEFINE_ERROR(ShapeMismatch)
SSU_DEFINE_ERROR(UnknownExample)

#undef SSU_DEFINE_ERROR

}  // namespace ssu
