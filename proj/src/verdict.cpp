#include "ssu/verdict.hpp"

#include <stdexcept>

namespace ssu {

std::string to_string(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::Unknown: return "unknown";
    }
    return "unknown";
}

Status conjunction(Status a, Status b) {
    if (a == Status::Fails || b == Status::Fails) return Status::Fails;
    if (a == Status::Unknown || b == Status::Unknown) return Status::Unknown;
    return Status::Holds;
}

void Bounds::validate() const {
    if (max_path_len < 1 || group_ball_radius < 1 || lasso_bound < 1 || state_bound < 1)
        throw std::invalid_argument("all bounds must be >= 1");
}

}  // namespace ssu
