#pragma once

#include "milnorkit/errors.hpp"

#include <string>

namespace milnorkit {

inline constexpr const char* kToolName = "milnorkit";
inline constexpr const char* kToolVersion = "0.1.0";

// Hard ceilings for the symbolic computations. m=4 generators at degree 8
// is already ~87k monomials per series; past that the desk-scale budget is gone.
struct Limits {
    int max_degree = 8;      // Magnus truncation degree
    int max_class = 8;       // nilpotency class for Hall collection
    int max_group_order = 24; // |G| bound for Reidemeister-Schreier
};

inline const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

inline void check_degree(int n, const Limits& limits = default_limits()) {
    if (n < 1 || n > limits.max_degree)
        throw DegreeOverflow("degree " + std::to_string(n) + " outside [1," +
                             std::to_string(limits.max_degree) + "]");
}

inline void check_class(int n, const Limits& limits = default_limits()) {
    if (n < 1 || n > limits.max_class)
        throw DegreeOverflow("class " + std::to_string(n) + " outside [1," +
                             std::to_string(limits.max_class) + "]");
}

} // namespace milnorkit
