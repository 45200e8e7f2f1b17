#pragma once

#include "eqt/ih.hpp"

namespace eqt {

std::shared_ptr<FiniteSpace> point_space();
std::shared_ptr<FiniteSpace> two_points();
std::shared_ptr<FiniteSpace> circle1();
// Δ[2]/∂
std::shared_ptr<FiniteSpace> sphere2();
// sphere over BS^1 whose 2-simplex has T_1-component d
MappedSpace sphere_over_circle_base(std::int64_t d);
// sphere with two points identified, cone point labelled 2
FilteredSpace pinched_torus();

// builtin:<name> spaces for the command line; throws std::invalid_argument on unknown names
std::shared_ptr<FiniteSpace> builtin_space(const std::string& name);
const std::vector<std::string>& builtin_names();

}  // namespace eqt
