#pragma once

#include <optional>
#include <stdexcept>

#include "eqt/spaces.hpp"

namespace eqt {

// malformed text: exit code 1
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
// well-formed but inconsistent data: exit code 2
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpaceFile {
    std::shared_ptr<FiniteSpace> space;
    // map to BT: torus rank and one raw BT simplex per generator
    int rank = 0;
    std::optional<std::vector<Key>> image;
    std::optional<std::vector<int>> labels;
    std::optional<Perversity> perversity;
    // explicit allowable subset by generator names
    std::optional<std::vector<std::string>> allowable;
    bool trivial_action = true;
};

SpaceFile parse_space(const std::string& text, const std::string& name = "space");
// a path, or builtin:<name> with <name> one of builtin_names() or sphere-bundle:<d>
SpaceFile load_space(const std::string& source);

}  // namespace eqt
