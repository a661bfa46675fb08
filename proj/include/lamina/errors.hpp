#pragma once

#include <stdexcept>
#include <string>

namespace lamina {

// Invalid geometry or connectivity handed to a mesh operation.
struct MeshError : std::runtime_error {
    explicit MeshError(const std::string& what) : std::runtime_error(what) {}
};

// A solver or time integration failed (non-convergence, inverted flow, ...).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// File or format problem.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lamina
