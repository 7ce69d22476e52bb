#pragma once

#include <stdexcept>
#include <string>

namespace flipsurf {

struct UnknownArc : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotFlippable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct NotSkewSymmetric : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Signals an internal bug: c-vectors are sign-coherent along every valid
// mutation path, so this is never expected on well-formed input.
struct SignCoherenceViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct SurfaceMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedSurface : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotMaximalGreen : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidTriangulation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace flipsurf
