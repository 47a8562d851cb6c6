#pragma once

#include <stdexcept>
#include <string>

namespace flagsphere {

struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

struct NotAFace : std::invalid_argument {
    explicit NotAFace(const std::string& what) : std::invalid_argument(what) {}
};

struct NotAFacet : std::invalid_argument {
    explicit NotAFacet(const std::string& what) : std::invalid_argument(what) {}
};

struct NotPure : std::invalid_argument {
    explicit NotPure(const std::string& what) : std::invalid_argument(what) {}
};

struct DimMismatch : std::invalid_argument {
    explicit DimMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidSpec : std::invalid_argument {
    explicit InvalidSpec(const std::string& what) : std::invalid_argument(what) {}
};

struct PreconditionFailed : std::runtime_error {
    explicit PreconditionFailed(const std::string& what) : std::runtime_error(what) {}
};

} // namespace flagsphere
