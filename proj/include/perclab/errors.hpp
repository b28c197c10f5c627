#pragma once

#include <stdexcept>
#include <string>

namespace perclab {

// An invalid certificate: a cutset that does not separate, a flow that does
// not conserve mass, overlapping cutsets.
class certificate_error : public std::runtime_error {
public:
    explicit certificate_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A request past a hard size limit of an exact method.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Averaged-flow (or other geometric) construction failure; carries a diagnostic.
class construction_error : public std::runtime_error {
public:
    explicit construction_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace perclab
