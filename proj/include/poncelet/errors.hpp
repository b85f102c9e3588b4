#pragma once

#include <stdexcept>
#include <string>

namespace poncelet {

/// Argument outside the mathematical domain of an operation
/// (e.g. elliptic parameter >= 1, non-acute triangle for log-cosines).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A geometric construction cannot be carried out: collinear triangle,
/// parallel tangents, coincident vertices, tangent ray.
class GeometryError : public std::runtime_error {
public:
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

/// No conic closes an (n, tau) Poncelet polygon for the requested pair.
class NoSolutionError : public std::runtime_error {
public:
    explicit NoSolutionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace poncelet
