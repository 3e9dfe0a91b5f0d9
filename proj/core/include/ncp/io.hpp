#pragma once

#include "ncp/polytope.hpp"

#include <string>

namespace ncp {

// JSON renderings. Rationals are "p/q" strings; keys are stable and arrays
// keep the container order, so output is byte-for-byte reproducible.
std::string to_json(const HPolytope& h);
std::string to_json(const VPolytope& v);
std::string to_json(const IncidenceStructure& inc);

/// OFF text for a full-dimensional polytope in dimension 2 or 3 (2D points
/// get z = 0). Facet vertex lists are in cyclic order, counterclockwise seen
/// from outside. Throws DimensionError for other dimensions.
std::string to_off(const VPolytope& v, const IncidenceStructure& inc);

}  // namespace ncp
