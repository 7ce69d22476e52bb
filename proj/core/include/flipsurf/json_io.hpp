#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "flipsurf/surface.hpp"
#include "flipsurf/triangulation.hpp"

namespace flipsurf {

/*
  Wire formats.  Surfaces: {"genus": g, "boundaries": [m1,...], "punctures": p}.
  Triangulations: {"surface": ..., "triangles": [[s1,s2,s3],...],
  "folds": [[tri,label],...], "signs": {"0": 1, ...}} where a side is an arc
  label (integer) or a boundary segment "b<component>:<index>".  Corner data
  is reconstructed on load: boundary segments pin their endpoints and interior
  vertices become punctures, numbered by their first appearance in triangle
  order.
*/

nlohmann::ordered_json surface_to_json(const MarkedSurface& s);
MarkedSurface surface_from_json(const nlohmann::json& j);

nlohmann::ordered_json triangulation_to_json(const TaggedTriangulation& t);
TaggedTriangulation triangulation_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);   // throws IoFailure
void write_file(const std::string& path, const std::string& content);

} // namespace flipsurf
