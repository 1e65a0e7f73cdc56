#ifndef BRICKBASIS_SCENE_IO_HPP
#define BRICKBASIS_SCENE_IO_HPP

#include <brickbasis/builder.hpp>

#include <string>

namespace brickbasis {

// Canonical scene document: fixed field order, lowest-terms "p/q"
// rationals, newline terminated. parse(serialize(s)) == s and serialize
// is byte-deterministic.
std::string export_scene(const scene &scn);
scene import_scene(const std::string &text);

// OFF mesh with 8 vertices and 6 colored quad faces per brick. Scenes
// with m < 3 are padded to unit thickness; m > 3 is rejected. Vertices
// are decimal numbers: exact shortest form when the denominator divides
// a power of ten, 17 significant digits otherwise.
std::string export_off(const scene &scn);

// Decimal rendering used by the mesh exporter.
std::string decimal_str(const rational &value);

} // namespace brickbasis

#endif // BRICKBASIS_SCENE_IO_HPP
