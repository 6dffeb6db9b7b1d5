#pragma once

#include "plyalg/ply.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace plyalg {

// The Lie-Yamaguti structure carried by a post-Lie-Yamaguti algebra:
//   x o y = [[x,y]],   {x,y,z} = [[x,y]] |> z - [x,y,z],
// both returned in normal form.
LT ly_binary(const LT& x, const LT& y);
LT ly_triple(const LT& x, const LT& y, const LT& z);

// One instantiation of an identity; pass <=> residual == 0.
struct LYReport {
    std::string axiom; // "LY1".."LY6", "LAT-binary", "LAT-triple"
    std::vector<TElem> bindings;
    LT residual;
    bool pass = false;
};

// Residual (lhs - rhs, normalized) of one Lie-Yamaguti axiom.
//   LY1 (x)          x o x
//   LY2 (x,y)        {x,x,y}
//   LY3 (x,y,z)      sum_cyc {x,y,z} + (x o y) o z
//   LY4 (x,y,z,w)    sum_cyc(x,y,z) {x o y, z, w}
//   LY5 (x,y,z,w)    {x,y,z o w} - {x,y,z} o w - z o {x,y,w}
//   LY6 (x,y,u,v,w)  {x,y,{u,v,w}} - {{x,y,u},v,w} - {u,{x,y,v},w} - {u,v,{x,y,w}}
LT ly_residual(int axiom, const std::vector<TElem>& args);
unsigned ly_arity(int axiom);

// Instantiations by basis elements over `alphabet_size` generators with
// total vertex count <= max_vertices: every tuple when samples == 0,
// otherwise `samples` seeded random tuples per axiom.
std::vector<LYReport> check_ly_axioms(unsigned max_vertices, unsigned samples, std::uint64_t seed,
                                      unsigned alphabet_size = 1);

// With brackets set to zero the binary operation vanishes and the ternary one
// is minus the triple bracket: checks lat_project(x o y) = 0 and
// lat_project{x,y,z} = -lat_project(normal form of [x,y,z]) on bracket-free
// basis elements.
std::vector<LYReport> check_lat_degeneration(unsigned max_vertices, unsigned samples, std::uint64_t seed,
                                             unsigned alphabet_size = 1);

} // namespace plyalg
