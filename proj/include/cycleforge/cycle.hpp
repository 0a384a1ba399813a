#pragma once

#include <string>
#include <vector>

#include "cycleforge/graph.hpp"

namespace cycleforge {

// A simple cycle c_0 .. c_{m-1}, closed implicitly. In canonical form c_0 is
// the smallest vertex and c_1 < c_{m-1}.
using CycleWitness = std::vector<Vertex>;

CycleWitness canonical_cycle(const CycleWitness& cycle);

// True when the sequence has at least three distinct vertices and every
// consecutive pair (including the wrap-around) is an edge of g.
bool is_simple_cycle(const Graph& g, const CycleWitness& cycle);

std::string format_cycle(const CycleWitness& cycle);
CycleWitness parse_cycle(const std::string& text);

}  // namespace cycleforge
