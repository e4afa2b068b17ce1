#pragma once

#include "vmodel/graph.hpp"
#include "vmodel/model.hpp"
#include "vmodel/scalar.hpp"

#include <cstdint>
#include <random>

namespace vmodel {

// mt19937_64 with bounded integers drawn by rejection sampling, so a seed
// reproduces the same instances on every platform (the standard
// distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // Uniform on [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin(int numerator, int denominator) { return uniform(0, denominator - 1) < numerator; }

private:
    std::mt19937_64 engine_;
};

struct GraphShape {
    int min_vertices = 0;
    int max_vertices = 6;
    int max_edges = 8;
    bool loops = true;
};

Multigraph random_graph(Rng& rng, const GraphShape& shape);
DirectedMultigraph random_digraph(Rng& rng, const GraphShape& shape);

// Integers in [-magnitude, magnitude], turned into a fraction with
// denominator 2 or 3 one time in four unless `integral`; gaussian draws both
// parts.
Scalar random_scalar(Rng& rng, Ring ring, int magnitude = 3, bool integral = false);

// Every entry with |alpha| <= max_degree drawn independently.
VertexModel random_model(Rng& rng, int k, Ring ring, int max_degree, bool integral = false);
DirectedVertexModel random_directed_model(Rng& rng, int k, Ring ring, int max_degree, bool integral = false);

// y_alpha = sum_j c_j a_j^alpha with r random integer points and nonzero
// coefficients (gaussian points when ring is gaussian).
VertexModel random_rank_r_model(Rng& rng, int k, int r, Ring ring, int degree_cap);

// Strictly increasing pins of the given size; targets anywhere, or outside
// the pin set when `avoid_pins` (requires n > size).
PinMap random_pins(Rng& rng, int n, int size, bool avoid_pins);

} // namespace vmodel
