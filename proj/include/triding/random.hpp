#ifndef TRIDING_RANDOM_HPP
#define TRIDING_RANDOM_HPP

// Seeded generators for modules and triples. Draws use rng() % bound so a seed
// reproduces the same objects on every platform.

#include <random>

#include "triding/trimat.hpp"

namespace triding {

using Rng = std::mt19937_64;

/// Uniform vector of the given length.
Vec random_vector(Rng& rng, const PrimeField& f, std::size_t n);
/// Uniform element of a subspace.
Vec random_element(Rng& rng, const Subspace& s);

/// A quotient, submodule or dual of a small free module, of dimension at most max_dim.
Module random_module(Rng& rng, const AlgebraPtr& alg, Side side, std::size_t max_dim);

/// Component modules of dimension at most max_dim and a uniform phi.
LeftTriple random_left_triple(Rng& rng, const RingPtr& ring, std::size_t max_dim);
RightTriple random_right_triple(Rng& rng, const RingPtr& ring, std::size_t max_dim);

}  // namespace triding

#endif
