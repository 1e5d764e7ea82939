#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "comb/cartesian.hpp"
#include "comb/family.hpp"
#include "comb/finite_comb.hpp"
#include "comb/morphism.hpp"
#include "comb/stream_comb.hpp"

namespace comb::random {

using Rng = std::mt19937_64;

// Independent generator for the (seed, a, b) coordinate.
Rng derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

struct Limits {
  std::size_t max_set = 3;    // largest random finite set
  std::size_t max_arity = 1;  // largest random BigFn object
  bool allow_unit = true;     // whether random objects may be the unit
  std::size_t max_prefix = 2; // longest non-constant prefix of random families
};

// The set {s0, ..., s(k-1)} named S<k>; equal sizes give equal objects.
Object sized_set(Backend backend, std::size_t k);

Object object(Rng& rng, Backend backend, const Limits& limits);
ObjectFamily family(Rng& rng, Backend backend, const Limits& limits);

// Uniform table (FinFn), sparse rows with at most two entries (FinStoch), or a
// tuple of random integer expressions (BigFn).
Morphism morphism(Rng& rng, const Object& domain, const Object& codomain);

// A stream comb whose memory and piece at stage n depend only on (seed, n).
StreamComb stream_comb(std::uint64_t seed, const ObjectFamily& inputs,
                       const ObjectFamily& outputs, const Limits& limits);

// Random maps X_0 (x) ... (x) X_n -> Y_n, again a pure function of (seed, n).
CausalForm causal_form(std::uint64_t seed, const ObjectFamily& inputs,
                       const ObjectFamily& outputs);

// A closed (or open) comb with the given number of pieces.
FiniteComb finite_comb(Rng& rng, Backend backend, std::size_t pieces, bool open,
                       const Limits& limits);

// A random valid slide of c. FinFn moves are found by factoring the existing
// pieces through random surjective (into next) or injective (into previous)
// mediators; other backends rebuild one piece so that it factors.
// Returns the representative before and after the move.
struct SlidePair {
  FiniteComb before;
  FiniteComb after;
};
SlidePair slide_pair(Rng& rng, const FiniteComb& c, const Limits& limits);

// Every function dom -> cod (FinFn).
std::vector<Morphism> all_functions(const Object& domain, const Object& codomain);

}  // namespace comb::random
