#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "starban/starcomp.hpp"

namespace starban::convolution {

using starcomp::CompletedObj;

// Cardinality of a hom-set in the indexing groupoid.
struct Card {
  bool infinite = false;
  std::uint64_t count = 0;  // meaningful only when infinite is false

  static Card finite(std::uint64_t k) { return Card{false, k}; }
  static Card countable() { return Card{true, 0}; }

  friend bool operator==(const Card& a, const Card& b) {
    if (a.infinite != b.infinite) return false;
    return a.infinite || a.count == b.count;
  }
};

std::string to_string(const Card& c);

// Degree-indexed hom-cardinality profile of a groupoid whose morphisms
// preserve degree: off-diagonal hom-sets are empty.
struct GroupoidProfile {
  std::string name;
  std::function<Card(std::size_t, std::size_t)> hom_card;
};

// Braids: one morphism at degrees zero and one, countably many from two
// strands up.
GroupoidProfile braid_profile();

// Permutations: n! morphisms at degree n. Degrees above 20 overflow the
// 64-bit count and throw std::overflow_error when queried.
GroupoidProfile symmetric_profile();

// Accepts "braid" or "symmetric"; anything else throws std::invalid_argument.
GroupoidProfile profile_by_name(const std::string& name);

// n! with the same overflow guard as the symmetric profile.
std::uint64_t factorial(std::size_t n);

// Finite-support functor from degrees to completed objects; degrees absent
// from the map are Fin(0).
struct DimFunctor {
  std::map<std::size_t, CompletedObj> support;

  CompletedObj at(std::size_t degree) const;
  void set(std::size_t degree, const CompletedObj& value);  // drops Fin(0)
  std::size_t top_degree() const;  // zero when the support is empty

  friend bool operator==(const DimFunctor& a, const DimFunctor& b) = default;
};

std::string to_string(const DimFunctor& f);

// Copower of a completed object by a hom-cardinality: iterated direct sum.
CompletedObj copower(const Card& c, const CompletedObj& d);

// Direct sum of completed objects: finite dimensions add, the infinite
// object absorbs.
CompletedObj direct_sum(const CompletedObj& a, const CompletedObj& b);

// Convolution tensor at object level: for each output degree l up to
// max_degree, the direct sum over all pairs (m, n) of
// copower(hom(m + n, l), f(m) (x) g(n)). The sum deliberately ranges over
// all pairs rather than assuming m + n = l; for degree-preserving profiles
// the off-diagonal terms vanish, and that agreement is checked by tests
// instead of being wired in.
DimFunctor convolve(const DimFunctor& f, const DimFunctor& g,
                    const GroupoidProfile& p, std::size_t max_degree = 16);

// Lax unit J(l) = copower(hom(0, l), Fin(1)); both profiles give {0 -> Fin(1)}.
DimFunctor unit_functor(const GroupoidProfile& p, std::size_t max_degree = 16);

// Degreewise tensor of functors.
DimFunctor pointwise_tensor(const DimFunctor& f, const DimFunctor& g);

}  // namespace starban::convolution
