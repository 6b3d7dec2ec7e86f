#pragma once

#include <cstdint>
#include <vector>

#include "ptw/graph.hpp"

namespace ptw {

// Labels in their (linear or cyclic) order; position of ground[i] is i+1.
using OrderedGround = std::vector<int>;
using Matching = std::vector<Edge>;
using Partition = std::vector<std::vector<int>>;

// pairs are labels; throws std::invalid_argument if a label is missing
// from the ground set or the pairs overlap
bool is_noncrossing_matching(const Matching& m, const OrderedGround& ground);

// blocks over positions 1..k
bool is_noncrossing_partition(const Partition& p);

// Perfect non-crossing matchings, each as pairs (a,b) of labels with a
// before b, pairs sorted by position; the list is lexicographic.
std::vector<Matching> enumerate_noncrossing_perfect_matchings(const OrderedGround& ground);

// Non-crossing partitions of [k], blocks ascending; lexicographic by
// restricted growth string.
std::vector<Partition> enumerate_noncrossing_partitions(int k);

std::uint64_t catalan(int n);

}  // namespace ptw
