#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace carc {

using Tuple = std::vector<std::uint64_t>;

// Start of the lexicographically least rotation (Booth).
std::size_t least_rotation_index(std::span<const std::uint64_t> t);
Tuple least_rotation(std::span<const std::uint64_t> t);

// Sorts the entries of every tuple with one shared counting sort.
void sort_tuple_entries(std::vector<Tuple>& ts);

struct LexOrder {
  std::vector<std::size_t> order;  // indices of ts in lexicographic order
  std::vector<std::size_t> group;  // group[i]: rank of ts[i] among distinct tuples
};

// Radix sort of variable-length tuples over a bounded alphabet.
LexOrder lex_sort_tuples(const std::vector<Tuple>& ts);

// Comparison-based counterparts.
void sort_tuple_entries_generic(std::vector<Tuple>& ts);
LexOrder lex_sort_tuples_generic(const std::vector<Tuple>& ts);

}  // namespace carc
