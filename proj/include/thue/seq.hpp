#pragma once

#include <optional>
#include <vector>

#include "thue/errors.hpp"

namespace thue {

// Colours are opaque comparable identifiers; only equality matters to the
// repetition machinery. Non-negative by convention (string identifiers from
// JSON input are interned to fresh non-negative values).
using Colour = int;
using ColourSequence = std::vector<Colour>;

// A square (repetition) inside a sequence: the block
// [start, start + 2*half_length) whose two halves are identical.
struct Square {
    int start = 0;
    int half_length = 0;

    friend bool operator==(const Square&, const Square&) = default;
};

/// Finds the leftmost square of consecutive terms, breaking ties by smallest
/// half length. Returns nullopt iff the sequence is nonrepetitive.
/// O(n^2): per half length, one sliding scan over match positions.
std::optional<Square> contains_square(const ColourSequence& seq);

/// Deterministic square-free word of length n over {1,2,3}, derived from the
/// Thue-Morse parity word: symbol k = 1 + (number of ones between the k-th
/// and (k+1)-th zero of Thue-Morse).
ColourSequence squarefree_ternary(int n);

/// Splices blocks into a host sequence: with cut points n_1 < ... < n_r the
/// result is  B0 a[0,n_1) B1 a[n_1,n_2) ... Br a[n_r,len) B(r+1).
/// Requires blocks.size() == cut_points.size() + 2, cut points strictly
/// increasing within [0, len(a)], and the alphabets of a and of the blocks
/// disjoint (throws AlphabetOverlapError otherwise). If a and every block are
/// square-free and all segments are non-empty, the result is square-free.
ColourSequence interleave(const ColourSequence& a,
                          const std::vector<ColourSequence>& blocks,
                          const std::vector<int>& cut_points);

/// Element-wise s_i -> 4 - s_i on a word over {1,2,3}. Preserves
/// square-freeness. Throws OutOfAlphabetError on any other symbol.
ColourSequence complement_ternary(const ColourSequence& s);

} // namespace thue
