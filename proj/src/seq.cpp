#include "thue/seq.hpp"

#include <algorithm>
#include <unordered_set>

namespace thue {

std::optional<Square> contains_square(const ColourSequence& seq) {
    const int n = static_cast<int>(seq.size());
    std::optional<Square> best;
    for (int half = 1; 2 * half <= n; ++half) {
        // leftmost i with seq[i+j] == seq[i+half+j] for all j < half
        int run = 0;
        for (int j = 0; j + half < n; ++j) {
            run = (seq[j] == seq[j + half]) ? run + 1 : 0;
            if (run >= half) {
                int start = j - half + 1;
                if (!best || start < best->start)
                    best = Square{start, half};
                break;
            }
            if (best && j - half + 2 > best->start)
                break; // no leftmost improvement possible for this half
        }
        if (best && best->start == 0 && best->half_length == 1)
            break;
    }
    return best;
}

ColourSequence squarefree_ternary(int n) {
    ColourSequence out;
    out.reserve(std::max(n, 0));
    long long prev_zero = -1;
    for (long long i = 0; static_cast<int>(out.size()) < n; ++i) {
        if (__builtin_popcountll(i) % 2 == 0) { // Thue-Morse zero
            if (prev_zero >= 0)
                out.push_back(static_cast<Colour>(i - prev_zero)); // gap+1
            prev_zero = i;
        }
    }
    return out;
}

ColourSequence interleave(const ColourSequence& a,
                          const std::vector<ColourSequence>& blocks,
                          const std::vector<int>& cut_points) {
    const int m = static_cast<int>(a.size());
    if (blocks.size() != cut_points.size() + 2)
        throw Error("interleave: need exactly cut_points+2 blocks");
    for (size_t i = 0; i < cut_points.size(); ++i) {
        if (cut_points[i] < 0 || cut_points[i] > m)
            throw Error("interleave: cut point out of range");
        if (i > 0 && cut_points[i] <= cut_points[i - 1])
            throw Error("interleave: cut points must be strictly increasing");
    }
    std::unordered_set<Colour> host(a.begin(), a.end());
    for (const auto& b : blocks)
        for (Colour c : b)
            if (host.count(c))
                throw AlphabetOverlapError("interleave: block symbol also occurs in host sequence");

    ColourSequence out;
    int pos = 0;
    for (size_t i = 0; i < blocks.size(); ++i) {
        out.insert(out.end(), blocks[i].begin(), blocks[i].end());
        int next = (i < cut_points.size()) ? cut_points[i] : m;
        if (i + 1 < blocks.size()) {
            out.insert(out.end(), a.begin() + pos, a.begin() + next);
            pos = next;
        }
    }
    return out;
}

ColourSequence complement_ternary(const ColourSequence& s) {
    ColourSequence out;
    out.reserve(s.size());
    for (Colour c : s) {
        if (c < 1 || c > 3)
            throw OutOfAlphabetError("complement_ternary: symbol outside {1,2,3}");
        out.push_back(4 - c);
    }
    return out;
}

} // namespace thue
