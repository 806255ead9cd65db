#pragma once

// Double-description method for pointed polyhedral cones over Q, the single
// engine behind facet enumeration (points -> inequalities) and vertex
// enumeration (inequalities -> points). Exact integer arithmetic throughout;
// rays are kept primitive and tight-sets exact, so the output doubles as a
// certificate (every ray carries the full list of inequalities it saturates).

#include <cstdint>
#include <vector>

#include "nz/rational.hpp"

namespace nz {

// Minimal fixed-capacity bitset used for ray tight-sets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}
    void set(size_t i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    size_t size() const { return bits_; }

    static Bitset intersect(const Bitset& a, const Bitset& b) {
        Bitset out(a.bits_);
        for (size_t w = 0; w < out.words_.size(); ++w)
            out.words_[w] = a.words_[w] & b.words_[w];
        return out;
    }
    // this superset-of other?
    bool contains(const Bitset& other) const {
        for (size_t w = 0; w < words_.size(); ++w)
            if ((other.words_[w] & ~words_[w]) != 0) return false;
        return true;
    }

private:
    size_t bits_ = 0;
    std::vector<uint64_t> words_;
};

struct DDRay {
    ZVec v;        // primitive integer direction
    Bitset tight;  // inequality rows this ray saturates
};

// Extreme rays of { y : <row, y> >= 0 for every row }.
// Requires the cone to be pointed (the rows must have full column rank);
// throws std::domain_error otherwise. Row order is respected for determinism.
std::vector<DDRay> dual_description(const std::vector<ZVec>& rows, int dim);

}  // namespace nz
