#pragma once
#include <string>
#include <vector>

#include "jct/error.hpp"

namespace jct {

// Symbol sequence over {1..d}.  Finite words have an empty period; infinite
// (eventually periodic) words repeat `per` forever after `pre`.
//
// Text syntax: digits only ("1121") for a finite word; a trailing '^' makes
// the whole digit block before it periodic ("121^" = 121121121...); an
// optional '.' splits preperiod from period ("1.21^" = 1 21 21 21 ...).
struct Word {
    std::vector<int> pre;
    std::vector<int> per;

    bool infinite() const { return !per.empty(); }
    size_t pre_len() const { return pre.size(); }

    // k is 0-based; valid for k < pre_len() on finite words.
    int at(size_t k) const {
        if (k < pre.size()) return pre[k];
        if (per.empty()) fail(Err::NumericalFailure, "index past end of finite word");
        return per[(k - pre.size()) % per.size()];
    }

    std::string str() const;
};

Word parse_word(const std::string& s, int dsym);

} // namespace jct
