#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "la1/machine.hpp"

namespace la1 {

// Binary relation on machine states, stored as a bit matrix. A table
// summarizes a frozen tape segment that starts at the left end-marker: the
// pair (p, r) is present when a computation entering the segment at its
// rightmost cell in state p eventually leaves the segment to the right in
// state r.
class TransitionTable {
public:
    TransitionTable() = default;
    explicit TransitionTable(int states)
        : n_(states), words_((states + 63) / 64),
          bits_(static_cast<size_t>(states) * ((states + 63) / 64), 0) {}

    int states() const { return n_; }
    bool at(int p, int r) const {
        return bits_[static_cast<size_t>(p) * words_ + (r >> 6)] >> (r & 63) & 1;
    }
    void set(int p, int r) {
        bits_[static_cast<size_t>(p) * words_ + (r >> 6)] |= uint64_t{1} << (r & 63);
    }
    const uint64_t* row(int p) const { return bits_.data() + static_cast<size_t>(p) * words_; }
    int row_words() const { return words_; }

    std::vector<std::pair<int, int>> pairs() const; // sorted
    size_t size() const;                            // number of pairs

    bool operator==(const TransitionTable&) const = default;
    size_t hash() const;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

struct TransitionTableHash {
    size_t operator()(const TransitionTable& t) const { return t.hash(); }
};

// Table of the one-cell segment holding only the left end-marker: (p, r) for
// every right move from p into r on |-. Moves to the left of |- are
// impossible, so no longer behavior exists on this segment.
TransitionTable base_table(const LimitedAutomaton& la);

// Table of the segment grown by one frozen cell holding the work symbol at
// index `symbol`. Entering the new cell in state p, the machine either moves
// right directly or bounces left into the old segment, reemerges via `t`, and
// tries again; only transitions rewriting the frozen symbol itself apply.
// Throws std::invalid_argument when `symbol` is an end-marker.
TransitionTable extend_table(const LimitedAutomaton& la, const TransitionTable& t, int symbol);
TransitionTable extend_table(const LimitedAutomaton& la, const TransitionTable& t,
                             const TapeSymbol& symbol);

// Whether some computation standing on -| in state q, with the frozen tape to
// the left summarized by `t`, eventually moves past -| into a final state.
bool accept_closure(const LimitedAutomaton& la, const TransitionTable& t, int q);

} // namespace la1
