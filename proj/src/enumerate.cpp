#include "regpump/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace regpump {

bool shortlex_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
        return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
    });
}

EnumerationCursor::EnumerationCursor(Nfa nfa, EnumerationOptions options)
    : nfa_(std::move(nfa)), options_(options), live_(coreachable_states(nfa_)) {
    auto initial = trim(epsilon_closure(StateSet{nfa_.start()}, nfa_));
    if (initial.empty() && options_.prune_dead_branches)
        exhausted_ = true;
    else
        frontier_.push_back({std::string{}, std::move(initial)});
}

bool EnumerationCursor::accepting(const FrontierEntry& entry) const {
    return std::any_of(entry.states.begin(), entry.states.end(), [&](State s) { return nfa_.is_accepting(s); });
}

StateSet EnumerationCursor::trim(StateSet states) const {
    if (!options_.prune_dead_branches) return states;
    std::vector<State> kept;
    for (State s : states)
        if (live_[s]) kept.push_back(s);
    return StateSet(std::move(kept));
}

bool EnumerationCursor::advance() {
    if (options_.max_length && length_ >= *options_.max_length) {
        frontier_.clear();
        scan_ = 0;
        exhausted_ = true;
        return false;
    }
    std::vector<FrontierEntry> next;
    for (const auto& entry : frontier_) {
        for (char c : nfa_.alphabet()) {
            auto states = trim(epsilon_closure(transit(c, entry.states, nfa_), nfa_));
            if (states.empty() && options_.prune_dead_branches) continue;
            if (next.size() >= options_.max_frontier)
                throw ResourceError("enumeration frontier exceeded " + std::to_string(options_.max_frontier) +
                                    " prefixes at length " + std::to_string(length_ + 1));
            next.push_back({entry.prefix + c, std::move(states)});
        }
    }
    frontier_ = std::move(next);
    scan_ = 0;
    ++length_;
    if (frontier_.empty()) exhausted_ = true;
    return !exhausted_;
}

StringBatch EnumerationCursor::next_strings(std::size_t k) {
    if (k == 0) throw std::invalid_argument("batch size must be positive");
    StringBatch batch;
    while (batch.strings.size() < k && !exhausted_) {
        if (scan_ < frontier_.size()) {
            const auto& entry = frontier_[scan_++];
            if (accepting(entry)) batch.strings.push_back(entry.prefix);
        } else {
            advance();
        }
    }

    // With pruning, every surviving prefix has an accepted extension, so the
    // lookahead below always reaches either a string or an empty frontier.
    if (options_.prune_dead_branches) {
        while (!exhausted_) {
            while (scan_ < frontier_.size() && !accepting(frontier_[scan_])) ++scan_;
            if (scan_ < frontier_.size()) break;
            advance();
        }
    }

    emitted_ += batch.strings.size();
    batch.next_offset = emitted_;
    batch.exhausted = exhausted_;
    return batch;
}

EnumerationCursor open_enumeration(Nfa nfa, EnumerationOptions options) {
    return EnumerationCursor(std::move(nfa), options);
}

StringBatch next_strings(EnumerationCursor& cursor, std::size_t k) {
    return cursor.next_strings(k);
}

StringBatch strings_at(const Nfa& nfa, std::size_t offset, std::size_t count, EnumerationOptions options) {
    constexpr std::size_t kSkipChunk = 4096;
    EnumerationCursor cursor(nfa, options);
    std::size_t skipped = 0;
    while (skipped < offset && !cursor.exhausted()) {
        skipped += cursor.next_strings(std::min(kSkipChunk, offset - skipped)).strings.size();
    }
    if (cursor.exhausted()) return StringBatch{{}, skipped, true};
    return cursor.next_strings(count);
}

} // namespace regpump
