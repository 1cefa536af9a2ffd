#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regpump/automata.hpp"

namespace regpump {

inline constexpr std::size_t kDefaultMaxFrontier = 1'000'000;

struct EnumerationOptions {
    std::size_t max_frontier = kDefaultMaxFrontier;
    /// Drop prefixes whose state set can no longer reach an accept state.
    /// Turning this off changes cost only, never the emitted strings, but then
    /// a finite language is never reported as exhausted and a request for more
    /// strings than remain only stops at max_length or the frontier cap.
    bool prune_dead_branches = true;
    /// Stop after strings of this length; the cursor then reports exhausted.
    std::optional<std::size_t> max_length;
};

struct FrontierEntry {
    std::string prefix;
    StateSet states;  // epsilon-closed
};

struct StringBatch {
    std::vector<std::string> strings;
    std::size_t next_offset = 0;
    bool exhausted = false;
};

/// Breadth-first walk of the prefix tree of the language, one length at a
/// time, extending prefixes in character order so output is shortlex.
/// Single owner: not safe for simultaneous calls.
class EnumerationCursor {
public:
    explicit EnumerationCursor(Nfa nfa, EnumerationOptions options = {});

    /// Up to `k` further strings of the language. Throws ResourceError when a
    /// level of the prefix tree exceeds the frontier cap.
    StringBatch next_strings(std::size_t k);

    std::size_t emitted_count() const { return emitted_; }
    bool exhausted() const { return exhausted_; }
    std::size_t current_length() const { return length_; }
    std::span<const FrontierEntry> frontier() const { return frontier_; }
    const Nfa& nfa() const { return nfa_; }

private:
    bool accepting(const FrontierEntry& entry) const;
    StateSet trim(StateSet states) const;
    // Moves to the next length; returns false once the frontier is empty.
    bool advance();

    Nfa nfa_;
    EnumerationOptions options_;
    std::vector<bool> live_;
    std::vector<FrontierEntry> frontier_;
    std::size_t scan_ = 0;
    std::size_t length_ = 0;
    std::size_t emitted_ = 0;
    bool exhausted_ = false;
};

EnumerationCursor open_enumeration(Nfa nfa, EnumerationOptions options = {});

StringBatch next_strings(EnumerationCursor& cursor, std::size_t k);

/// Stateless paging: the strings at shortlex positions [offset, offset + count).
StringBatch strings_at(const Nfa& nfa, std::size_t offset, std::size_t count, EnumerationOptions options = {});

/// Shortlex comparison: shorter first, then by character value.
bool shortlex_less(const std::string& a, const std::string& b);

} // namespace regpump
