#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regpump/automata.hpp"
#include "regpump/enumerate.hpp"

namespace regpump {

/// s = x y z with a non-empty y.
struct PumpSplit {
    std::string x;
    std::string y;
    std::string z;

    std::string joined() const { return x + y + z; }

    friend bool operator==(const PumpSplit&, const PumpSplit&) = default;
};

enum class MplMode { Sampled, Exact };

const char* to_string(MplMode mode);

struct MplResult {
    std::size_t p = 1;
    std::optional<std::string> witness;
    std::optional<PumpSplit> split;
    MplMode mode = MplMode::Exact;
    std::optional<std::string> counterexample;  // a language string that is not (p-1)-pumpable

    friend bool operator==(const MplResult&, const MplResult&) = default;
};

/// x y^i z.
std::string pump(const PumpSplit& split, std::size_t i);

/// States visited by reading y repeatedly from `from`, including `from`
/// itself. The sequence is eventually periodic, so at most num_states()
/// iterations are needed.
StateSet orbit(const Dfa& dfa, State from, std::string_view y);

/// Whether x y^i z is accepted for every i >= 0, decided on the orbit of y
/// after x: z must be accepted from every orbit state.
bool pumps_for_all_i(const PumpSplit& split, const Dfa& dfa);

/// Every split of `s` with |xy| <= p and |y| >= 1 that pumps, ordered by
/// |x| then |y|.
std::vector<PumpSplit> valid_splits(std::string_view s, std::size_t p, const Dfa& dfa);

/// valid_splits() is non-empty. Strings shorter than p are still evaluated.
bool is_pumpable(std::string_view s, std::size_t p, const Dfa& dfa);

/// Shortlex-least accepted string of length at least `min_length`, if any.
std::optional<std::string> shortest_string_at_least(const Dfa& dfa, std::size_t min_length);

struct PumpingLimits {
    std::size_t state_cap = kDefaultStateCap;        // DFA and product automaton states
    std::size_t max_frontier = kDefaultMaxFrontier;  // enumeration prefixes per length
};

/// Default sampling bound: 2n + 2 for an n-state DFA.
std::size_t default_sample_length(const Dfa& dfa);

/// Tests every language string of length <= max_len (default bound when
/// absent) and returns the least p under which all of them with |s| >= p
/// pump. Not a proof beyond max_len.
MplResult min_pumping_length_sampled(const Nfa& nfa, std::optional<std::size_t> max_len = std::nullopt,
                                     const PumpingLimits& limits = {});

/// True minimum pumping length. Each candidate p is refuted or confirmed by a
/// breadth-first search of a product automaton that tracks, along the input,
/// every pending (x, y) choice and the orbit sets whose suffix obligations
/// are still open; an accepted string of length >= p with no satisfiable
/// obligation is a counterexample.
MplResult min_pumping_length_exact(const Dfa& dfa, const PumpingLimits& limits = {});

/// Shortest (shortlex-least) accepted string of length >= p that is not
/// p-pumpable, or nullopt when p is a valid pumping length.
std::optional<std::string> pumping_counterexample(const Dfa& dfa, std::size_t p, const PumpingLimits& limits = {});

} // namespace regpump
