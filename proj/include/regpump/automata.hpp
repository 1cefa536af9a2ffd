#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "regpump/syntax.hpp"

namespace regpump {

using State = std::uint32_t;

/// One edge of an NFA. An absent symbol is an epsilon move.
struct Transition {
    std::optional<char> symbol;
    State target;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Sorted, duplicate-free set of state identifiers.
class StateSet {
public:
    StateSet() = default;
    StateSet(std::initializer_list<State> states);
    explicit StateSet(std::vector<State> states);

    bool contains(State s) const;
    void insert(State s);
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }
    bool includes(const StateSet& other) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    const std::vector<State>& members() const { return members_; }

    friend bool operator==(const StateSet&, const StateSet&) = default;
    friend auto operator<=>(const StateSet&, const StateSet&) = default;

private:
    std::vector<State> members_;
};

/// Nondeterministic automaton with epsilon moves. Immutable once built;
/// use NfaBuilder to make one.
class Nfa {
public:
    std::size_t num_states() const { return edges_.size(); }
    const std::vector<char>& alphabet() const { return alphabet_; }
    bool in_alphabet(char c) const;
    State start() const { return start_; }
    const StateSet& accepts() const { return accepts_; }
    bool is_accepting(State s) const { return accepts_.contains(s); }
    std::span<const Transition> transitions_from(State s) const { return edges_[s]; }
    std::size_t num_transitions() const;

private:
    friend class NfaBuilder;

    std::vector<std::vector<Transition>> edges_;
    std::vector<char> alphabet_;
    State start_ = 0;
    StateSet accepts_;
};

/// Incremental construction. States are numbered densely in creation order.
class NfaBuilder {
public:
    State add_state();
    void add_symbol(char c);
    /// Adds an edge; a non-epsilon symbol is also added to the alphabet.
    void add_transition(State from, std::optional<char> symbol, State to);
    std::size_t num_states() const { return edges_.size(); }

    /// Checks the structural invariants and freezes the automaton.
    Nfa build(State start, StateSet accepts) &&;

private:
    std::vector<std::vector<Transition>> edges_;
    std::vector<char> alphabet_;
};

/// Compiles an expression to an NFA by recursive segment construction:
/// operands first, then star, concatenation and union, each with its own
/// fresh-state construction. Throws SyntaxError on malformed input.
Nfa compile(std::string_view regex, const ReservedSymbols& reserved = {});

/// Least superset of `current` closed under epsilon moves.
StateSet epsilon_closure(const StateSet& current, const Nfa& nfa);

/// States reachable by one `symbol` edge; an epsilon symbol returns `current`.
StateSet transit(std::optional<char> symbol, const StateSet& current, const Nfa& nfa);

/// Membership by simulating every path at once. Characters outside the
/// alphabet reject.
bool accepts(const Nfa& nfa, std::string_view w);

/// States from which some accept state is reachable.
std::vector<bool> coreachable_states(const Nfa& nfa);

/// Complete deterministic automaton. The dead state is always present and
/// loops to itself on every symbol.
class Dfa {
public:
    Dfa(std::vector<char> alphabet, std::vector<State> table, std::vector<bool> accepting, State start, State dead);

    std::size_t num_states() const { return accepting_.size(); }
    const std::vector<char>& alphabet() const { return alphabet_; }
    State start() const { return start_; }
    State dead_state() const { return dead_; }
    bool is_accepting(State s) const { return accepting_[s]; }

    /// Index of `c` in the alphabet, or nullopt.
    std::optional<std::size_t> symbol_index(char c) const;
    State step(State s, std::size_t symbol_index) const { return table_[s * alphabet_.size() + symbol_index]; }
    /// Characters outside the alphabet lead to the dead state.
    State step(State s, char c) const;
    State run(State from, std::string_view w) const;
    bool accepts(std::string_view w) const { return is_accepting(run(start_, w)); }
    bool accepts_from(State from, std::string_view w) const { return is_accepting(run(from, w)); }

    /// States from which an accept state is reachable.
    std::vector<bool> coreachable() const;

private:
    std::vector<char> alphabet_;
    std::vector<State> table_;
    std::vector<bool> accepting_;
    State start_;
    State dead_;
};

inline constexpr std::size_t kDefaultStateCap = 100000;

/// Subset construction over epsilon closures, reachable subsets only.
/// Throws ResourceError once more than `state_cap` states are generated.
Dfa determinize(const Nfa& nfa, std::size_t state_cap = kDefaultStateCap);

/// Stable DOT rendering. Accept states are double circles, the start state
/// is drawn bold, epsilon edges use the configured epsilon character.
std::string export_graph(const Nfa& nfa, const ReservedSymbols& reserved = {});

} // namespace regpump
