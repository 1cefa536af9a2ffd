#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "regpump/automata.hpp"

namespace regpump {

Dfa::Dfa(std::vector<char> alphabet, std::vector<State> table, std::vector<bool> accepting, State start, State dead)
    : alphabet_(std::move(alphabet)), table_(std::move(table)), accepting_(std::move(accepting)), start_(start),
      dead_(dead) {
    if (table_.size() != accepting_.size() * alphabet_.size()) throw std::invalid_argument("incomplete transition table");
    if (start_ >= accepting_.size() || dead_ >= accepting_.size()) throw std::out_of_range("state out of range");
}

std::optional<std::size_t> Dfa::symbol_index(char c) const {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), c);
    if (it == alphabet_.end() || *it != c) return std::nullopt;
    return static_cast<std::size_t>(it - alphabet_.begin());
}

State Dfa::step(State s, char c) const {
    auto idx = symbol_index(c);
    return idx ? step(s, *idx) : dead_;
}

State Dfa::run(State from, std::string_view w) const {
    State s = from;
    for (char c : w) {
        s = step(s, c);
        if (s == dead_) break;
    }
    return s;
}

std::vector<bool> Dfa::coreachable() const {
    const std::size_t n = num_states();
    std::vector<std::vector<State>> reverse(n);
    for (State s = 0; s < n; ++s)
        for (std::size_t a = 0; a < alphabet_.size(); ++a) reverse[step(s, a)].push_back(s);

    std::vector<bool> live(n, false);
    std::deque<State> queue;
    for (State s = 0; s < n; ++s) {
        if (accepting_[s]) {
            live[s] = true;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const State s = queue.front();
        queue.pop_front();
        for (State p : reverse[s]) {
            if (!live[p]) {
                live[p] = true;
                queue.push_back(p);
            }
        }
    }
    return live;
}

Dfa determinize(const Nfa& nfa, std::size_t state_cap) {
    const auto& sigma = nfa.alphabet();
    std::map<StateSet, State> index;
    std::vector<StateSet> subsets;
    std::vector<State> table;

    auto intern = [&](StateSet set) -> State {
        auto [it, inserted] = index.try_emplace(std::move(set), static_cast<State>(subsets.size()));
        if (inserted) {
            if (subsets.size() >= state_cap)
                throw ResourceError("determinization blow-up: more than " + std::to_string(state_cap) + " states");
            subsets.push_back(it->first);
        }
        return it->second;
    };

    const State start = intern(epsilon_closure(StateSet{nfa.start()}, nfa));
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (char c : sigma) {
            StateSet next = epsilon_closure(transit(c, epsilon_closure(subsets[i], nfa), nfa), nfa);
            const State target = intern(std::move(next));
            table.push_back(target);
        }
    }
    // The empty subset is the dead state; add it when nothing reached it.
    const State dead = intern(StateSet{});
    table.resize(subsets.size() * sigma.size(), dead);

    std::vector<bool> accepting(subsets.size(), false);
    for (std::size_t i = 0; i < subsets.size(); ++i)
        accepting[i] = std::any_of(subsets[i].begin(), subsets[i].end(), [&](State s) { return nfa.is_accepting(s); });

    return Dfa(sigma, std::move(table), std::move(accepting), start, dead);
}

} // namespace regpump
