#include <algorithm>
#include <deque>
#include <stdexcept>
#include <variant>

#include "regpump/automata.hpp"

namespace regpump {

// ---------------------------------------------------------------------------
// StateSet

StateSet::StateSet(std::initializer_list<State> states) : StateSet(std::vector<State>(states)) {}

StateSet::StateSet(std::vector<State> states) : members_(std::move(states)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool StateSet::contains(State s) const {
    return std::binary_search(members_.begin(), members_.end(), s);
}

void StateSet::insert(State s) {
    auto it = std::lower_bound(members_.begin(), members_.end(), s);
    if (it == members_.end() || *it != s) members_.insert(it, s);
}

bool StateSet::includes(const StateSet& other) const {
    return std::includes(members_.begin(), members_.end(), other.members_.begin(), other.members_.end());
}

// ---------------------------------------------------------------------------
// Nfa

bool Nfa::in_alphabet(char c) const {
    return std::binary_search(alphabet_.begin(), alphabet_.end(), c);
}

std::size_t Nfa::num_transitions() const {
    std::size_t n = 0;
    for (const auto& e : edges_) n += e.size();
    return n;
}

State NfaBuilder::add_state() {
    edges_.emplace_back();
    return static_cast<State>(edges_.size() - 1);
}

void NfaBuilder::add_symbol(char c) {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), c);
    if (it == alphabet_.end() || *it != c) alphabet_.insert(it, c);
}

void NfaBuilder::add_transition(State from, std::optional<char> symbol, State to) {
    if (from >= edges_.size() || to >= edges_.size()) throw std::out_of_range("transition endpoint is not a state");
    if (symbol) add_symbol(*symbol);
    auto& out = edges_[from];
    Transition t{symbol, to};
    auto it = std::lower_bound(out.begin(), out.end(), t);
    if (it == out.end() || *it != t) out.insert(it, t);
}

Nfa NfaBuilder::build(State start, StateSet accepts) && {
    if (start >= edges_.size()) throw std::out_of_range("start is not a state");
    for (State a : accepts)
        if (a >= edges_.size()) throw std::out_of_range("accept is not a state");
    Nfa nfa;
    nfa.edges_ = std::move(edges_);
    nfa.alphabet_ = std::move(alphabet_);
    nfa.start_ = start;
    nfa.accepts_ = std::move(accepts);
    return nfa;
}

// ---------------------------------------------------------------------------
// Compilation

namespace {

struct Fragment {
    State start;
    std::optional<State> accept;  // empty for the empty language
};

class SegmentCompiler {
public:
    SegmentCompiler(NfaBuilder& builder, const ReservedSymbols& reserved) : b_(builder), r_(reserved) {}

    Fragment create(std::string_view regex) {
        if (regex.size() == 1) return base_case(regex.front());

        using Item = std::variant<Fragment, Segment::Kind>;
        std::vector<Item> items;
        for (const auto& seg : parse_segments(regex, r_)) {
            if (seg.is_operator())
                items.emplace_back(seg.kind);
            else
                items.emplace_back(create(seg.text));
        }

        auto is_op = [](const Item& item, Segment::Kind kind) {
            return std::holds_alternative<Segment::Kind>(item) && std::get<Segment::Kind>(item) == kind;
        };
        auto malformed = [] { return SyntaxError(0, "malformed segment list"); };

        // Star binds to the operand on its left.
        std::vector<Item> starred;
        for (auto& item : items) {
            if (is_op(item, Segment::Kind::Star)) {
                if (starred.empty() || !std::holds_alternative<Fragment>(starred.back())) throw malformed();
                starred.back() = star(std::get<Fragment>(starred.back()));
            } else {
                starred.push_back(std::move(item));
            }
        }

        std::vector<Item> joined;
        bool pending_concat = false;
        for (auto& item : starred) {
            if (is_op(item, Segment::Kind::Concat)) {
                if (joined.empty() || !std::holds_alternative<Fragment>(joined.back())) throw malformed();
                pending_concat = true;
            } else if (pending_concat) {
                if (!std::holds_alternative<Fragment>(item)) throw malformed();
                joined.back() = concat(std::get<Fragment>(joined.back()), std::get<Fragment>(item));
                pending_concat = false;
            } else {
                joined.push_back(std::move(item));
            }
        }
        if (pending_concat) throw malformed();

        std::optional<Fragment> result;
        bool pending_union = false;
        for (auto& item : joined) {
            if (is_op(item, Segment::Kind::Union)) {
                if (!result || pending_union) throw malformed();
                pending_union = true;
            } else {
                if (!std::holds_alternative<Fragment>(item)) throw malformed();
                const auto& frag = std::get<Fragment>(item);
                if (!result) {
                    result = frag;
                } else if (pending_union) {
                    result = alternate(*result, frag);
                    pending_union = false;
                } else {
                    throw malformed();
                }
            }
        }
        if (!result || pending_union) throw malformed();
        return *result;
    }

private:
    Fragment base_case(char c) {
        const State s = b_.add_state();
        if (c == r_.empty_language) return {s, std::nullopt};
        if (c == r_.epsilon) return {s, s};
        const State t = b_.add_state();
        b_.add_transition(s, c, t);
        return {s, t};
    }

    Fragment star(const Fragment& inner) {
        const State s = b_.add_state();
        const State f = b_.add_state();
        b_.add_transition(s, std::nullopt, inner.start);
        b_.add_transition(s, std::nullopt, f);
        if (inner.accept) {
            b_.add_transition(*inner.accept, std::nullopt, inner.start);
            b_.add_transition(*inner.accept, std::nullopt, f);
        }
        return {s, f};
    }

    Fragment concat(const Fragment& left, const Fragment& right) {
        if (left.accept) b_.add_transition(*left.accept, std::nullopt, right.start);
        return {left.start, right.accept};
    }

    Fragment alternate(const Fragment& left, const Fragment& right) {
        const State s = b_.add_state();
        const State f = b_.add_state();
        b_.add_transition(s, std::nullopt, left.start);
        b_.add_transition(s, std::nullopt, right.start);
        if (left.accept) b_.add_transition(*left.accept, std::nullopt, f);
        if (right.accept) b_.add_transition(*right.accept, std::nullopt, f);
        return {s, f};
    }

    NfaBuilder& b_;
    const ReservedSymbols& r_;
};

} // namespace

Nfa compile(std::string_view regex, const ReservedSymbols& reserved) {
    if (!reserved.distinct()) throw std::invalid_argument("reserved symbols must be pairwise distinct");
    require_valid(regex, reserved);
    NfaBuilder builder;
    const Fragment top = SegmentCompiler(builder, reserved).create(regex);
    StateSet accepts;
    if (top.accept) accepts.insert(*top.accept);
    return std::move(builder).build(top.start, std::move(accepts));
}

// ---------------------------------------------------------------------------
// Simulation

StateSet epsilon_closure(const StateSet& current, const Nfa& nfa) {
    std::vector<State> list(current.begin(), current.end());
    std::vector<bool> member(nfa.num_states(), false);
    for (State s : list) member[s] = true;
    // The list grows while it is scanned; the membership check keeps cycles finite.
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (const auto& t : nfa.transitions_from(list[i])) {
            if (!t.symbol && !member[t.target]) {
                member[t.target] = true;
                list.push_back(t.target);
            }
        }
    }
    return StateSet(std::move(list));
}

StateSet transit(std::optional<char> symbol, const StateSet& current, const Nfa& nfa) {
    if (!symbol) return current;
    std::vector<State> next;
    for (State s : current)
        for (const auto& t : nfa.transitions_from(s))
            if (t.symbol == symbol) next.push_back(t.target);
    return StateSet(std::move(next));
}

bool accepts(const Nfa& nfa, std::string_view w) {
    StateSet current = epsilon_closure(StateSet{nfa.start()}, nfa);
    for (char c : w) {
        if (!nfa.in_alphabet(c)) return false;
        current = epsilon_closure(transit(c, current, nfa), nfa);
        if (current.empty()) return false;
    }
    return std::any_of(current.begin(), current.end(), [&](State s) { return nfa.is_accepting(s); });
}

std::vector<bool> coreachable_states(const Nfa& nfa) {
    std::vector<std::vector<State>> reverse(nfa.num_states());
    for (State s = 0; s < nfa.num_states(); ++s)
        for (const auto& t : nfa.transitions_from(s)) reverse[t.target].push_back(s);

    std::vector<bool> live(nfa.num_states(), false);
    std::deque<State> queue;
    for (State a : nfa.accepts()) {
        live[a] = true;
        queue.push_back(a);
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

} // namespace regpump
