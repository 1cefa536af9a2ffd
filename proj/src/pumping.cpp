#include "regpump/pumping.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace regpump {

const char* to_string(MplMode mode) {
    return mode == MplMode::Exact ? "exact" : "sampled";
}

std::string pump(const PumpSplit& split, std::size_t i) {
    std::string out;
    out.reserve(split.x.size() + i * split.y.size() + split.z.size());
    out += split.x;
    for (std::size_t k = 0; k < i; ++k) out += split.y;
    out += split.z;
    return out;
}

StateSet orbit(const Dfa& dfa, State from, std::string_view y) {
    std::vector<bool> seen(dfa.num_states(), false);
    std::vector<State> members;
    State q = from;
    while (!seen[q]) {
        seen[q] = true;
        members.push_back(q);
        q = dfa.run(q, y);
    }
    return StateSet(std::move(members));
}

bool pumps_for_all_i(const PumpSplit& split, const Dfa& dfa) {
    if (split.y.empty()) return false;
    const StateSet states = orbit(dfa, dfa.run(dfa.start(), split.x), split.y);
    return std::all_of(states.begin(), states.end(), [&](State q) { return dfa.accepts_from(q, split.z); });
}

namespace {

// Run of the DFA along s: prefix_states[k] is the state after s[0, k).
std::vector<State> prefix_states(const Dfa& dfa, std::string_view s) {
    std::vector<State> states{dfa.start()};
    for (char c : s) states.push_back(dfa.step(states.back(), c));
    return states;
}

bool split_pumps(const Dfa& dfa, std::string_view s, const std::vector<State>& run, std::size_t x_len, std::size_t xy_len) {
    const auto y = s.substr(x_len, xy_len - x_len);
    const auto z = s.substr(xy_len);
    const StateSet states = orbit(dfa, run[x_len], y);
    return std::all_of(states.begin(), states.end(), [&](State q) { return dfa.accepts_from(q, z); });
}

// Least |xy| over the pumping splits of s, if there is one.
std::optional<std::size_t> least_pumping_window(const Dfa& dfa, std::string_view s) {
    const auto run = prefix_states(dfa, s);
    for (std::size_t xy = 1; xy <= s.size(); ++xy)
        for (std::size_t x = 0; x < xy; ++x)
            if (split_pumps(dfa, s, run, x, xy)) return xy;
    return std::nullopt;
}

} // namespace

std::vector<PumpSplit> valid_splits(std::string_view s, std::size_t p, const Dfa& dfa) {
    std::vector<PumpSplit> out;
    const std::size_t window = std::min(p, s.size());
    const auto run = prefix_states(dfa, s);
    for (std::size_t x = 0; x < window; ++x) {
        for (std::size_t xy = x + 1; xy <= window; ++xy) {
            if (split_pumps(dfa, s, run, x, xy))
                out.push_back({std::string(s.substr(0, x)), std::string(s.substr(x, xy - x)), std::string(s.substr(xy))});
        }
    }
    return out;
}

bool is_pumpable(std::string_view s, std::size_t p, const Dfa& dfa) {
    const std::size_t window = std::min(p, s.size());
    const auto run = prefix_states(dfa, s);
    for (std::size_t x = 0; x < window; ++x)
        for (std::size_t xy = x + 1; xy <= window; ++xy)
            if (split_pumps(dfa, s, run, x, xy)) return true;
    return false;
}

std::optional<std::string> shortest_string_at_least(const Dfa& dfa, std::size_t min_length) {
    const auto live = dfa.coreachable();
    if (!live[dfa.start()]) return std::nullopt;

    // Nodes are (state, min(length, min_length)); BFS in symbol order finds
    // the shortlex-least word for each node first.
    struct Node {
        State state;
        std::size_t length;
        std::size_t parent;
        char symbol;
    };
    const std::size_t width = min_length + 1;
    std::vector<bool> seen(dfa.num_states() * width, false);
    std::vector<Node> nodes{{dfa.start(), 0, 0, 0}};
    seen[dfa.start() * width] = true;

    auto spell = [&](std::size_t id) {
        std::string w;
        while (id != 0) {
            w += nodes[id].symbol;
            id = nodes[id].parent;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node node = nodes[i];
        if (node.length == min_length && dfa.is_accepting(node.state)) return spell(i);
        for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) {
            const State next = dfa.step(node.state, a);
            if (!live[next]) continue;
            const std::size_t length = std::min(node.length + 1, min_length);
            if (seen[next * width + length]) continue;
            seen[next * width + length] = true;
            nodes.push_back({next, length, i, dfa.alphabet()[a]});
        }
    }
    return std::nullopt;
}

std::size_t default_sample_length(const Dfa& dfa) {
    return 2 * dfa.num_states() + 2;
}

MplResult min_pumping_length_sampled(const Nfa& nfa, std::optional<std::size_t> max_len, const PumpingLimits& limits) {
    const Dfa dfa = determinize(nfa, limits.state_cap);
    const std::size_t bound = max_len.value_or(default_sample_length(dfa));
    if (bound == 0) throw std::invalid_argument("max_len must be positive");

    struct Sample {
        std::string s;
        std::optional<std::size_t> window;
    };
    std::vector<Sample> samples;
    std::size_t p = 1;

    EnumerationCursor cursor(nfa, EnumerationOptions{limits.max_frontier, true, bound});
    while (!cursor.exhausted()) {
        for (auto& s : cursor.next_strings(1024).strings) {
            auto window = least_pumping_window(dfa, s);
            p = std::max(p, window ? *window : s.size() + 1);
            samples.push_back({std::move(s), window});
        }
    }

    MplResult result;
    result.mode = MplMode::Sampled;
    result.p = p;
    for (const auto& sample : samples) {
        if (sample.s.size() >= p) {
            result.witness = sample.s;
            result.split = valid_splits(sample.s, p, dfa).front();
            break;
        }
    }
    if (p > 1) {
        for (const auto& sample : samples) {
            if (sample.s.size() >= p - 1 && (!sample.window || *sample.window > p - 1)) {
                result.counterexample = sample.s;
                break;
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Exact decision

namespace {

using Key = std::vector<std::uint32_t>;

struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto v : key) {
            h ^= v;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

// A pending (x, y) choice: the state after x and the transformation y
// induces on the DFA so far.
struct OpenChoice {
    State origin;
    std::vector<State> map;

    friend auto operator<=>(const OpenChoice&, const OpenChoice&) = default;
};

struct ProductNode {
    std::uint32_t depth;  // symbols read, capped at p
    State current;
    std::vector<OpenChoice> open;
    // Orbit sets advanced by the suffix read so far. The string pumps iff one
    // of them lies inside the accept states at the end.
    std::vector<std::vector<State>> obligations;

    Key key() const {
        Key k{depth, current, static_cast<std::uint32_t>(open.size())};
        for (const auto& o : open) {
            k.push_back(o.origin);
            k.insert(k.end(), o.map.begin(), o.map.end());
        }
        k.push_back(static_cast<std::uint32_t>(obligations.size()));
        for (const auto& ob : obligations) {
            k.push_back(static_cast<std::uint32_t>(ob.size()));
            k.insert(k.end(), ob.begin(), ob.end());
        }
        return k;
    }
};

class CounterexampleSearch {
public:
    CounterexampleSearch(const Dfa& dfa, std::size_t p, std::size_t cap)
        : dfa_(dfa), p_(static_cast<std::uint32_t>(p)), cap_(cap), live_(dfa.coreachable()) {}

    std::optional<std::string> run() {
        if (!live_[dfa_.start()]) return std::nullopt;
        add(ProductNode{0, dfa_.start(), {}, {}}, 0, 0);
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            for (std::size_t a = 0; a < dfa_.alphabet().size(); ++a) {
                auto next = step(nodes_[i], a);
                if (!next) continue;
                const bool goal = is_goal(*next);
                if (add(std::move(*next), i, dfa_.alphabet()[a]) && goal) return spell(nodes_.size() - 1);
            }
        }
        return std::nullopt;
    }

private:
    bool is_goal(const ProductNode& node) const {
        if (node.depth != p_ || !dfa_.is_accepting(node.current)) return false;
        return std::none_of(node.obligations.begin(), node.obligations.end(), [&](const auto& ob) {
            return std::all_of(ob.begin(), ob.end(), [&](State q) { return dfa_.is_accepting(q); });
        });
    }

    bool hopeless(const std::vector<State>& states) const {
        return std::any_of(states.begin(), states.end(), [&](State q) { return !live_[q]; });
    }

    void keep_minimal(std::vector<std::vector<State>>& sets) const {
        std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        std::vector<std::vector<State>> kept;
        for (auto& s : sets) {
            const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const auto& smaller) {
                return std::includes(s.begin(), s.end(), smaller.begin(), smaller.end());
            });
            if (!redundant) kept.push_back(std::move(s));
        }
        std::sort(kept.begin(), kept.end());
        sets = std::move(kept);
    }

    std::vector<State> orbit_of(State origin, const std::vector<State>& map) const {
        std::vector<bool> seen(dfa_.num_states(), false);
        std::vector<State> out;
        for (State q = origin; !seen[q]; q = map[q]) {
            seen[q] = true;
            out.push_back(q);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::optional<ProductNode> step(const ProductNode& node, std::size_t a) const {
        ProductNode next;
        next.current = dfa_.step(node.current, a);
        if (!live_[next.current]) return std::nullopt;

        for (const auto& ob : node.obligations) {
            std::vector<State> image;
            image.reserve(ob.size());
            for (State q : ob) image.push_back(dfa_.step(q, a));
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (!hopeless(image)) next.obligations.push_back(std::move(image));
        }

        if (node.depth < p_) {
            next.depth = node.depth + 1;
            next.open.reserve(node.open.size() + 1);
            for (const auto& choice : node.open) {
                OpenChoice extended{choice.origin, choice.map};
                for (auto& q : extended.map) q = dfa_.step(q, a);
                next.open.push_back(std::move(extended));
            }
            OpenChoice fresh{node.current, std::vector<State>(dfa_.num_states())};
            for (State q = 0; q < dfa_.num_states(); ++q) fresh.map[q] = dfa_.step(q, a);
            next.open.push_back(std::move(fresh));

            std::sort(next.open.begin(), next.open.end());
            next.open.erase(std::unique(next.open.begin(), next.open.end()), next.open.end());

            // Every open choice may end y here, leaving z to be read.
            for (const auto& choice : next.open) {
                auto states = orbit_of(choice.origin, choice.map);
                if (!hopeless(states)) next.obligations.push_back(std::move(states));
            }
            if (next.depth == p_) next.open.clear();
        } else {
            next.depth = p_;
        }
        keep_minimal(next.obligations);
        return next;
    }

    bool add(ProductNode node, std::size_t parent, char symbol) {
        auto [it, inserted] = index_.try_emplace(node.key(), static_cast<std::uint32_t>(nodes_.size()));
        if (!inserted) return false;
        if (nodes_.size() >= cap_)
            throw ResourceError("pumping product automaton exceeded " + std::to_string(cap_) + " states");
        nodes_.push_back(std::move(node));
        parents_.push_back({parent, symbol});
        return true;
    }

    std::string spell(std::size_t id) const {
        std::string w;
        while (id != 0) {
            w += parents_[id].second;
            id = parents_[id].first;
        }
        std::reverse(w.begin(), w.end());
        return w;
    }

    const Dfa& dfa_;
    std::uint32_t p_;
    std::size_t cap_;
    std::vector<bool> live_;
    std::vector<ProductNode> nodes_;
    std::vector<std::pair<std::size_t, char>> parents_;
    std::unordered_map<Key, std::uint32_t, KeyHash> index_;
};

} // namespace

std::optional<std::string> pumping_counterexample(const Dfa& dfa, std::size_t p, const PumpingLimits& limits) {
    if (p == 0) throw std::invalid_argument("pumping length must be positive");
    return CounterexampleSearch(dfa, p, limits.state_cap).run();
}

MplResult min_pumping_length_exact(const Dfa& dfa, const PumpingLimits& limits) {
    const std::size_t upper = std::max<std::size_t>(dfa.num_states(), 1);
    std::optional<std::string> previous;
    for (std::size_t p = 1; p <= upper; ++p) {
        auto counterexample = pumping_counterexample(dfa, p, limits);
        if (counterexample) {
            previous = std::move(counterexample);
            continue;
        }
        MplResult result;
        result.mode = MplMode::Exact;
        result.p = p;
        if (p > 1) result.counterexample = std::move(previous);
        result.witness = shortest_string_at_least(dfa, p);
        if (result.witness) {
            auto splits = valid_splits(*result.witness, p, dfa);
            if (splits.empty()) throw std::logic_error("witness at a valid pumping length has no valid split");
            result.split = std::move(splits.front());
        }
        return result;
    }
    throw std::logic_error("no pumping length up to the DFA state count");
}

} // namespace regpump
