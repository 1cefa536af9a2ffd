#include <sstream>

#include "regpump/automata.hpp"

namespace regpump {

namespace {

std::string dot_label(char c) {
    std::string out;
    if (c == '"' || c == '\\') out += '\\';
    out += c;
    return out;
}

} // namespace

std::string export_graph(const Nfa& nfa, const ReservedSymbols& reserved) {
    std::ostringstream dot;
    dot << "digraph nfa {\n";
    dot << "  rankdir=LR;\n";
    for (State s = 0; s < nfa.num_states(); ++s) {
        dot << "  q" << s << " [shape=" << (nfa.is_accepting(s) ? "doublecircle" : "circle");
        if (s == nfa.start()) dot << ", style=bold, xlabel=\"start\"";
        dot << "];\n";
    }
    for (State s = 0; s < nfa.num_states(); ++s) {
        for (const auto& t : nfa.transitions_from(s)) {
            dot << "  q" << s << " -> q" << t.target << " [label=\""
                << dot_label(t.symbol ? *t.symbol : reserved.epsilon) << "\"];\n";
        }
    }
    dot << "}\n";
    return dot.str();
}

} // namespace regpump
