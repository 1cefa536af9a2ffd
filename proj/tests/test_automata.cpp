#include <doctest.h>

#include <algorithm>
#include <regex>

#include "regpump/automata.hpp"
#include "support/corpus.hpp"

using namespace regpump;
using regpump::testing::all_strings;
using regpump::testing::RegexGenerator;
using regpump::testing::symbols_of;

namespace {

// q0 -e-> q1 -e-> q2, plus an 'a' edge so the alphabet is non-empty.
Nfa epsilon_chain() {
    NfaBuilder b;
    const State q0 = b.add_state(), q1 = b.add_state(), q2 = b.add_state();
    b.add_transition(q0, std::nullopt, q1);
    b.add_transition(q1, std::nullopt, q2);
    b.add_transition(q2, 'a', q0);
    return std::move(b).build(q0, StateSet{q2});
}

Nfa epsilon_cycle() {
    NfaBuilder b;
    const State q0 = b.add_state(), q1 = b.add_state();
    b.add_state();
    b.add_transition(q0, std::nullopt, q1);
    b.add_transition(q1, std::nullopt, q0);
    return std::move(b).build(q0, StateSet{});
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
    std::regex re(pattern);
    return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

} // namespace

TEST_CASE("compile base cases") {
    SUBCASE("empty language") {
        const Nfa n = compile("\\");
        CHECK(n.num_states() == 1);
        CHECK(n.accepts().empty());
        CHECK(n.alphabet().empty());
        CHECK_FALSE(accepts(n, ""));
        CHECK_FALSE(accepts(n, "a"));
    }
    SUBCASE("epsilon") {
        const Nfa n = compile("e");
        CHECK(n.num_states() == 1);
        CHECK(n.is_accepting(n.start()));
        CHECK(accepts(n, ""));
        CHECK_FALSE(accepts(n, "e"));
    }
    SUBCASE("single symbol") {
        const Nfa n = compile("0");
        CHECK(n.num_states() == 2);
        CHECK(n.num_transitions() == 1);
        CHECK(n.alphabet() == std::vector<char>{'0'});
        CHECK(accepts(n, "0"));
        CHECK_FALSE(accepts(n, ""));
        CHECK_FALSE(accepts(n, "00"));
    }
    CHECK_THROWS_AS(compile("*a"), SyntaxError);
}

TEST_CASE("compile structure invariants") {
    RegexGenerator gen("01ab", 5);
    for (int i = 0; i < 200; ++i) {
        const auto regex = gen.regex(4);
        const Nfa n = compile(regex);
        CAPTURE(regex);
        CHECK(n.start() < n.num_states());
        for (State a : n.accepts()) CHECK(a < n.num_states());
        CHECK(n.accepts().size() <= 1);
        for (State s = 0; s < n.num_states(); ++s) {
            for (const auto& t : n.transitions_from(s)) {
                CHECK(t.target < n.num_states());
                if (t.symbol) CHECK(n.in_alphabet(*t.symbol));
            }
        }
        const auto root = parse_ast(regex)->kind();
        if (root == RegexAst::Kind::Union || root == RegexAst::Kind::Star) CHECK(n.accepts().size() == 1);
    }
    CHECK(compile("aUb").accepts().size() == 1);
    CHECK(compile("(ab)*").accepts().size() == 1);
    CHECK(compile("a\\").accepts().empty());
}

TEST_CASE("epsilon_closure") {
    NfaBuilder b;
    const State q0 = b.add_state();
    b.add_transition(q0, 'a', b.add_state());
    const Nfa plain = std::move(b).build(q0, StateSet{});
    CHECK(epsilon_closure(StateSet{0}, plain) == StateSet{0});

    CHECK(epsilon_closure(StateSet{0}, epsilon_chain()) == StateSet{0, 1, 2});
    CHECK(epsilon_closure(StateSet{0}, epsilon_cycle()) == StateSet{0, 1});
    CHECK(epsilon_closure(StateSet{2}, epsilon_cycle()) == StateSet{2});
}

TEST_CASE("epsilon_closure is extensive, monotone and idempotent") {
    RegexGenerator gen("01", 9);
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        const Nfa n = compile(gen.regex(4));
        std::vector<State> small, large;
        for (State s = 0; s < n.num_states(); ++s) {
            const auto r = rng() % 3;
            if (r == 0) small.push_back(s);
            if (r <= 1) large.push_back(s);
        }
        const StateSet S(small), T(large);
        const auto cs = epsilon_closure(S, n);
        const auto ct = epsilon_closure(T, n);
        CHECK(cs.includes(S));
        CHECK(ct.includes(cs));
        CHECK(epsilon_closure(cs, n) == cs);
    }
}

TEST_CASE("transit") {
    const Nfa n = compile("0");
    CHECK(transit('0', StateSet{0}, n) == StateSet{1});
    CHECK(transit('1', StateSet{0}, n).empty());
    CHECK(transit(std::nullopt, StateSet{0, 1}, n) == StateSet{0, 1});
    CHECK(transit(std::nullopt, StateSet{0}, epsilon_chain()) == StateSet{0});
}

TEST_CASE("accepts") {
    CHECK(accepts(compile("(1U0)*101(1U0)*"), "1011"));
    CHECK(accepts(compile("e"), ""));
    CHECK(accepts(compile("10*1"), "11"));
    CHECK_FALSE(accepts(compile("10*1"), "10"));
    CHECK(accepts(compile("10*1"), "10001"));
    CHECK_FALSE(accepts(compile("10*1"), "1x1"));
    CHECK(accepts(compile("aabUa*b*"), "aab"));
    CHECK(accepts(compile("(e)*"), ""));
}

TEST_CASE("characters outside the alphabet reject") {
    RegexGenerator gen("01", 21);
    for (int i = 0; i < 50; ++i) {
        const Nfa n = compile(gen.regex(4));
        for (const auto& w : all_strings({'0', '1', 'x'}, 3))
            if (w.find('x') != std::string::npos) CHECK_FALSE(accepts(n, w));
    }
}

TEST_CASE("compiled NFA agrees with the oracle matcher") {
    RegexGenerator gen("01ab", 1234);
    for (int i = 0; i < 150; ++i) {
        const auto regex = gen.regex(4);
        const Nfa n = compile(regex);
        const auto ast = parse_ast(regex);
        CAPTURE(regex);
        for (const auto& w : all_strings(symbols_of(regex), 5)) {
            CAPTURE(w);
            CHECK(accepts(n, w) == oracle_match(*ast, w));
        }
    }
}

TEST_CASE("determinize") {
    const Dfa d = determinize(compile("0"));
    CHECK(d.num_states() == 3);
    CHECK(d.accepts("0"));
    CHECK_FALSE(d.accepts("00"));
    CHECK(d.step(d.dead_state(), '0') == d.dead_state());

    const Dfa empty = determinize(compile("\\"));
    CHECK_FALSE(empty.accepts(""));
    CHECK(empty.num_states() == 2);

    SUBCASE("complete transition function") {
        const Dfa m = determinize(compile("(1U0)*101(1U0)*"));
        for (State s = 0; s < m.num_states(); ++s)
            for (std::size_t a = 0; a < m.alphabet().size(); ++a) CHECK(m.step(s, a) < m.num_states());
        CHECK_FALSE(m.accepts("12"));
    }

    SUBCASE("blow-up guard") {
        CHECK_THROWS_AS(determinize(compile("(0U1)*0(0U1)(0U1)(0U1)(0U1)(0U1)(0U1)"), 20), ResourceError);
    }
}

TEST_CASE("determinize preserves the language") {
    RegexGenerator gen("01ab", 99);
    for (int i = 0; i < 200; ++i) {
        const auto regex = gen.regex(4);
        const Nfa n = compile(regex);
        const Dfa d = determinize(n);
        CAPTURE(regex);
        CHECK(d.num_states() >= 1);
        for (const auto& w : all_strings(n.alphabet(), 6)) CHECK(d.accepts(w) == accepts(n, w));
    }
}

TEST_CASE("export_graph") {
    const auto eps = export_graph(compile("e"));
    CHECK(count_matches(eps, R"(q\d+ \[shape)") == 1);
    CHECK(count_matches(eps, "->") == 0);

    const auto zero = export_graph(compile("0"));
    CHECK(count_matches(zero, R"(q\d+ \[shape)") == 2);
    CHECK(count_matches(zero, "->") == 1);
    CHECK(zero.find("q0 -> q1 [label=\"0\"]") != std::string::npos);
    CHECK(zero.find("q1 [shape=doublecircle]") != std::string::npos);
    CHECK(zero ==
          "digraph nfa {\n"
          "  rankdir=LR;\n"
          "  q0 [shape=circle, style=bold, xlabel=\"start\"];\n"
          "  q1 [shape=doublecircle];\n"
          "  q0 -> q1 [label=\"0\"];\n"
          "}\n");

    const Nfa n = compile("(1U0)*101(1U0)*");
    CHECK(export_graph(n) == export_graph(n));
    CHECK(count_matches(export_graph(n), "->") == n.num_transitions());

    ReservedSymbols r;
    r.epsilon = '#';
    CHECK(export_graph(compile("a*", r), r).find("[label=\"#\"]") != std::string::npos);
    CHECK(export_graph(compile("a*")).find("[label=\"e\"]") != std::string::npos);
}
