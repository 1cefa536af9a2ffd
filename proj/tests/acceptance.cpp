// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "regpump/automata.hpp"
#include "regpump/enumerate.hpp"
#include "regpump/pumping.hpp"
#include "regpump/service.hpp"
#include "regpump/syntax.hpp"
#include "support/corpus.hpp"

using namespace regpump;
using nlohmann::json;
using regpump::testing::all_strings;
using regpump::testing::RegexGenerator;
using regpump::testing::symbols_of;

namespace {

constexpr double kReferenceSeconds = 1.0;
constexpr double kSweepSeconds = 60.0;
constexpr std::size_t kSweepCorpus = 500;
constexpr std::size_t kSweepDepth = 4;
constexpr std::size_t kSweepLength = 6;
constexpr std::uint64_t kSweepSeed = 20240501;
constexpr std::size_t kEnumCorpus = 100;
constexpr std::size_t kEnumLength = 5;
constexpr std::size_t kWitnessPumps = 10;
constexpr std::size_t kOrbitTriples = 100;
constexpr std::size_t kOrbitPumps = 50;

struct Outcome {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const std::string& name, const Outcome& o, double seconds, double limit) {
    const bool ok = o.ok && seconds < limit;
    if (!ok) ++failures;
    std::string detail = o.detail;
    if (o.ok && seconds >= limit) detail += (detail.empty() ? "" : "; ") + std::string("too slow");
    std::printf("%s  %-58s %8.3fs (limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), seconds, limit,
                detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
}

void criterion(const std::string& name, double limit, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    report(name, o, std::chrono::duration<double>(Clock::now() - t0).count(), limit);
}

// Collects mismatches; keeps the first few for the report line.
struct Tally {
    std::size_t checked = 0;
    std::size_t bad = 0;
    std::string first;

    void check(bool ok, const std::string& what) {
        ++checked;
        if (ok) return;
        if (bad++ == 0) first = what;
    }
    Outcome outcome() const {
        std::ostringstream s;
        s << checked << " checks, " << bad << " disagreements";
        if (bad) s << "; first: " << first;
        return {bad == 0, s.str()};
    }
};

std::vector<std::string> sweep_corpus() {
    RegexGenerator gen("01ab", kSweepSeed);
    return gen.corpus(kSweepCorpus, kSweepDepth);
}

std::string show(const std::optional<std::string>& s) {
    return s ? "\"" + *s + "\"" : "none";
}

void reference_outputs() {
    criterion("membership (1U0)*101(1U0)* on 1011", kReferenceSeconds, [] {
        const bool m = accepts(compile("(1U0)*101(1U0)*"), "1011");
        return Outcome{m, m ? "true" : "false"};
    });

    criterion("exact mpl of 1*01*01* with witness, split, counterexample", kReferenceSeconds, [] {
        const auto r = min_pumping_length_exact(determinize(compile("1*01*01*")));
        const bool ok = r.p == 3 && r.witness == "001" && r.split == PumpSplit{"00", "1", ""} &&
                        r.counterexample == "00";
        return Outcome{ok, "p=" + std::to_string(r.p) + " witness=" + show(r.witness) +
                               " counterexample=" + show(r.counterexample)};
    });

    criterion("exact mpl of aabUa*b*", kReferenceSeconds, [] {
        const auto r = min_pumping_length_exact(determinize(compile("aabUa*b*")));
        return Outcome{r.p == 1, "p=" + std::to_string(r.p)};
    });

    criterion("exact mpl of 10*1 with witness", kReferenceSeconds, [] {
        const auto r = min_pumping_length_exact(determinize(compile("10*1")));
        const auto brute = regpump::testing::brute_mpl(*parse_ast("10*1"), {'0', '1'}, 8, 8);
        const bool ok = r.p == 3 && r.witness == "101" && brute == 3;
        return Outcome{ok, "p=" + std::to_string(r.p) + " witness=" + show(r.witness) +
                               " brute=" + std::to_string(brute)};
    });

    criterion("segments of a(caUac)c*cac", kReferenceSeconds, [] {
        const auto got = segment_texts(parse_segments("a(caUac)c*cac"));
        const std::vector<std::string> want{"a", ".", "caUac", ".", "c", "*", ".", "c", ".", "a", ".", "c"};
        std::string shown;
        for (const auto& s : got) shown += (shown.empty() ? "" : " ") + s;
        return Outcome{got == want, shown};
    });

    criterion("first enumeration batch of 1*01*01* starts with 00", kReferenceSeconds, [] {
        auto cursor = open_enumeration(compile("1*01*01*"));
        const auto batch = cursor.next_strings(10);
        const bool ok = !batch.strings.empty() && batch.strings.front() == "00";
        return Outcome{ok, batch.strings.empty() ? "empty batch" : "first=\"" + batch.strings.front() + "\""};
    });
}

void property_suites() {
    const auto corpus = sweep_corpus();

    criterion("oracle equivalence, 500 regexes x all strings of length <= 6", kSweepSeconds, [&] {
        Tally t;
        for (const auto& regex : corpus) {
            const auto ast = parse_ast(regex);
            const Nfa n = compile(regex);
            for (const auto& w : all_strings(symbols_of(regex), kSweepLength))
                t.check(accepts(n, w) == oracle_match(*ast, w), regex + " on \"" + w + "\"");
        }
        return t.outcome();
    });

    criterion("determinization equivalence on the same sweep", kSweepSeconds, [&] {
        Tally t;
        for (const auto& regex : corpus) {
            const Nfa n = compile(regex);
            const Dfa d = determinize(n);
            for (const auto& w : all_strings(symbols_of(regex), kSweepLength))
                t.check(d.accepts(w) == accepts(n, w), regex + " on \"" + w + "\"");
        }
        return t.outcome();
    });

    criterion("enumeration completeness and order through length 5", kSweepSeconds, [&] {
        Tally t;
        for (std::size_t i = 0; i < kEnumCorpus; ++i) {
            const auto& regex = corpus[i];
            const auto ast = parse_ast(regex);
            std::vector<std::string> expected;
            for (const auto& w : all_strings(symbols_of(regex), kEnumLength))
                if (oracle_match(*ast, w)) expected.push_back(w);

            EnumerationCursor cursor(compile(regex));
            std::vector<std::string> got;
            while (!cursor.exhausted() && cursor.current_length() <= kEnumLength)
                for (auto& s : cursor.next_strings(17).strings)
                    if (s.size() <= kEnumLength) got.push_back(std::move(s));
            bool ordered = true;
            for (std::size_t k = 1; k < got.size(); ++k) ordered = ordered && shortlex_less(got[k - 1], got[k]);
            t.check(got == expected && ordered, regex);
        }
        return t.outcome();
    });

    criterion("mpl cross-validation over the corpus", kSweepSeconds, [&] {
        Tally t;
        for (const auto& regex : corpus) {
            const Nfa n = compile(regex);
            const Dfa d = determinize(n);
            const auto exact = min_pumping_length_exact(d);
            const auto sampled = min_pumping_length_sampled(n);
            t.check(sampled.p == exact.p, regex + ": sampled p=" + std::to_string(sampled.p) +
                                              " exact p=" + std::to_string(exact.p));
            t.check(exact.p >= 1 && exact.p <= d.num_states(), regex + ": p out of bounds");

            if (regpump::testing::denotes_finite(*parse_ast(regex))) {
                std::size_t longest = 0;
                bool any = false;
                EnumerationCursor cursor(n);
                while (!cursor.exhausted())
                    for (const auto& s : cursor.next_strings(64).strings) {
                        longest = std::max(longest, s.size());
                        any = true;
                    }
                t.check(exact.p == (any ? longest + 1 : 1), regex + ": finite language p");
            }
            if (exact.counterexample) {
                const auto& c = *exact.counterexample;
                t.check(exact.p > 1 && accepts(n, c) && c.size() >= exact.p - 1 &&
                            !is_pumpable(c, exact.p - 1, d),
                        regex + ": counterexample \"" + c + "\"");
            }
            if (exact.split) {
                bool pumps = true;
                for (std::size_t i = 0; i <= kWitnessPumps; ++i) pumps = pumps && accepts(n, pump(*exact.split, i));
                t.check(pumps, regex + ": witness split does not pump");
            }
        }
        return t.outcome();
    });

    criterion("orbit soundness on 100 random triples, i <= 50", kSweepSeconds, [&] {
        Tally t;
        std::mt19937 rng(kSweepSeed);
        for (std::size_t i = 0; t.checked < kOrbitTriples; ++i) {
            const auto& regex = corpus[i % corpus.size()];
            const Nfa n = compile(regex);
            std::vector<std::string> members;
            for (auto& s : strings_at(n, 0, 40).strings)
                if (!s.empty()) members.push_back(std::move(s));
            if (members.empty()) continue;
            const auto& s = members[rng() % members.size()];
            const std::size_t p = 1 + rng() % s.size();
            const std::size_t x = rng() % p;
            const std::size_t xy = x + 1 + rng() % (p - x);
            const PumpSplit split{s.substr(0, x), s.substr(x, xy - x), s.substr(xy)};
            bool brute = true;
            for (std::size_t k = 0; k <= kOrbitPumps; ++k) brute = brute && accepts(n, pump(split, k));
            t.check(pumps_for_all_i(split, determinize(n)) == brute, regex + " split of \"" + s + "\"");
        }
        return t.outcome();
    });

    criterion("service statelessness: paging tiles, repeats byte-identical", kSweepSeconds, [&] {
        const Service api;
        Tally t;
        for (std::size_t i = 0; i < 50; ++i) {
            const auto& regex = corpus[i];
            const auto ask = [&](std::size_t offset, std::size_t count) {
                return api.strings(json{{"regex", regex}, {"count", count}, {"offset", offset}}.dump());
            };
            const auto whole = json::parse(ask(0, 40).body)["strings"];
            json tiled = json::array();
            std::size_t offset = 0;
            for (std::size_t k : {3, 11, 1, 25}) {
                const auto page = json::parse(ask(offset, k).body);
                for (const auto& s : page["strings"]) tiled.push_back(s);
                offset += k;
            }
            t.check(tiled == whole, regex + ": pages do not tile");
            t.check(ask(5, 9).body == ask(5, 9).body, regex + ": strings body differs");
            const auto mreq = json{{"regex", regex}, {"mode", "exact"}}.dump();
            t.check(api.mpl(mreq).body == api.mpl(mreq).body, regex + ": mpl body differs");
        }
        return t.outcome();
    });
}

} // namespace

int main() {
    reference_outputs();
    property_suites();
    std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "OK", failures);
    return failures ? 1 : 0;
}
