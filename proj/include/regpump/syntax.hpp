#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "regpump/errors.hpp"

namespace regpump {

/// The characters with operator meaning. None of them can be an alphabet symbol.
struct ReservedSymbols {
    char union_op = 'U';
    char concat_op = '.';
    char star_op = '*';
    char empty_language = '\\';
    char epsilon = 'e';
    char open_paren = '(';
    char close_paren = ')';

    bool distinct() const;
    bool is_reserved(char c) const;

    friend bool operator==(const ReservedSymbols&, const ReservedSymbols&) = default;
};

struct SyntaxIssue {
    std::size_t position;
    std::string message;

    friend bool operator==(const SyntaxIssue&, const SyntaxIssue&) = default;
};

/// Returns every problem found in `regex`; an empty list means well-formed.
std::vector<SyntaxIssue> validate(std::string_view regex, const ReservedSymbols& reserved = {});

/// Throws SyntaxError for the first issue reported by validate().
void require_valid(std::string_view regex, const ReservedSymbols& reserved = {});

struct Segment {
    enum class Kind { Expression, Union, Concat, Star };

    Kind kind;
    std::string text;  // sub-expression text; the operator character otherwise

    bool is_operator() const { return kind != Kind::Expression; }

    static Segment expression(std::string text) { return {Kind::Expression, std::move(text)}; }
    static Segment op(Kind kind, char c) { return {kind, std::string(1, c)}; }

    friend bool operator==(const Segment&, const Segment&) = default;
};

using SegmentList = std::vector<Segment>;

/// Flat, single-level split of `regex`: parenthesised groups become isolated
/// expression segments and concatenation markers are made explicit.
SegmentList parse_segments(std::string_view regex, const ReservedSymbols& reserved = {});

/// Rebuilds a raw expression from a segment list, restoring parentheses
/// around multi-character sub-expressions.
std::string render_segments(const SegmentList& segments, const ReservedSymbols& reserved = {});

/// Plain texts of the segments, operators included.
std::vector<std::string> segment_texts(const SegmentList& segments);

class RegexAst;
using AstPtr = std::shared_ptr<const RegexAst>;

/// Immutable syntax tree node. Children are shared, never mutated.
class RegexAst {
public:
    enum class Kind { EmptyLanguage, Epsilon, Symbol, Union, Concat, Star };

    static AstPtr empty_language();
    static AstPtr epsilon();
    static AstPtr symbol(char c);
    static AstPtr alternation(AstPtr left, AstPtr right);
    static AstPtr concatenation(AstPtr left, AstPtr right);
    static AstPtr star(AstPtr child);

    Kind kind() const { return kind_; }
    char symbol_char() const { return symbol_; }
    const AstPtr& left() const { return left_; }
    const AstPtr& right() const { return right_; }
    const AstPtr& child() const { return left_; }

    std::size_t depth() const;

private:
    RegexAst(Kind kind, char symbol, AstPtr left, AstPtr right)
        : kind_(kind), symbol_(symbol), left_(std::move(left)), right_(std::move(right)) {}

    Kind kind_;
    char symbol_;
    AstPtr left_;
    AstPtr right_;
};

/// Structural equality.
bool equal(const RegexAst& a, const RegexAst& b);

/// Recursive-descent parse with precedence star > concatenation > union.
/// Union and concatenation associate to the left.
AstPtr parse_ast(std::string_view regex, const ReservedSymbols& reserved = {});

/// Minimal-parenthesis rendering; parse_ast(render(t)) is structurally equal to t.
std::string render(const RegexAst& ast, const ReservedSymbols& reserved = {});

/// Brute-force membership from the denotational semantics: the set of split
/// points reachable after each sub-expression. Independent of the automata.
bool oracle_match(const RegexAst& ast, std::string_view w);

} // namespace regpump
