#include "regpump/syntax.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace regpump {

bool ReservedSymbols::distinct() const {
    std::array<char, 7> chars{union_op, concat_op, star_op, empty_language, epsilon, open_paren, close_paren};
    std::sort(chars.begin(), chars.end());
    return std::adjacent_find(chars.begin(), chars.end()) == chars.end();
}

bool ReservedSymbols::is_reserved(char c) const {
    return c == union_op || c == concat_op || c == star_op || c == empty_language || c == epsilon ||
           c == open_paren || c == close_paren;
}

namespace {

bool printable(char c) {
    return std::isprint(static_cast<unsigned char>(c)) != 0;
}

} // namespace

std::vector<SyntaxIssue> validate(std::string_view regex, const ReservedSymbols& reserved) {
    enum class Prev { Start, Operand, Operator };

    std::vector<SyntaxIssue> issues;
    if (regex.empty()) {
        issues.push_back({0, "empty expression"});
        return issues;
    }

    std::vector<std::size_t> open;
    Prev prev = Prev::Start;
    std::size_t last_operator = 0;

    for (std::size_t i = 0; i < regex.size(); ++i) {
        const char c = regex[i];
        if (!printable(c)) {
            issues.push_back({i, "invalid character"});
            prev = Prev::Operand;
        } else if (c == reserved.open_paren) {
            open.push_back(i);
            prev = Prev::Start;
        } else if (c == reserved.close_paren) {
            if (open.empty()) {
                issues.push_back({i, "unmatched closing parenthesis"});
            } else {
                if (prev == Prev::Start)
                    issues.push_back({open.back(), "empty parentheses"});
                else if (prev == Prev::Operator)
                    issues.push_back({last_operator, "operator missing right operand"});
                open.pop_back();
            }
            prev = Prev::Operand;
        } else if (c == reserved.star_op) {
            if (prev != Prev::Operand) issues.push_back({i, "star without operand"});
            prev = Prev::Operand;
        } else if (c == reserved.union_op || c == reserved.concat_op) {
            if (prev == Prev::Start)
                issues.push_back({i, "operator missing left operand"});
            else if (prev == Prev::Operator)
                issues.push_back({i, "consecutive operators"});
            prev = Prev::Operator;
            last_operator = i;
        } else {
            prev = Prev::Operand;
        }
    }

    if (prev == Prev::Operator) issues.push_back({last_operator, "operator missing right operand"});
    for (std::size_t pos : open) issues.push_back({pos, "unmatched opening parenthesis"});

    std::stable_sort(issues.begin(), issues.end(),
                     [](const SyntaxIssue& a, const SyntaxIssue& b) { return a.position < b.position; });
    return issues;
}

void require_valid(std::string_view regex, const ReservedSymbols& reserved) {
    auto issues = validate(regex, reserved);
    if (!issues.empty()) throw SyntaxError(issues.front().position, issues.front().message);
}

// ---------------------------------------------------------------------------
// Segment list

SegmentList parse_segments(std::string_view regex, const ReservedSymbols& reserved) {
    require_valid(regex, reserved);

    // A concatenation marker is needed when the next character starts an operand.
    auto concat_needed = [&](std::size_t next) {
        if (next >= regex.size()) return false;
        const char c = regex[next];
        return c != reserved.star_op && c != reserved.union_op && c != reserved.concat_op &&
               c != reserved.close_paren;
    };
    const Segment concat = Segment::op(Segment::Kind::Concat, reserved.concat_op);

    SegmentList seg;
    std::string temp;
    int depth = 0;

    for (std::size_t i = 0; i < regex.size(); ++i) {
        const char c = regex[i];
        if (c == reserved.open_paren) {
            ++depth;
            if (depth == 1) continue;
        } else if (c == reserved.close_paren) {
            --depth;
            if (depth == 0) {
                seg.push_back(Segment::expression(std::move(temp)));
                temp.clear();
                if (concat_needed(i + 1)) seg.push_back(concat);
                continue;
            }
        }
        temp += c;
        if (depth == 0) {
            if (c == reserved.union_op) {
                seg.push_back(Segment::op(Segment::Kind::Union, c));
            } else if (c == reserved.concat_op) {
                seg.push_back(Segment::op(Segment::Kind::Concat, c));
            } else {
                seg.push_back(c == reserved.star_op ? Segment::op(Segment::Kind::Star, c)
                                                    : Segment::expression(temp));
                if (concat_needed(i + 1)) seg.push_back(concat);
            }
            temp.clear();
        }
    }
    return seg;
}

std::string render_segments(const SegmentList& segments, const ReservedSymbols& reserved) {
    std::string out;
    for (const auto& s : segments) {
        switch (s.kind) {
        case Segment::Kind::Expression:
            if (s.text.size() > 1) {
                out += reserved.open_paren;
                out += s.text;
                out += reserved.close_paren;
            } else {
                out += s.text;
            }
            break;
        case Segment::Kind::Union: out += reserved.union_op; break;
        case Segment::Kind::Concat: out += reserved.concat_op; break;
        case Segment::Kind::Star: out += reserved.star_op; break;
        }
    }
    return out;
}

std::vector<std::string> segment_texts(const SegmentList& segments) {
    std::vector<std::string> out;
    out.reserve(segments.size());
    for (const auto& s : segments) out.push_back(s.text);
    return out;
}

// ---------------------------------------------------------------------------
// Syntax tree

AstPtr RegexAst::empty_language() {
    return AstPtr(new RegexAst(Kind::EmptyLanguage, 0, nullptr, nullptr));
}
AstPtr RegexAst::epsilon() {
    return AstPtr(new RegexAst(Kind::Epsilon, 0, nullptr, nullptr));
}
AstPtr RegexAst::symbol(char c) {
    return AstPtr(new RegexAst(Kind::Symbol, c, nullptr, nullptr));
}
AstPtr RegexAst::alternation(AstPtr left, AstPtr right) {
    return AstPtr(new RegexAst(Kind::Union, 0, std::move(left), std::move(right)));
}
AstPtr RegexAst::concatenation(AstPtr left, AstPtr right) {
    return AstPtr(new RegexAst(Kind::Concat, 0, std::move(left), std::move(right)));
}
AstPtr RegexAst::star(AstPtr child) {
    return AstPtr(new RegexAst(Kind::Star, 0, std::move(child), nullptr));
}

std::size_t RegexAst::depth() const {
    std::size_t d = 0;
    if (left_) d = std::max(d, left_->depth());
    if (right_) d = std::max(d, right_->depth());
    return d + 1;
}

bool equal(const RegexAst& a, const RegexAst& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case RegexAst::Kind::EmptyLanguage:
    case RegexAst::Kind::Epsilon: return true;
    case RegexAst::Kind::Symbol: return a.symbol_char() == b.symbol_char();
    case RegexAst::Kind::Star: return equal(*a.child(), *b.child());
    case RegexAst::Kind::Union:
    case RegexAst::Kind::Concat: return equal(*a.left(), *b.left()) && equal(*a.right(), *b.right());
    }
    return false;
}

namespace {

class AstParser {
public:
    AstParser(std::string_view text, const ReservedSymbols& reserved) : text_(text), r_(reserved) {}

    AstPtr parse() {
        auto ast = parse_union();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected character");
        return ast;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    bool starts_operand() const {
        if (at_end()) return false;
        const char c = peek();
        return c != r_.union_op && c != r_.concat_op && c != r_.star_op && c != r_.close_paren;
    }

    AstPtr parse_union() {
        auto left = parse_concat();
        while (!at_end() && peek() == r_.union_op) {
            ++pos_;
            left = RegexAst::alternation(left, parse_concat());
        }
        return left;
    }

    AstPtr parse_concat() {
        auto left = parse_star();
        for (;;) {
            if (!at_end() && peek() == r_.concat_op) {
                ++pos_;
                left = RegexAst::concatenation(left, parse_star());
            } else if (starts_operand()) {
                left = RegexAst::concatenation(left, parse_star());
            } else {
                return left;
            }
        }
    }

    AstPtr parse_star() {
        auto atom = parse_atom();
        while (!at_end() && peek() == r_.star_op) {
            ++pos_;
            atom = RegexAst::star(atom);
        }
        return atom;
    }

    AstPtr parse_atom() {
        if (at_end()) throw SyntaxError(pos_, "missing operand");
        const char c = peek();
        if (c == r_.open_paren) {
            const std::size_t open = pos_++;
            auto inner = parse_union();
            if (at_end() || peek() != r_.close_paren) throw SyntaxError(open, "unmatched opening parenthesis");
            ++pos_;
            return inner;
        }
        if (!starts_operand()) throw SyntaxError(pos_, "missing operand");
        ++pos_;
        if (c == r_.epsilon) return RegexAst::epsilon();
        if (c == r_.empty_language) return RegexAst::empty_language();
        return RegexAst::symbol(c);
    }

    std::string_view text_;
    const ReservedSymbols& r_;
    std::size_t pos_ = 0;
};

int precedence(RegexAst::Kind kind) {
    switch (kind) {
    case RegexAst::Kind::Union: return 0;
    case RegexAst::Kind::Concat: return 1;
    case RegexAst::Kind::Star: return 2;
    default: return 3;
    }
}

void render_into(const RegexAst& node, int min_prec, const ReservedSymbols& r, std::string& out) {
    const bool wrap = precedence(node.kind()) < min_prec;
    if (wrap) out += r.open_paren;
    switch (node.kind()) {
    case RegexAst::Kind::EmptyLanguage: out += r.empty_language; break;
    case RegexAst::Kind::Epsilon: out += r.epsilon; break;
    case RegexAst::Kind::Symbol: out += node.symbol_char(); break;
    case RegexAst::Kind::Union:
        render_into(*node.left(), 0, r, out);
        out += r.union_op;
        render_into(*node.right(), 1, r, out);
        break;
    case RegexAst::Kind::Concat:
        render_into(*node.left(), 1, r, out);
        render_into(*node.right(), 2, r, out);
        break;
    case RegexAst::Kind::Star:
        render_into(*node.child(), 2, r, out);
        out += r.star_op;
        break;
    }
    if (wrap) out += r.close_paren;
}

using Positions = std::vector<bool>;

bool none(const Positions& p) {
    return std::find(p.begin(), p.end(), true) == p.end();
}

// Set of end offsets j such that w[i, j) is denoted by `node`, for some i in `from`.
Positions ends(const RegexAst& node, std::string_view w, const Positions& from) {
    Positions out(from.size(), false);
    switch (node.kind()) {
    case RegexAst::Kind::EmptyLanguage: break;
    case RegexAst::Kind::Epsilon: out = from; break;
    case RegexAst::Kind::Symbol:
        for (std::size_t i = 0; i < w.size(); ++i)
            if (from[i] && w[i] == node.symbol_char()) out[i + 1] = true;
        break;
    case RegexAst::Kind::Union: {
        out = ends(*node.left(), w, from);
        auto r = ends(*node.right(), w, from);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] || r[i];
        break;
    }
    case RegexAst::Kind::Concat: out = ends(*node.right(), w, ends(*node.left(), w, from)); break;
    case RegexAst::Kind::Star: {
        out = from;
        Positions frontier = from;
        while (!none(frontier)) {
            auto step = ends(*node.child(), w, frontier);
            for (std::size_t i = 0; i < step.size(); ++i) {
                step[i] = step[i] && !out[i];
                if (step[i]) out[i] = true;
            }
            frontier = std::move(step);
        }
        break;
    }
    }
    return out;
}

} // namespace

AstPtr parse_ast(std::string_view regex, const ReservedSymbols& reserved) {
    require_valid(regex, reserved);
    return AstParser(regex, reserved).parse();
}

std::string render(const RegexAst& ast, const ReservedSymbols& reserved) {
    std::string out;
    render_into(ast, 0, reserved, out);
    return out;
}

bool oracle_match(const RegexAst& ast, std::string_view w) {
    Positions start(w.size() + 1, false);
    start[0] = true;
    return ends(ast, w, start)[w.size()];
}

} // namespace regpump
