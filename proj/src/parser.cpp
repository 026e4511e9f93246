#include <prefasp/order.hpp>
#include <prefasp/parser.hpp>

#include <cctype>
#include <map>
#include <set>

namespace prefasp {
namespace {

enum class Tok {
    Ident,
    Variable,
    Anonymous,
    Number,
    LParen,
    RParen,
    Comma,
    Dot,
    If,
    WeakIf,
    Colon,
    Less,
    Greater,
    NotEq,
    Minus,
    LBracket,
    RBracket,
    End
};

struct Token {
    Tok         type;
    std::string text;
    SourceSpan  span;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            SourceSpan sp{line_, col_, pos_, pos_};
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, "", sp});
                return out;
            }
            char c = text_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t b = pos_;
                while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                    advance();
                }
                std::string word(text_.substr(b, pos_ - b));
                sp.end = pos_;
                Tok t;
                if (word == "_") {
                    t = Tok::Anonymous;
                }
                else if (word[0] == '_') {
                    throw ParseError("identifiers cannot start with '_': '" + word + "'", sp);
                }
                else if (std::isupper(static_cast<unsigned char>(word[0]))) {
                    t = Tok::Variable;
                }
                else {
                    t = Tok::Ident;
                }
                out.push_back({t, std::move(word), sp});
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t b = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    advance();
                }
                sp.end = pos_;
                out.push_back({Tok::Number, std::string(text_.substr(b, pos_ - b)), sp});
                continue;
            }
            Tok         t;
            std::size_t len = 1;
            switch (c) {
                case '(': t = Tok::LParen; break;
                case ')': t = Tok::RParen; break;
                case ',': t = Tok::Comma; break;
                case '.': t = Tok::Dot; break;
                case '<': t = Tok::Less; break;
                case '>': t = Tok::Greater; break;
                case '-': t = Tok::Minus; break;
                case '[': t = Tok::LBracket; break;
                case ']': t = Tok::RBracket; break;
                case ':':
                    if (peek(1) == '-') {
                        t   = Tok::If;
                        len = 2;
                    }
                    else if (peek(1) == '~') {
                        t   = Tok::WeakIf;
                        len = 2;
                    }
                    else {
                        t = Tok::Colon;
                    }
                    break;
                case '!':
                    if (peek(1) != '=') {
                        throw ParseError("unexpected character '!'", sp);
                    }
                    t   = Tok::NotEq;
                    len = 2;
                    break;
                default: throw ParseError(std::string("unexpected character '") + c + "'", sp);
            }
            std::string s(text_.substr(pos_, len));
            for (std::size_t i = 0; i != len; ++i) {
                advance();
            }
            sp.end = pos_;
            out.push_back({t, std::move(s), sp});
        }
    }

private:
    char peek(std::size_t off) const { return pos_ + off < text_.size() ? text_[pos_ + off] : '\0'; }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        }
        else {
            ++col_;
        }
        ++pos_;
    }
    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
            }
            else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            }
            else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t      pos_  = 0;
    std::size_t      line_ = 1;
    std::size_t      col_  = 1;
};

struct Statement {
    enum class Kind { Rule, Preference };
    Kind       kind = Kind::Rule;
    MetaRule   rule;
    std::string pref_lhs, pref_rhs;
    SourceSpan span;
};

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

    std::vector<Statement> run() {
        std::vector<Statement> out;
        while (cur().type != Tok::End) {
            out.push_back(statement());
        }
        return out;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    const Token& ahead(std::size_t k) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
    const Token& take() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
    bool         accept(Tok t) {
        if (cur().type == t) {
            ++i_;
            return true;
        }
        return false;
    }
    const Token& expect(Tok t, const char* what) {
        if (cur().type != t) {
            fail(std::string("expected ") + what);
        }
        return take();
    }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = cur();
        throw ParseError(msg + (t.type == Tok::End ? " at end of input" : " near '" + t.text + "'"), t.span);
    }

    Statement statement() {
        Statement st;
        SourceSpan start = cur().span;
        if (cur().type == Tok::Ident && ahead(1).type == Tok::Less && ahead(2).type == Tok::Ident &&
            ahead(3).type == Tok::Dot) {
            st.kind     = Statement::Kind::Preference;
            st.pref_lhs = take().text;
            take();
            st.pref_rhs = take().text;
            st.span     = finish(start, take().span);
            return st;
        }
        MetaRule& r = st.rule;
        if (cur().type == Tok::Ident && ahead(1).type == Tok::Colon) {
            r.label = take().text;
            take();
        }
        if (accept(Tok::WeakIf)) {
            body(r);
            expect(Tok::Dot, "'.'");
            r.weak = WeakSpec{};
            if (accept(Tok::LBracket)) {
                r.weak->weight = number();
                if (accept(Tok::Colon)) {
                    r.weak->level = number();
                }
                expect(Tok::RBracket, "']'");
            }
            st.span = finish(start, toks_[i_ - 1].span);
            r.span  = st.span;
            return st;
        }
        if (!accept(Tok::If)) {
            r.head.push_back(literal());
            while (cur().type == Tok::Ident && cur().text == "v") {
                take();
                r.head.push_back(literal());
            }
            if (accept(Tok::If)) {
                body(r);
            }
        }
        else {
            body(r);
        }
        st.span = finish(start, expect(Tok::Dot, "'.'").span);
        r.span  = st.span;
        return st;
    }

    static SourceSpan finish(SourceSpan start, const SourceSpan& last) {
        start.end = last.end;
        return start;
    }

    std::int64_t number() {
        const Token& t = expect(Tok::Number, "a number");
        try {
            return std::stoll(t.text);
        }
        catch (const std::exception&) {
            throw ParseError("number out of range '" + t.text + "'", t.span);
        }
    }

    void body(MetaRule& r) {
        do {
            element(r);
        } while (accept(Tok::Comma));
    }

    static bool is_compare(Tok t) { return t == Tok::Less || t == Tok::Greater || t == Tok::NotEq; }

    void element(MetaRule& r) {
        if (cur().type == Tok::Ident && cur().text == "not" && ahead(1).type != Tok::LParen && !is_compare(ahead(1).type) &&
            ahead(1).type != Tok::Comma && ahead(1).type != Tok::Dot) {
            take();
            r.neg_body.push_back(literal());
            return;
        }
        bool term_start = cur().type == Tok::Variable || cur().type == Tok::Anonymous || cur().type == Tok::Number ||
                          (cur().type == Tok::Ident && is_compare(ahead(1).type));
        if (term_start) {
            Builtin b;
            b.lhs = term();
            switch (cur().type) {
                case Tok::Less   : b.op = CompareOp::Less; break;
                case Tok::Greater: b.op = CompareOp::Greater; break;
                case Tok::NotEq  : b.op = CompareOp::NotEqual; break;
                default          : fail("expected comparison operator");
            }
            take();
            b.rhs = term();
            r.builtins.push_back(std::move(b));
            return;
        }
        r.pos_body.push_back(literal());
    }

    MetaAtom literal() {
        MetaAtom a;
        if (accept(Tok::Minus)) {
            a.positive = false;
        }
        const Token& name = expect(Tok::Ident, "a predicate name");
        if (name.text == "not" || name.text == "v") {
            throw ParseError("'" + name.text + "' is a reserved word", name.span);
        }
        a.predicate = name.text;
        if (accept(Tok::LParen)) {
            do {
                a.args.push_back(term());
            } while (accept(Tok::Comma));
            expect(Tok::RParen, "')'");
        }
        return a;
    }

    Term term() {
        const Token& t = cur();
        switch (t.type) {
            case Tok::Variable : take(); return {Term::Kind::Variable, t.text};
            case Tok::Anonymous: take(); return {Term::Kind::Anonymous, "_"};
            case Tok::Number   : take(); return {Term::Kind::Constant, t.text};
            case Tok::Ident    : take(); return {Term::Kind::Constant, t.text};
            default            : fail("expected a term");
        }
    }

    std::vector<Token> toks_;
    std::size_t        i_ = 0;
};

std::string auto_id(std::size_t index, std::size_t count) {
    std::string digits = std::to_string(index);
    std::size_t width  = std::max<std::size_t>(3, std::to_string(count).size());
    return "r" + std::string(width - std::min(width, digits.size()), '0') + digits;
}

void assign_ids(std::vector<Statement>& stmts) {
    std::size_t count = 0;
    for (const auto& s : stmts) {
        count += s.kind == Statement::Kind::Rule;
    }
    std::size_t       index = 0;
    std::set<std::string> seen;
    for (auto& s : stmts) {
        if (s.kind != Statement::Kind::Rule) {
            continue;
        }
        ++index;
        s.rule.id = s.rule.label.empty() ? auto_id(index, count) : s.rule.label;
        if (!seen.insert(s.rule.id).second) {
            throw ParseError("duplicate rule label '" + s.rule.id + "'", s.span);
        }
    }
}

LiteralVec to_literals(const std::vector<MetaAtom>& atoms, const SourceSpan& span) {
    LiteralVec out;
    for (const auto& a : atoms) {
        std::vector<std::string> args;
        for (const auto& t : a.args) {
            if (t.is_variable()) {
                throw ParseError("variable '" + t.name + "' in a propositional program", span);
            }
            args.push_back(t.name);
        }
        out.emplace_back(Atom(a.predicate, std::move(args)), a.positive);
    }
    return out;
}

ParsedProgram build_program(std::vector<Statement>& stmts, bool allow_args) {
    assign_ids(stmts);
    ParsedProgram               out;
    std::vector<Rule>           rules;
    std::vector<WeakConstraint> weak;
    std::set<std::string>       ids;
    for (const auto& s : stmts) {
        if (s.kind == Statement::Kind::Rule) {
            ids.insert(s.rule.id);
        }
    }
    for (const auto& s : stmts) {
        if (s.kind == Statement::Kind::Preference) {
            for (const auto* name : {&s.pref_lhs, &s.pref_rhs}) {
                if (!ids.count(*name)) {
                    throw ParseError("preference refers to unknown rule label '" + *name + "'", s.span);
                }
            }
            out.prefers.emplace_back(RuleId(s.pref_lhs), RuleId(s.pref_rhs));
            out.prefer_spans.push_back(s.span);
            continue;
        }
        const MetaRule& r = s.rule;
        if (!r.builtins.empty()) {
            throw ParseError("comparison builtins are only allowed in the meta language", s.span);
        }
        auto check_args = [&](const std::vector<MetaAtom>& v) {
            for (const auto& a : v) {
                if (!allow_args && !a.args.empty()) {
                    throw ParseError("atom '" + a.predicate + "' has arguments; programs must be propositional", s.span);
                }
            }
        };
        check_args(r.head);
        check_args(r.pos_body);
        check_args(r.neg_body);
        try {
            if (r.weak) {
                weak.emplace_back(to_literals(r.pos_body, s.span), to_literals(r.neg_body, s.span), r.weak->weight,
                                  r.weak->level);
            }
            else {
                rules.emplace_back(RuleId(r.id), to_literals(r.head, s.span), to_literals(r.pos_body, s.span),
                                   to_literals(r.neg_body, s.span));
            }
        }
        catch (const InvalidInput& e) {
            throw ParseError(e.what(), s.span);
        }
    }
    out.program = Program(std::move(rules), std::move(weak));
    return out;
}

void write_term_list(std::string& out, const std::vector<Term>& args) {
    if (args.empty()) {
        return;
    }
    out += '(';
    const char* sep = "";
    for (const auto& t : args) {
        out += std::exchange(sep, ",");
        out += t.name;
    }
    out += ')';
}

} // namespace

NonGroundProgram parse_meta(std::string_view text) {
    auto stmts = Parser(text).run();
    for (const auto& s : stmts) {
        if (s.kind == Statement::Kind::Preference) {
            throw ParseError("preference statements are not part of the meta language", s.span);
        }
    }
    assign_ids(stmts);
    NonGroundProgram out;
    for (auto& s : stmts) {
        check_safety(s.rule);
        out.rules.push_back(std::move(s.rule));
    }
    return out;
}

ParsedProgram parse_program(std::string_view text) {
    auto stmts = Parser(text).run();
    return build_program(stmts, false);
}

PrioritizedProgram parse_prioritized(std::string_view text) {
    auto stmts = Parser(text).run();
    for (const auto& s : stmts) {
        if (s.kind != Statement::Kind::Rule) {
            continue;
        }
        if (s.rule.weak) {
            throw ParseError("weak constraints are not allowed in prioritized programs", s.span);
        }
        if (s.rule.head.size() > 1) {
            throw ParseError("disjunctive heads are not allowed in prioritized programs", s.span);
        }
    }
    ParsedProgram parsed = build_program(stmts, false);

    // Rewrite integrity constraints with fresh atoms bad_1, bad_2, ...
    std::set<std::string> used;
    for (const auto& a : parsed.program.atoms()) {
        used.insert(a.predicate());
    }
    std::vector<Rule> rules;
    std::size_t       k = 0;
    for (const auto& r : parsed.program.rules()) {
        if (!r.is_constraint()) {
            rules.push_back(r);
            continue;
        }
        std::string name;
        do {
            name = "bad_" + std::to_string(++k);
        } while (used.count(name));
        used.insert(name);
        ClassicalLiteral bad(Atom(name), true);
        LiteralVec       neg = r.neg_body();
        neg.push_back(bad);
        rules.emplace_back(r.id(), LiteralVec{bad}, r.pos_body(), std::move(neg));
    }
    Program program(std::move(rules));

    std::set<RuleId> ids;
    for (const auto& r : program.rules()) {
        ids.insert(r.id());
    }
    RuleOrder all(ids, std::set<RuleOrder::Pair>(parsed.prefers.begin(), parsed.prefers.end()));
    RuleOrder closure = transitive_closure(all);
    for (std::size_t i = 0; i != parsed.prefers.size(); ++i) {
        const auto& [a, b] = parsed.prefers[i];
        if (a == b || closure.contains(b, a)) {
            throw ParseError("cyclic preference " + a.str() + " < " + b.str(), parsed.prefer_spans[i]);
        }
    }
    return PrioritizedProgram(std::move(program), parsed.prefers);
}

void check_safety(const MetaRule& r) {
    std::set<std::string> bound;
    for (const auto& a : r.pos_body) {
        for (const auto& t : a.args) {
            if (t.kind == Term::Kind::Variable) {
                bound.insert(t.name);
            }
        }
    }
    auto check_term = [&](const Term& t, const char* where) {
        if (t.kind == Term::Kind::Anonymous) {
            throw ParseError(std::string("anonymous variable in ") + where + " is unsafe", r.span);
        }
        if (t.kind == Term::Kind::Variable && !bound.count(t.name)) {
            throw ParseError("unsafe variable '" + t.name + "' in " + where, r.span);
        }
    };
    for (const auto& a : r.head) {
        for (const auto& t : a.args) {
            check_term(t, "head");
        }
    }
    for (const auto& a : r.neg_body) {
        for (const auto& t : a.args) {
            check_term(t, "negative body");
        }
    }
    for (const auto& b : r.builtins) {
        check_term(b.lhs, "comparison");
        check_term(b.rhs, "comparison");
    }
}

std::string to_string(const Term& t) { return t.name; }

std::string to_string(const MetaAtom& a) {
    std::string out = a.positive ? "" : "-";
    out += a.predicate;
    write_term_list(out, a.args);
    return out;
}

std::string to_string(const MetaRule& r) {
    std::string out;
    if (!r.label.empty()) {
        out += r.label + ": ";
    }
    const char* sep = "";
    for (const auto& h : r.head) {
        out += std::exchange(sep, " v ");
        out += to_string(h);
    }
    std::string body;
    sep = "";
    for (const auto& a : r.pos_body) {
        body += std::exchange(sep, ", ");
        body += to_string(a);
    }
    for (const auto& a : r.neg_body) {
        body += std::exchange(sep, ", ");
        body += "not " + to_string(a);
    }
    for (const auto& b : r.builtins) {
        body += std::exchange(sep, ", ");
        body += b.lhs.name;
        body += b.op == CompareOp::Less ? " < " : b.op == CompareOp::Greater ? " > " : " != ";
        body += b.rhs.name;
    }
    if (r.weak) {
        return out + ":~ " + body + ". [" + std::to_string(r.weak->weight) + ":" + std::to_string(r.weak->level) + "]";
    }
    if (r.head.empty()) {
        return out + ":- " + body + ".";
    }
    if (!body.empty()) {
        out += " :- " + body;
    }
    return out + ".";
}

std::string to_string(const NonGroundProgram& p) {
    std::string out;
    for (const auto& r : p.rules) {
        out += to_string(r) + '\n';
    }
    return out;
}

Program to_ground_program(const NonGroundProgram& p) {
    std::vector<Statement> stmts;
    for (const auto& r : p.rules) {
        Statement s;
        s.rule = r;
        s.span = r.span;
        for (const auto* v : {&r.head, &r.pos_body, &r.neg_body}) {
            for (const auto& a : *v) {
                for (const auto& t : a.args) {
                    if (t.is_variable()) {
                        throw InvalidInput("program is not ground: variable '" + t.name + "' in rule " + r.id);
                    }
                }
            }
        }
        if (!r.builtins.empty()) {
            throw InvalidInput("program is not ground: comparison in rule " + r.id);
        }
        stmts.push_back(std::move(s));
    }
    // ids were assigned by parse_meta already; keep them
    std::vector<Rule>           rules;
    std::vector<WeakConstraint> weak;
    for (const auto& s : stmts) {
        const MetaRule& r = s.rule;
        if (r.weak) {
            weak.emplace_back(to_literals(r.pos_body, r.span), to_literals(r.neg_body, r.span), r.weak->weight,
                              r.weak->level);
        }
        else {
            rules.emplace_back(RuleId(r.id), to_literals(r.head, r.span), to_literals(r.pos_body, r.span),
                               to_literals(r.neg_body, r.span));
        }
    }
    return Program(std::move(rules), std::move(weak));
}

} // namespace prefasp
