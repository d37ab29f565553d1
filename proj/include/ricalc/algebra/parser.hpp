#pragma once
#include <cctype>
#include <string>

#include "ri.hpp"

namespace ricalc::alg {

// Recursive-descent reader for the text grammar, e.g.
//   2[c->c] + 1/2 I(A;E)@psi [qq] + o[cc] >= [q->q]; pure psi on A,B,E
class Parser {
public:
    explicit Parser(std::string text) : s_(std::move(text)) {}

    ResourceInequality inequality() {
        ResourceInequality ri;
        ri.lhs = expression();
        ri.rel = relation();
        ri.rhs = expression();
        while (accept(";")) context_entry(ri.ctx);
        finish();
        ri.check_well_formed();
        return ri;
    }

    ResourceExpr expression_only() {
        ResourceExpr e = expression();
        finish();
        return e;
    }

    Coefficient coefficient_only() {
        Coefficient c = coef_sum();
        finish();
        return c;
    }

    Context context_only() {
        Context ctx;
        ws();
        if (pos_ < s_.size()) {
            context_entry(ctx);
            while (accept(";")) context_entry(ctx);
        }
        finish();
        return ctx;
    }

    ResourceSymbol symbol_only() {
        ResourceSymbol sym = symbol();
        finish();
        return sym;
    }

private:
    std::string s_;
    std::size_t pos_ = 0;

    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorKind::ParseError, what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    void ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at(const std::string& t) {
        ws();
        return s_.compare(pos_, t.size(), t) == 0;
    }
    bool accept(const std::string& t) {
        if (!at(t)) return false;
        pos_ += t.size();
        return true;
    }
    void expect(const std::string& t) {
        if (!accept(t)) error("expected '" + t + "'");
    }
    void finish() {
        ws();
        if (pos_ != s_.size()) error("unexpected trailing text");
    }
    char peek() {
        ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }
    bool at_atom() { return at("H(") || at("I(") || at("Icoh("); }
    bool at_symbol() { return at("[") || at("<"); }
    bool at_end_of_side() { return pos_ >= s_.size() || at(";") || at(">=") || at("=") || at(">"); }

    Relation relation() {
        if (accept(">=s")) return Relation::GeqS;
        if (accept(">=")) return Relation::Geq;
        if (accept("=")) return Relation::Eq;
        error("expected relation");
    }

    Rational rational() {
        ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        if (start == pos_) error("expected number");
        return parse_rational(s_.substr(start, pos_ - start));
    }

    std::string identifier() {
        ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\'')) ++pos_;
        if (start == pos_) error("expected identifier");
        return s_.substr(start, pos_ - start);
    }

    LabelGroup group_until(const std::string& stops) {
        ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && stops.find(s_[pos_]) == std::string::npos) ++pos_;
        return parse_group(s_.substr(start, pos_ - start));
    }

    EntropicAtom atom() {
        if (accept("Icoh(")) {
            LabelGroup a = group_until(">");
            expect(">");
            LabelGroup b = group_until(")");
            expect(")");
            expect("@");
            return EntropicAtom(AtomKind::Icoh, {a, b}, identifier());
        }
        if (accept("H(")) {
            LabelGroup a = group_until("|)");
            if (accept("|")) {
                LabelGroup b = group_until(")");
                expect(")");
                expect("@");
                return EntropicAtom(AtomKind::Hcond, {a, b}, identifier());
            }
            expect(")");
            expect("@");
            return EntropicAtom(AtomKind::H, {a}, identifier());
        }
        expect("I(");
        LabelGroup a = group_until(";");
        expect(";");
        LabelGroup b = group_until("|)");
        if (accept("|")) {
            LabelGroup c = group_until(")");
            expect(")");
            expect("@");
            return EntropicAtom(AtomKind::Icmi, {a, b, c}, identifier());
        }
        expect(")");
        expect("@");
        return EntropicAtom(AtomKind::Imutual, {a, b}, identifier());
    }

    // rational, rational atom, atom, (sum), rational (sum)
    Coefficient coef_factor() {
        if (accept("(")) {
            Coefficient c = coef_sum();
            expect(")");
            return c;
        }
        if (at_digit()) {
            Rational r = rational();
            if (at_atom()) return Coefficient(atom(), r);
            if (at("(")) return coef_factor() * r;
            return Coefficient(r);
        }
        if (at_atom()) return Coefficient(atom());
        error("expected coefficient");
    }

    Coefficient coef_sum() {
        bool neg = accept("-");
        Coefficient c = coef_factor();
        if (neg) c = -c;
        for (;;) {
            if (accept("+")) c += coef_factor();
            else if (accept("-")) c -= coef_factor();
            else return c;
        }
    }

    std::string name_token() {
        ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && std::string(":<>{};").find(s_[pos_]) == std::string::npos) ++pos_;
        if (start == pos_) error("expected resource name");
        return s_.substr(start, pos_ - start);
    }

    ResourceSymbol symbol() {
        if (accept("[")) {
            std::string body;
            while (pos_ < s_.size() && s_[pos_] != ']') {
                if (!std::isspace(static_cast<unsigned char>(s_[pos_]))) body += s_[pos_];
                ++pos_;
            }
            expect("]");
            static const std::pair<const char*, SymbolKind> units[] = {
                {"c->c", SymbolKind::Cbit},        {"q->q", SymbolKind::Qubit},         {"qq", SymbolKind::Ebit},
                {"cc", SymbolKind::Rbit},          {"q->qq", SymbolKind::Cobit},        {"c->c:tau", SymbolKind::CbitTau},
                {"q->q:tau", SymbolKind::QubitTau}, {"q->qq:tau", SymbolKind::CobitTau},
            };
            for (const auto& [text, kind] : units)
                if (body == text) return ResourceSymbol(kind);
            error("unknown unit resource [" + body + "]");
        }
        if (accept("<<")) {
            std::string name = name_token();
            expect(":");
            std::string test = name_token();
            expect(">>");
            return ResourceSymbol::protected_source(name, test);
        }
        expect("<");
        std::string name = name_token();
        if (accept(":")) {
            if (accept("*")) {
                expect(">");
                return ResourceSymbol::channel(name);
            }
            std::string test = name_token();
            expect(">");
            return ResourceSymbol::relative(name, test);
        }
        expect(">");
        return ResourceSymbol::state(name);
    }

    Flag flag() {
        if (accept("{coh}")) return Flag::Coherent;
        if (accept("{inc}")) return Flag::Incoherent;
        return Flag::None;
    }

    ResourceExpr term() {
        ws();
        if (s_.compare(pos_, 3, "inf") == 0) {
            pos_ += 3;
            return ResourceExpr::unbounded(symbol());
        }
        if (s_.compare(pos_, 1, "o") == 0 && pos_ + 1 < s_.size()) {
            ++pos_;
            if (!at_symbol()) error("expected resource after o");
            ResourceSymbol sym = symbol();
            ResourceExpr e = ResourceExpr::sublinear(sym);
            Flag f = flag();
            if (f != Flag::None) e.set_flag(sym, f);
            return e;
        }
        Coefficient c = at_symbol() ? Coefficient(1) : coef_factor();
        ResourceSymbol sym = symbol();
        Flag f = flag();
        if (f != Flag::None && !sym.is_classical()) error("decoupling flag on non-classical term");
        ResourceExpr e;
        e.terms[sym] = c;
        if (f != Flag::None) e.flags[sym] = f;
        return e;
    }

    ResourceExpr expression() {
        ws();
        if (at("0")) {
            std::size_t save = pos_;
            ++pos_;
            if (at_end_of_side()) return {};
            pos_ = save;
        }
        bool neg = accept("-");
        ResourceExpr e = term();
        if (neg) e = negate(e);
        for (;;) {
            if (accept("+")) e = add(e, term());
            else if (accept("-")) e = add(e, negate(term()));
            else return e;
        }
    }

    void context_entry(Context& ctx) {
        std::string kw = identifier();
        if (kw == "pure") {
            PureDecl d;
            d.tag = identifier();
            if (identifier() != "on") error("expected 'on'");
            ws();
            std::size_t start = pos_;
            std::size_t end = s_.find(';', pos_);
            if (end == std::string::npos) end = s_.size();
            std::string body = s_.substr(start, end - start);
            std::size_t g = body.find(" given ");
            d.labels = parse_group(body.substr(0, g));
            if (g != std::string::npos) d.given = parse_group(body.substr(g + 7));
            pos_ = end;
            ctx.add_pure(d);
        } else if (kw == "fact") {
            Fact f;
            f.value = coef_sum();
            if (accept(">=")) f.strict = false;
            else if (accept(">")) f.strict = true;
            else error("expected '>=' or '>' in fact");
            bool neg = accept("-");
            f.bound = rational();
            if (neg) f.bound = -f.bound;
            ctx.facts.insert(f);
        } else if (kw == "iso") {
            ctx.isometric.insert(name_token());
        } else if (kw == "refines") {
            ResourceSymbol a = symbol();
            ResourceSymbol b = symbol();
            ctx.refines.insert({a, b});
        } else if (kw == "identity") {
            if (identifier() != "ccc") error("unknown identity");
            ctx.coherent_identity = true;
        } else {
            error("unknown context entry '" + kw + "'");
        }
    }
};

inline ResourceInequality parse_ri(const std::string& s) { return Parser(s).inequality(); }
inline ResourceExpr parse_expr(const std::string& s) { return Parser(s).expression_only(); }
inline Coefficient parse_coefficient(const std::string& s) { return Parser(s).coefficient_only(); }
inline Context parse_context(const std::string& s) { return Parser(s).context_only(); }
inline ResourceSymbol parse_symbol(const std::string& s) { return Parser(s).symbol_only(); }

} // namespace ricalc::alg
