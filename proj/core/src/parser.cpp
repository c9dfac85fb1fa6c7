#include "ssyn/parser.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <variant>

namespace ssyn {

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok { Ident, Number, Punct, End };

struct Token {
    Tok type = Tok::End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, tok_.line, tok_.col);
    }

  private:
    void advance() {
        skip_ws();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_ = {Tok::End, "", line_, col_};
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                s += take();
            tok_ = {Tok::Ident, s, tok_.line, tok_.col};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            bool dot = false;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                    (src_[pos_] == '.' && !dot))) {
                if (src_[pos_] == '.') dot = true;
                s += take();
            }
            tok_ = {Tok::Number, s, tok_.line, tok_.col};
            return;
        }
        // Multi-char operators first.
        static const char* two[] = {"<=", ">=", "==", "->"};
        for (const char* op : two) {
            if (src_.compare(pos_, 2, op) == 0) {
                pos_ += 2;
                col_ += 2;
                tok_ = {Tok::Punct, op, tok_.line, tok_.col};
                return;
            }
        }
        std::string s(1, take());
        tok_ = {Tok::Punct, s, tok_.line, tok_.col};
    }

    char take() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

// ------------------------------------------------------------ expressions

struct VarRef {
    std::string base;
    VarKind kind;
    bool operator<(const VarRef& o) const {
        return base < o.base || (base == o.base && kind < o.kind);
    }
};

struct LinExpr {
    std::map<VarRef, Rational> terms;
    Rational constant{0};

    bool is_constant() const { return terms.empty(); }
};

struct Ast;
using AstPtr = std::unique_ptr<Ast>;

struct Ast {
    enum class Type { Lin, Cmp, And, Or, Not, BoolLit, Keep } type;
    // Lin
    LinExpr lin;
    // Cmp
    std::string relop;
    LinExpr lhs, rhs;
    // And/Or/Not
    std::vector<AstPtr> children;
    // BoolLit
    bool value = false;
    // Keep
    std::vector<std::string> keep_names;
    int line = 1, col = 1;
};

class ExprParser {
  public:
    explicit ExprParser(Lexer& lx) : lx_(lx) {}

    AstPtr parse() { return parse_or(); }

  private:
    AstPtr node(Ast::Type t) {
        auto a = std::make_unique<Ast>();
        a->type = t;
        a->line = lx_.peek().line;
        a->col = lx_.peek().col;
        return a;
    }

    bool punct(const std::string& p) {
        return lx_.peek().type == Tok::Punct && lx_.peek().text == p;
    }

    AstPtr parse_or() {
        AstPtr left = parse_and();
        while (punct("|")) {
            lx_.next();
            auto n = node(Ast::Type::Or);
            n->children.push_back(std::move(left));
            n->children.push_back(parse_and());
            left = std::move(n);
        }
        return left;
    }

    AstPtr parse_and() {
        AstPtr left = parse_not();
        while (punct("&")) {
            lx_.next();
            auto n = node(Ast::Type::And);
            n->children.push_back(std::move(left));
            n->children.push_back(parse_not());
            left = std::move(n);
        }
        return left;
    }

    AstPtr parse_not() {
        if (punct("!")) {
            auto n = node(Ast::Type::Not);
            lx_.next();
            n->children.push_back(parse_not());
            return n;
        }
        return parse_cmp();
    }

    AstPtr parse_cmp() {
        const Token& t = lx_.peek();
        if (t.type == Tok::Ident && (t.text == "true" || t.text == "false")) {
            auto n = node(Ast::Type::BoolLit);
            n->value = t.text == "true";
            lx_.next();
            return n;
        }
        if (t.type == Tok::Ident && t.text == "keep") {
            auto n = node(Ast::Type::Keep);
            lx_.next();
            expect("(");
            for (;;) {
                const Token& id = lx_.peek();
                if (id.type != Tok::Ident) lx_.fail("expected variable name in keep(...)");
                n->keep_names.push_back(id.text);
                lx_.next();
                if (punct(",")) {
                    lx_.next();
                    continue;
                }
                break;
            }
            expect(")");
            return n;
        }
        AstPtr a = parse_arith();
        if (a->type != Ast::Type::Lin) return a;  // parenthesized boolean
        static const char* rels[] = {"<", "<=", "==", ">=", ">"};
        for (const char* r : rels) {
            if (punct(r)) {
                lx_.next();
                AstPtr b = parse_arith();
                if (b->type != Ast::Type::Lin)
                    throw ParseError("expected linear expression after comparison", a->line,
                                     a->col);
                auto n = node(Ast::Type::Cmp);
                n->relop = r;
                n->lhs = std::move(a->lin);
                n->rhs = std::move(b->lin);
                return n;
            }
        }
        throw ParseError("expected comparison operator", a->line, a->col);
    }

    AstPtr parse_arith() {
        AstPtr left = parse_term();
        while (punct("+") || punct("-")) {
            std::string op = lx_.next().text;
            AstPtr right = parse_term();
            left = combine_add(std::move(left), std::move(right), op == "-");
        }
        return left;
    }

    AstPtr parse_term() {
        AstPtr left = parse_factor();
        while (punct("*") || punct("/")) {
            Token op = lx_.next();
            AstPtr right = parse_factor();
            if (left->type != Ast::Type::Lin || right->type != Ast::Type::Lin)
                throw ParseError("expected linear expression", op.line, op.col);
            if (op.text == "*") {
                if (!left->lin.is_constant() && !right->lin.is_constant())
                    throw ParseError("non-linear expression: product of two variables", op.line,
                                     op.col);
                if (right->lin.is_constant()) std::swap(left, right);
                Rational k = left->lin.constant;
                for (auto& [v, c] : right->lin.terms) c *= k;
                right->lin.constant *= k;
                left = std::move(right);
            } else {
                if (!right->lin.is_constant())
                    throw ParseError("non-linear expression: division by a variable", op.line,
                                     op.col);
                if (right->lin.constant == 0)
                    throw ParseError("division by zero", op.line, op.col);
                Rational k = right->lin.constant;
                for (auto& [v, c] : left->lin.terms) c /= k;
                left->lin.constant /= k;
            }
        }
        return left;
    }

    AstPtr parse_factor() {
        const Token t = lx_.peek();
        if (t.type == Tok::Punct && t.text == "-") {
            lx_.next();
            AstPtr a = parse_factor();
            if (a->type != Ast::Type::Lin)
                throw ParseError("expected linear expression after '-'", t.line, t.col);
            for (auto& [v, c] : a->lin.terms) c = -c;
            a->lin.constant = -a->lin.constant;
            return a;
        }
        if (t.type == Tok::Punct && t.text == "(") {
            lx_.next();
            AstPtr inner = parse_or();
            expect(")");
            return inner;
        }
        if (t.type == Tok::Number) {
            lx_.next();
            auto r = parse_rational(t.text);
            if (!r) throw ParseError("bad numeric literal '" + t.text + "'", t.line, t.col);
            auto n = node(Ast::Type::Lin);
            n->lin.constant = *r;
            return n;
        }
        if (t.type == Tok::Ident) {
            lx_.next();
            auto n = node(Ast::Type::Lin);
            n->line = t.line;
            n->col = t.col;
            VarRef ref{t.text, VarKind::Plain};
            if (punct("'")) {
                lx_.next();
                ref.kind = VarKind::Primed;
            }
            n->lin.terms[ref] = 1;
            return n;
        }
        lx_.fail("expected expression");
    }

    AstPtr combine_add(AstPtr a, AstPtr b, bool minus) {
        if (a->type != Ast::Type::Lin || b->type != Ast::Type::Lin)
            throw ParseError("expected linear expression", a->line, a->col);
        for (auto& [v, c] : b->lin.terms) {
            Rational d = minus ? Rational(-c) : c;
            auto [it, fresh] = a->lin.terms.try_emplace(v, d);
            if (!fresh) it->second += d;
        }
        a->lin.constant += minus ? Rational(-b->lin.constant) : b->lin.constant;
        return a;
    }

    void expect(const std::string& p) {
        if (!punct(p)) lx_.fail("expected '" + p + "'");
        lx_.next();
    }

    Lexer& lx_;
};

// --------------------------------------------------------- lowering

enum class ExprCtx { Plain, Update, Flow };

class Lowerer {
  public:
    Lowerer(const std::vector<std::string>& vars, VarSpacePtr space_x, VarSpacePtr space_xp,
            VarSpacePtr space_dot)
        : vars_(vars),
          space_x_(std::move(space_x)),
          space_xp_(std::move(space_xp)),
          space_dot_(std::move(space_dot)) {}

    Region lower(const Ast& a, ExprCtx ctx) {
        const VarSpacePtr& sp = space_for(ctx);
        switch (a.type) {
            case Ast::Type::BoolLit:
                return a.value ? Region::universe(sp) : Region::empty(sp);
            case Ast::Type::And:
                return region_intersect(lower(*a.children[0], ctx), lower(*a.children[1], ctx));
            case Ast::Type::Or:
                return region_union(lower(*a.children[0], ctx), lower(*a.children[1], ctx));
            case Ast::Type::Not:
                return region_complement(lower(*a.children[0], ctx));
            case Ast::Type::Cmp:
                return Region(ConvexPoly(sp, {lower_cmp(a, ctx)}));
            case Ast::Type::Keep: {
                if (ctx != ExprCtx::Update)
                    throw ParseError("keep(...) is only allowed in updates", a.line, a.col);
                std::vector<LinearConstraint> cs;
                for (const auto& name : a.keep_names) {
                    int ip = index_of(name, VarKind::Plain, ExprCtx::Update, a);
                    int ipp = index_of(name, VarKind::Primed, ExprCtx::Update, a);
                    std::vector<Rational> coef(space_xp_->dim(), Rational(0));
                    coef[ipp] = 1;
                    coef[ip] = -1;
                    cs.emplace_back(std::move(coef), Rel::Eq, Rational(0));
                }
                return Region(ConvexPoly(space_xp_, std::move(cs)));
            }
            case Ast::Type::Lin:
                throw ParseError("expected a constraint, found a bare expression", a.line, a.col);
        }
        throw ParseError("internal: unhandled expression", a.line, a.col);
    }

  private:
    const VarSpacePtr& space_for(ExprCtx ctx) const {
        switch (ctx) {
            case ExprCtx::Plain: return space_x_;
            case ExprCtx::Update: return space_xp_;
            case ExprCtx::Flow: return space_dot_;
        }
        return space_x_;
    }

    int index_of(const std::string& base, VarKind kind, ExprCtx ctx, const Ast& at) {
        const VarSpacePtr& sp = space_for(ctx);
        int i = sp->index_of(base, kind);
        if (i < 0)
            throw ParseError("unknown variable '" + base +
                                 (kind == VarKind::Primed ? "'" : "") + "' in this context",
                             at.line, at.col);
        return i;
    }

    LinearConstraint lower_cmp(const Ast& a, ExprCtx ctx) {
        const VarSpacePtr& sp = space_for(ctx);
        // e = lhs - rhs, then  e REL 0  in a.x REL b form.
        std::map<VarRef, Rational> terms = a.lhs.terms;
        for (const auto& [v, c] : a.rhs.terms) {
            auto [it, fresh] = terms.try_emplace(v, -c);
            if (!fresh) it->second -= c;
        }
        Rational k = a.lhs.constant - a.rhs.constant;
        std::vector<Rational> coef(sp->dim(), Rational(0));
        for (const auto& [v, c] : terms) {
            if (c == 0) continue;
            int idx = resolve(v, ctx, a);
            coef[idx] += c;
        }
        if (a.relop == "<") {
            for (auto& c : coef) c = -c;
            return LinearConstraint(std::move(coef), Rel::Gt, k);
        }
        if (a.relop == "<=") {
            for (auto& c : coef) c = -c;
            return LinearConstraint(std::move(coef), Rel::Ge, k);
        }
        if (a.relop == ">") return LinearConstraint(std::move(coef), Rel::Gt, -k);
        if (a.relop == ">=") return LinearConstraint(std::move(coef), Rel::Ge, -k);
        return LinearConstraint(std::move(coef), Rel::Eq, -k);
    }

    int resolve(const VarRef& v, ExprCtx ctx, const Ast& at) {
        if (ctx == ExprCtx::Flow) {
            if (v.kind != VarKind::Plain)
                throw ParseError("primed variables are not allowed in flows", at.line, at.col);
            // In flow context dx denotes the derivative of x.
            if (v.base.size() > 1 && v.base[0] == 'd') {
                std::string base = v.base.substr(1);
                int i = space_dot_->index_of(base, VarKind::Dotted);
                if (i >= 0) return i;
            }
            throw ParseError("flow constraints range over derivative variables like d" +
                                 (vars_.empty() ? std::string("x") : vars_[0]) + "; found '" +
                                 v.base + "'",
                             at.line, at.col);
        }
        if (v.kind == VarKind::Primed && ctx != ExprCtx::Update)
            throw ParseError("primed variable '" + v.base + "'' outside an update", at.line,
                             at.col);
        return index_of(v.base, v.kind, ctx, at);
    }

    const std::vector<std::string>& vars_;
    VarSpacePtr space_x_;
    VarSpacePtr space_xp_;
    VarSpacePtr space_dot_;
};

void collect_primed(const Ast& a, std::set<std::string>& out) {
    switch (a.type) {
        case Ast::Type::Keep:
            for (const auto& n : a.keep_names) out.insert(n);
            break;
        case Ast::Type::Cmp:
            for (const auto* e : {&a.lhs, &a.rhs})
                for (const auto& [v, c] : e->terms)
                    if (v.kind == VarKind::Primed && c != 0) out.insert(v.base);
            break;
        default:
            for (const auto& ch : a.children) collect_primed(*ch, out);
    }
}

}  // namespace

// ------------------------------------------------------------ parse_model

ParsedModel parse_model(const std::string& text) {
    Lexer lx(text);
    std::vector<std::string> vars;
    bool have_vars = false;

    HybridAutomaton h;
    std::optional<SpecSet> spec;
    std::set<std::string> loc_names, trans_names;
    std::unique_ptr<Lowerer> lower;
    // Deferred until the variable declaration is seen.
    struct PendingInit {
        std::string loc;
        Region region;
    };
    std::vector<PendingInit> inits;

    auto expect_punct = [&](const std::string& p) {
        if (lx.peek().type != Tok::Punct || lx.peek().text != p)
            lx.fail("expected '" + p + "'");
        lx.next();
    };
    auto expect_ident = [&]() {
        if (lx.peek().type != Tok::Ident) lx.fail("expected identifier");
        return lx.next().text;
    };
    auto expect_keyword = [&](const std::string& kw) {
        if (lx.peek().type != Tok::Ident || lx.peek().text != kw)
            lx.fail("expected '" + kw + "'");
        lx.next();
    };
    auto require_model = [&]() {
        if (!have_vars) lx.fail("variable declaration must precede this item");
    };
    auto parse_expr = [&]() {
        ExprParser ep(lx);
        return ep.parse();
    };

    while (lx.peek().type != Tok::End) {
        if (lx.peek().type != Tok::Ident) lx.fail("expected a declaration");
        std::string kw = lx.peek().text;
        if (kw == "var") {
            if (have_vars) lx.fail("duplicate variable declaration");
            lx.next();
            for (;;) {
                vars.push_back(expect_ident());
                if (lx.peek().type == Tok::Punct && lx.peek().text == ",") {
                    lx.next();
                    continue;
                }
                break;
            }
            expect_punct(";");
            have_vars = true;
            h.space_x = VarSpace::plain(vars);
            h.space_xp = VarSpace::plain_primed(vars);
            h.space_dot = VarSpace::dotted(vars);
            h.init = SymStateSet(h.space_x);
            lower = std::make_unique<Lowerer>(vars, h.space_x, h.space_xp, h.space_dot);
        } else if (kw == "location") {
            require_model();
            Token at = lx.next();
            std::string name = expect_ident();
            if (!loc_names.insert(name).second)
                throw ParseError("duplicate location '" + name + "'", at.line, at.col);
            expect_punct("{");
            expect_keyword("inv");
            expect_punct(":");
            AstPtr inv_ast = parse_expr();
            expect_punct(";");
            expect_keyword("flow");
            expect_punct(":");
            Token flow_at = lx.peek();
            AstPtr flow_ast = parse_expr();
            expect_punct(";");
            expect_punct("}");

            Region flow_region = reduce_region(lower->lower(*flow_ast, ExprCtx::Flow));
            if (flow_region.is_empty())
                throw ParseError("location '" + name + "': empty flow", flow_at.line,
                                 flow_at.col);
            if (flow_region.size() > 1)
                throw ParseError("location '" + name + "': flow must be convex", flow_at.line,
                                 flow_at.col);
            h.locations.push_back({name, lower->lower(*inv_ast, ExprCtx::Plain),
                                   flow_region.pieces()[0]});
        } else if (kw == "trans") {
            require_model();
            Token at = lx.next();
            std::string name = expect_ident();
            if (!trans_names.insert(name).second)
                throw ParseError("duplicate transition '" + name + "'", at.line, at.col);
            expect_punct(":");
            std::string src = expect_ident();
            expect_punct("->");
            std::string dst = expect_ident();
            expect_punct("{");
            expect_keyword("guard");
            expect_punct(":");
            AstPtr guard_ast = parse_expr();
            expect_punct(";");
            expect_keyword("update");
            expect_punct(":");
            Token upd_at = lx.peek();
            AstPtr update_ast = parse_expr();
            expect_punct(";");
            expect_keyword("kind");
            expect_punct(":");
            std::string kind = expect_ident();
            if (kind != "controllable" && kind != "uncontrollable")
                lx.fail("kind must be 'controllable' or 'uncontrollable'");
            expect_punct(";");
            expect_punct("}");

            // Every primed variable must be constrained explicitly;
            // keep(x, ...) is the shorthand for leaving values unchanged.
            std::set<std::string> primed;
            collect_primed(*update_ast, primed);
            for (const auto& v : vars)
                if (!primed.count(v))
                    throw ParseError("transition '" + name + "': update does not constrain " + v +
                                         "'",
                                     upd_at.line, upd_at.col);

            Region guard = lower->lower(*guard_ast, ExprCtx::Plain);
            std::vector<int> to_xp(vars.size());
            for (size_t i = 0; i < vars.size(); ++i) to_xp[i] = static_cast<int>(i);
            Region guard_xp = region_remap(guard, h.space_xp, to_xp);
            h.transitions.push_back(
                {name, src, dst,
                 region_intersect(guard_xp, lower->lower(*update_ast, ExprCtx::Update)),
                 kind == "controllable" ? TransKind::Controllable : TransKind::Uncontrollable});
        } else if (kw == "init") {
            require_model();
            lx.next();
            expect_punct(":");
            std::string loc = expect_ident();
            expect_punct("{");
            AstPtr e = parse_expr();
            expect_punct("}");
            expect_punct(";");
            inits.push_back({loc, lower->lower(*e, ExprCtx::Plain)});
        } else if (kw == "spec") {
            require_model();
            Token at = lx.next();
            if (spec) throw ParseError("duplicate spec block", at.line, at.col);
            std::string kind = expect_ident();
            if (kind != "safe" && kind != "target")
                lx.fail("spec kind must be 'safe' or 'target'");
            SpecSet s;
            s.kind = kind == "safe" ? SpecSet::Kind::Safe : SpecSet::Kind::Target;
            s.states = SymStateSet(h.space_x);
            expect_punct("{");
            std::vector<std::pair<std::string, Region>> entries;  // "*" = all locations
            while (!(lx.peek().type == Tok::Punct && lx.peek().text == "}")) {
                std::string which;
                if (lx.peek().type == Tok::Punct && lx.peek().text == "*") {
                    lx.next();
                    which = "*";
                } else {
                    which = expect_ident();
                }
                expect_punct(":");
                AstPtr e = parse_expr();
                expect_punct(";");
                entries.emplace_back(which, lower->lower(*e, ExprCtx::Plain));
            }
            expect_punct("}");
            spec = std::move(s);
            // Resolution happens after all locations are known.
            for (auto& [which, region] : entries) {
                if (which == "*") {
                    for (const auto& l : h.locations)
                        spec->states.set(l.name,
                                         region_union(spec->states.at(l.name), region));
                } else {
                    if (!loc_names.count(which))
                        throw ParseError("spec: unknown location '" + which + "'", at.line,
                                         at.col);
                    spec->states.set(which, region_union(spec->states.at(which), region));
                }
            }
        } else {
            lx.fail("unknown declaration '" + kw + "'");
        }
    }

    if (!have_vars) throw ParseError("missing variable declaration", 1, 1);
    for (auto& pi : inits) {
        if (!loc_names.count(pi.loc)) throw ParseError("init: unknown location '" + pi.loc + "'", 1, 1);
        h.init.set(pi.loc, region_union(h.init.at(pi.loc), pi.region));
    }
    for (const auto& t : h.transitions) {
        if (!loc_names.count(t.source))
            throw ParseError("transition '" + t.name + "': unknown location '" + t.source + "'",
                             1, 1);
        if (!loc_names.count(t.target))
            throw ParseError("transition '" + t.name + "': unknown location '" + t.target + "'",
                             1, 1);
    }
    if (spec) {
        // The specification is confined to the invariants on load.
        SymStateSet clipped(h.space_x);
        for (const auto& l : h.locations)
            clipped.set(l.name, region_intersect(spec->states.at(l.name), l.invariant));
        spec->states = std::move(clipped);
    }
    return {std::move(h), std::move(spec)};
}

}  // namespace ssyn
