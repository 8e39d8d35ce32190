#include "cli.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "gcalc/kan.hpp"

namespace gcalc::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

// -- expressions ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    Parser(const std::string& text, const Loader& load) : s_(text), load_(load) {}

    ExprPtr parse()
    {
        ExprPtr e = expr();
        skip();
        if (pos_ != s_.size())
            throw ParseError(pos_, "unexpected '" + s_.substr(pos_, 1) + "'");
        return e;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool compose_token()
    {
        skip();
        static const std::string ring = "∘";
        if (s_.compare(pos_, ring.size(), ring) == 0) {
            pos_ += ring.size();
            return true;
        }
        if (pos_ < s_.size() && s_[pos_] == 'o' &&
            (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr expr()
    {
        ExprPtr first = term();
        if (!compose_token())
            return first;
        return FunctorExpr::compose(first, expr());
    }

    std::string identifier()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    std::string path_argument(const std::string& head)
    {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != '(')
            throw ParseError(pos_, "expected '(' after " + head);
        const std::size_t open = ++pos_;
        int depth = 1;
        while (pos_ < s_.size() && depth > 0) {
            if (s_[pos_] == '(')
                ++depth;
            else if (s_[pos_] == ')')
                --depth;
            ++pos_;
        }
        if (depth != 0)
            throw ParseError(open - 1, "unclosed '(' in " + head);
        std::string arg = s_.substr(open, pos_ - 1 - open);
        const auto b = arg.find_first_not_of(" \t");
        const auto e = arg.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw ParseError(open, head + " needs a file argument");
        return arg.substr(b, e - b + 1);
    }

    ExprPtr term()
    {
        skip();
        if (pos_ >= s_.size())
            throw ParseError(pos_, "expected a functor");
        if (s_[pos_] == '(') {
            const std::size_t open = pos_++;
            ExprPtr e = expr();
            skip();
            if (pos_ >= s_.size() || s_[pos_] != ')')
                throw ParseError(pos_, "expected ')' closing '(' at " + std::to_string(open));
            ++pos_;
            return e;
        }
        const std::size_t start = pos_;
        const std::string id = identifier();
        if (id == "Id")
            return FunctorExpr::identity();
        if (id == "Q")
            return FunctorExpr::q_plus();
        if (id == "Map" || id == "Union") {
            std::string path = path_argument(id);
            SSetPtr space = load_(path);
            try {
                return id == "Map" ? FunctorExpr::map_from(space, path) : FunctorExpr::disjoint_union(space, path);
            }
            catch (const CalculusError& e) {
                throw ParseError(start, e.what());
            }
        }
        if (id.empty())
            throw ParseError(start, "unexpected '" + s_.substr(start, 1) + "'");
        throw ParseError(start, "unknown functor '" + id + "'");
    }

    const std::string& s_;
    const Loader& load_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_functor_expr(const std::string& text, const Loader& load) { return Parser(text, load).parse(); }

LoadedSet load_sset(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_sset(buf.str());
    }
    catch (const FormatError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Window parse_window(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw InputError("window must look like LO..HI, got '" + text + "'");
    Window w;
    try {
        std::size_t a = 0, b = 0;
        const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
        w.lo = std::stoi(lo, &a);
        w.hi = std::stoi(hi, &b);
        if (a != lo.size() || b != hi.size())
            throw std::invalid_argument("trailing");
    }
    catch (const std::logic_error&) {
        throw InputError("window must look like LO..HI, got '" + text + "'");
    }
    if (w.lo < 0 || w.hi < w.lo)
        throw InputError("window " + text + " must satisfy 0 <= LO <= HI");
    return w;
}

// -- records -------------------------------------------------------------------------------------

namespace {

Json to_json(const HomologyGroup& h)
{
    Json t = Json::array();
    for (const BigInt& f : h.torsion)
        t.push_back(f.str());
    return Json{{"rank", h.betti}, {"torsion", t}, {"text", h.to_string()}};
}

Json to_json(const GradedAbelianGroup& g)
{
    Json degrees = Json::array();
    for (int d = g.lo(); d <= g.hi(); ++d) {
        Json h = to_json(g.at(d));
        h["degree"] = d;
        degrees.push_back(std::move(h));
    }
    return degrees;
}

Json window_json(const Window& w) { return Json{{"lo", w.lo}, {"hi", w.hi}}; }

struct Context {
    const Command& cmd;
    LoadedSet space;
    Basepoint base;
    std::map<std::string, SSetPtr> loaded;

    explicit Context(const Command& c) : cmd(c), space(load_sset(c.space)), base(space.base())
    {
        if (c.base) {
            std::optional<Simplex> v = space.space->find(*c.base);
            if (!v || v->dim() != 0)
                throw InputError("--base " + *c.base + " is not a vertex of " + c.space);
            base = Basepoint{v->gen};
        }
    }

    SSetPtr load(const std::string& path)
    {
        fs::path p(path);
        if (!fs::exists(p) && p.is_relative())
            if (fs::path alt = fs::path(cmd.space).parent_path() / p; fs::exists(alt))
                p = alt;
        auto key = p.string();
        if (auto it = loaded.find(key); it != loaded.end())
            return it->second;
        SSetPtr s = load_sset(key).space;
        loaded.emplace(key, s);
        return s;
    }

    ExprPtr expr(const std::string& text)
    {
        return parse_functor_expr(text, [this](const std::string& p) { return load(p); });
    }

    Json config() const
    {
        Json c{{"command", cmd.name}, {"space", cmd.space}, {"base", space.space->name(0, base.vertex)}};
        if (cmd.outer)
            c["outer"] = *cmd.outer;
        if (cmd.inner)
            c["inner"] = *cmd.inner;
        c["window"] = window_json(cmd.window);
        return c;
    }
};

void emit(const Command& cmd, std::ostream& os, const std::string& text, const Json& record)
{
    const std::string doc = record.dump(2) + "\n";
    os << (cmd.format == Format::record ? doc : text);
    if (cmd.out) {
        std::ofstream f(*cmd.out);
        if (!f)
            throw InputError("cannot write " + *cmd.out);
        f << doc;
    }
}

int run_homology(Context& ctx, std::ostream& os)
{
    const Window& w = ctx.cmd.window;
    GradedAbelianGroup h = normalized_chains(*ctx.space.space, w.hi + 1).homology(w.lo, w.hi);
    std::string text = "homology of " + ctx.cmd.space + ", degrees " + std::to_string(w.lo) + ".." +
                       std::to_string(w.hi) + "\n" + h.to_string();
    Json rec{{"config", ctx.config()}, {"homology", to_json(h)}};
    emit(ctx.cmd, os, text, rec);
    return ok;
}

int run_loopalg(Context& ctx, std::ostream& os)
{
    const Window& w = ctx.cmd.window;
    SMap q = reduce_at(ctx.space.space, ctx.base);
    AlgebraPtr a = cobar(*q.target(), w.hi + 1);
    GradedAbelianGroup h = a->chains().homology(w.lo, w.hi);
    std::ostringstream text;
    text << "cobar of " << ctx.cmd.space << " (loop space homology), degrees " << w.lo << ".." << w.hi << "\n";
    text << "degree  rank  homology\n";
    Json rows = Json::array();
    for (int d = w.lo; d <= w.hi; ++d) {
        text << std::setw(6) << d << "  " << std::setw(4) << a->rank(d) << "  " << h.at(d).to_string() << "\n";
        Json row = to_json(h.at(d));
        row["degree"] = d;
        row["chain_rank"] = a->rank(d);
        rows.push_back(std::move(row));
    }
    emit(ctx.cmd, os, text.str(), Json{{"config", ctx.config()}, {"cobar", rows}});
    return ok;
}

ExprPtr functor_argument(Context& ctx, bool inner_defaults_to_id)
{
    const Command& c = ctx.cmd;
    if (c.outer && c.inner)
        return FunctorExpr::compose(ctx.expr(*c.outer), ctx.expr(*c.inner));
    if (c.outer)
        return ctx.expr(*c.outer);
    if (c.inner)
        return ctx.expr(*c.inner);
    if (inner_defaults_to_id)
        return FunctorExpr::identity();
    throw InputError(c.name + " needs --outer or --inner");
}

int run_derivative(Context& ctx, std::ostream& os)
{
    const Window& w = ctx.cmd.window;
    ExprPtr f = functor_argument(ctx, false);
    DerivativeRequest req{w.lo, w.hi, std::nullopt};
    std::vector<DerivativeModel> models = derivative_model(*f, ctx.space.space, ctx.base, req);
    std::ostringstream text;
    text << "derivative of " << f->to_string() << " at " << ctx.cmd.space << ", degrees " << w.lo << ".." << w.hi
         << " (formula route)\n";
    Json parts = Json::array();
    for (const DerivativeModel& m : models) {
        GradedAbelianGroup h = m.homology();
        Json part{{"component", m.component}, {"zero", m.zero}};
        text << "component " << m.component;
        if (m.zero) {
            text << ": zero\n";
        }
        else {
            const std::string left = m.module->left_algebra()->label();
            const std::string right = m.module->right_algebra()->label();
            text << ": left " << left << ", right " << right << "\n";
            part["left_algebra"] = left;
            part["right_algebra"] = right;
        }
        std::istringstream lines(h.to_string());
        for (std::string line; std::getline(lines, line);)
            text << "  " << line << "\n";
        part["homology"] = to_json(h);
        parts.push_back(std::move(part));
    }
    Json rec{{"config", ctx.config()}, {"provenance", to_string(Provenance::formula)}, {"components", parts}};
    emit(ctx.cmd, os, text.str(), rec);
    return ok;
}

int run_chainrule(Context& ctx, std::ostream& os)
{
    const Command& c = ctx.cmd;
    if (!c.outer)
        throw InputError("chainrule needs --outer");
    ExprPtr e = ctx.expr(*c.outer);
    ExprPtr f = ctx.expr(c.inner.value_or("Id"));
    ChainRuleOptions opt{c.window.lo, c.window.hi, c.suspension, std::nullopt};
    ChainRuleReport r = chain_rule_check(e, f, ctx.space.space, ctx.base, opt);

    Json comps = Json::array();
    for (const ComponentTerm& t : r.components) {
        Json ranks = Json::array();
        for (int k : t.bar_ranks)
            ranks.push_back(k);
        comps.push_back(Json{{"component", t.component},
                             {"zero", t.zero},
                             {"rhs", to_json(t.homology)},
                             {"bar_ranks", ranks},
                             {"window", window_json(c.window)}});
    }
    Json config = ctx.config();
    config["inner"] = f->to_string();
    config["suspension"] = r.suspension;
    Json rec{{"config", config},
             {"provenance", {{"lhs", to_string(r.lhs_route)}, {"rhs", to_string(Provenance::bar)}}},
             {"lhs", to_json(r.lhs)},
             {"components", comps},
             {"total", to_json(r.rhs)},
             {"verdict", r.equal() ? "equal" : "differ"}};
    if (r.comparison.degree)
        rec["first_difference"] = *r.comparison.degree;
    if (c.timings)
        rec["timings"] = Json{{"lhs_seconds", r.lhs_seconds}, {"rhs_seconds", r.rhs_seconds}};
    emit(c, os, r.to_text(c.timings), rec);
    return r.equal() ? ok : mismatch;
}

int run_excision(Context& ctx, std::ostream& os)
{
    const Window& w = ctx.cmd.window;
    ExprPtr f = functor_argument(ctx, true);
    ExcisionReport r = excision_defect(*f, suspension_square(BasedSet{ctx.space.space, ctx.base}), w.lo, w.hi);
    std::ostringstream text;
    text << "excision defect of " << f->to_string() << " on the suspension square of " << ctx.cmd.space
         << ", degrees " << w.lo << ".." << w.hi << "\n";
    text << "hofib(F X0 -> F X2)\n";
    std::istringstream a(r.fiber_02.to_string()), b(r.fiber_13.to_string());
    for (std::string line; std::getline(a, line);)
        text << "  " << line << "\n";
    text << "hofib(F X1 -> F X3)\n";
    for (std::string line; std::getline(b, line);)
        text << "  " << line << "\n";
    text << "first mismatch: " << (r.first_mismatch ? std::to_string(*r.first_mismatch) : "none") << "\n";
    Json rec{{"config", ctx.config()},
             {"functor", f->to_string()},
             {"fiber_02", to_json(r.fiber_02)},
             {"fiber_13", to_json(r.fiber_13)},
             {"first_mismatch", r.first_mismatch ? Json(*r.first_mismatch) : Json(nullptr)}};
    emit(ctx.cmd, os, text.str(), rec);
    return ok;
}

int run_kancheck(Context& ctx, std::ostream& os)
{
    const Command& c = ctx.cmd;
    SymbolicSimplicialGroup g = kan_loop_group(ctx.space.space, ctx.base);
    IdentityVerdict v = check_identities(g, c.samples, 6, c.seed);
    HomologyGroup h1 = h1_via_pi0(g);
    HomologyGroup expected = normalized_chains(*ctx.space.space, 2).homology(1, 1).at(1);
    const bool h1_ok = h1 == expected;

    std::ostringstream text;
    text << "Kan loop group of " << c.space << ": " << c.samples << " samples, seed " << c.seed << "\n";
    text << "identities: " << (v.passed ? "pass" : "FAIL") << " (" << v.checks << " checks)\n";
    if (!v.passed)
        text << "  " << v.identity << " fails in degree " << v.degree << " on " << v.counterexample << "\n";
    text << "abelianized pi0: " << h1.to_string() << ", H_1: " << expected.to_string() << " -> "
         << (h1_ok ? "agree" : "DIFFER") << "\n";
    Json ident{{"passed", v.passed}, {"checks", v.checks}};
    if (!v.passed) {
        ident["identity"] = v.identity;
        ident["degree"] = v.degree;
        ident["counterexample"] = v.counterexample;
    }
    Json config = ctx.config();
    config.erase("window");
    config["samples"] = c.samples;
    config["seed"] = c.seed;
    Json rec{{"config", config},
             {"identities", ident},
             {"h1_via_pi0", to_json(h1)},
             {"h1", to_json(expected)},
             {"verdict", v.passed && h1_ok ? "pass" : "fail"}};
    emit(c, os, text.str(), rec);
    return v.passed && h1_ok ? ok : mismatch;
}

}  // namespace

int execute(const Command& cmd, std::ostream& os, std::ostream& err)
{
    try {
        Context ctx(cmd);
        if (cmd.name == "homology")
            return run_homology(ctx, os);
        if (cmd.name == "loopalg")
            return run_loopalg(ctx, os);
        if (cmd.name == "derivative")
            return run_derivative(ctx, os);
        if (cmd.name == "chainrule")
            return run_chainrule(ctx, os);
        if (cmd.name == "excision")
            return run_excision(ctx, os);
        if (cmd.name == "kancheck")
            return run_kancheck(ctx, os);
        err << "error: unknown command " << cmd.name << "\n";
        return input_error;
    }
    catch (const UnsupportedInput& e) {
        err << "unsupported: " << e.what() << "\n";
        return unsupported;
    }
    catch (const NotReducedError& e) {
        err << "unsupported: " << e.what() << "\n";
        return unsupported;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
}

}  // namespace gcalc::cli
