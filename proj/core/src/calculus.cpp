#include "gcalc/calculus.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <sstream>

namespace gcalc {

namespace {

SSetPtr shared(SimplicialSet s) { return std::make_shared<const SimplicialSet>(std::move(s)); }

ExprPtr make(FunctorExpr e) { return std::make_shared<const FunctorExpr>(std::move(e)); }

void require_q_free(const FunctorExpr& f, const char* what)
{
    if (f.contains_q())
        throw CalculusError(std::string(what) + ": Q has no finite simplicial model");
}

ExprPtr recompose(const std::vector<ExprPtr>& terms, std::size_t from)
{
    if (from >= terms.size())
        return FunctorExpr::identity();
    ExprPtr out = terms.back();
    for (std::size_t i = terms.size() - 1; i-- > from;)
        out = FunctorExpr::compose(terms[i], out);
    return out;
}

bool inner_q(const FunctorExpr& f, bool outermost)
{
    if (f.kind == FunctorExpr::Kind::q_plus)
        return !outermost;
    if (f.kind == FunctorExpr::Kind::compose)
        return inner_q(*f.outer, outermost) || inner_q(*f.inner, false);
    return false;
}

void check_q_position(const FunctorExpr& f)
{
    if (inner_q(f, true))
        throw UnsupportedInput("Q is only supported as the outermost functor");
}

void check_window(int lo, int hi)
{
    if (lo < 0 || hi < lo)
        throw CalculusError("bad degree window " + std::to_string(lo) + ".." + std::to_string(hi));
}

int vertex_preimage(const SMap& incl, int global)
{
    for (int v = 0; v < incl.source()->count(0); ++v)
        if (incl.image(0, v).gen == global)
            return v;
    throw SimplicialSetError("vertex outside the component");
}

// Iterated product (((A × A) × A) ...), k >= 2 factors.
std::vector<Product> product_tower(const SSetPtr& a, int k)
{
    std::vector<Product> tower;
    tower.emplace_back(a, a);
    for (int i = 2; i < k; ++i)
        tower.emplace_back(tower.back().object(), a);
    return tower;
}

GradedAbelianGroup zero_group(int lo, int hi) { return GradedAbelianGroup(lo, hi); }

ChainComplex tensor_power(const ChainComplex& c, int m, int top)
{
    ChainComplex out = unit_complex(top);
    for (int i = 0; i < m; ++i)
        out = tensor(out, c, top);
    return out;
}

ChainComplex reduced_fiber_of_wedge(const Atom& atom, int n, int top)
{
    SMap q = reduce_at(atom.space, atom.base);
    if (!is_one_reduced(*q.target()))
        throw UnsupportedInput("component " + atom.label + " has no 1-reduced model");
    BasedSet sphere = sphere_model(n);
    RetractivePresentation w = wedge_at(q.target(), Basepoint{0}, sphere.space, sphere.base);
    return em_fiber(w.retraction, top);
}

}  // namespace

// -- expressions ------------------------------------------------------------------------------

ExprPtr FunctorExpr::identity() { return make({}); }

ExprPtr FunctorExpr::q_plus()
{
    FunctorExpr e;
    e.kind = Kind::q_plus;
    return make(std::move(e));
}

ExprPtr FunctorExpr::map_from(SSetPtr k, std::string source)
{
    if (!k)
        throw CalculusError("Map needs a space");
    if (k->dimension() > 0)
        throw CalculusError("Map(" + source + "): K must be 0-dimensional, has dimension " +
                            std::to_string(k->dimension()));
    FunctorExpr e;
    e.kind = Kind::map_from;
    e.space = std::move(k);
    e.source = std::move(source);
    return make(std::move(e));
}

ExprPtr FunctorExpr::disjoint_union(SSetPtr c, std::string source)
{
    if (!c)
        throw CalculusError("Union needs a space");
    FunctorExpr e;
    e.kind = Kind::disjoint_union;
    e.space = std::move(c);
    e.source = std::move(source);
    return make(std::move(e));
}

ExprPtr FunctorExpr::compose(ExprPtr outer, ExprPtr inner)
{
    FunctorExpr e;
    e.kind = Kind::compose;
    e.outer = std::move(outer);
    e.inner = std::move(inner);
    return make(std::move(e));
}

bool FunctorExpr::contains_q() const
{
    switch (kind) {
    case Kind::q_plus:
        return true;
    case Kind::compose:
        return outer->contains_q() || inner->contains_q();
    default:
        return false;
    }
}

std::string FunctorExpr::to_string() const
{
    switch (kind) {
    case Kind::id:
        return "Id";
    case Kind::q_plus:
        return "Q";
    case Kind::map_from:
        return "Map(" + source + ")";
    case Kind::disjoint_union:
        return "Union(" + source + ")";
    case Kind::compose: {
        std::string o = outer->to_string();
        if (outer->kind == Kind::compose)
            o = "(" + o + ")";
        return o + " o " + inner->to_string();
    }
    }
    return {};
}

std::vector<ExprPtr> flatten(const ExprPtr& f)
{
    if (f->kind != FunctorExpr::Kind::compose)
        return {f};
    std::vector<ExprPtr> out = flatten(f->outer);
    std::vector<ExprPtr> in = flatten(f->inner);
    out.insert(out.end(), in.begin(), in.end());
    return out;
}

SSetPtr value(const FunctorExpr& f, const SSetPtr& x) { return apply(f, SMap::identity(x)).target(); }

SMap apply(const FunctorExpr& f, const SMap& g)
{
    using K = FunctorExpr::Kind;
    switch (f.kind) {
    case K::id:
        return g;
    case K::q_plus:
        throw CalculusError("Q has no finite simplicial model");
    case K::disjoint_union: {
        Coproduct s = coproduct(g.source(), f.space);
        Coproduct t = coproduct(g.target(), f.space);
        return coproduct_map(s, t, g, SMap::identity(f.space));
    }
    case K::map_from: {
        const int k = f.points();
        if (k == 0) {
            auto pt = shared(point());
            return SMap::identity(pt);
        }
        if (k == 1)
            return g;
        std::vector<Product> src = product_tower(g.source(), k);
        std::vector<Product> tgt = product_tower(g.target(), k);
        SMap h = product_map(src[0], tgt[0], g, g);
        for (std::size_t i = 1; i < src.size(); ++i)
            h = product_map(src[i], tgt[i], h, g);
        return h;
    }
    case K::compose:
        return apply(*f.outer, apply(*f.inner, g));
    }
    throw CalculusError("unknown functor");
}

// -- components ----------------------------------------------------------------------------------

std::string Shape::key() const
{
    if (stable)
        return "Q";
    if (is_atom())
        return std::to_string(atom);
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? "," : "") + parts[i].key();
    return s + ")";
}

ComponentModel::ComponentModel(const SSetPtr& x, Basepoint xb, int top) : top_(top)
{
    if (xb.vertex < 0 || xb.vertex >= x->count(0))
        throw CalculusError("basepoint out of range");
    std::vector<std::vector<int>> labels = component_labels(*x);
    base_component_ = labels[0][xb.vertex];
    const int first = register_atoms(x, "X");
    for (int i = first; i < static_cast<int>(atoms_.size()); ++i)
        input_.push_back(Shape{i, {}, false});
    Atom& b = atoms_[first + base_component_];
    std::vector<Component> comps = components(*x);
    b.base = Basepoint{vertex_preimage(component_inclusion(x, comps[base_component_]), xb.vertex)};
}

int ComponentModel::register_atoms(const SSetPtr& space, const std::string& label)
{
    const int first = static_cast<int>(atoms_.size());
    std::vector<Component> comps = components(*space);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        SMap incl = component_inclusion(space, comps[i]);
        Atom a;
        a.space = incl.source();
        a.base = Basepoint{vertex_preimage(incl, comps[i].basepoint)};
        a.label = comps.size() == 1 ? label : label + "#" + std::to_string(i);
        atoms_.push_back(std::move(a));
    }
    return first;
}

std::vector<Shape> ComponentModel::apply(const FunctorExpr& f, const std::vector<Shape>& ys)
{
    using K = FunctorExpr::Kind;
    switch (f.kind) {
    case K::id:
        return ys;
    case K::q_plus:
        return {Shape{-1, {}, true}};
    case K::disjoint_union: {
        auto it = union_atoms_.find(&f);
        int first;
        if (it == union_atoms_.end()) {
            first = register_atoms(f.space, f.source);
            union_atoms_.emplace(&f, first);
        }
        else {
            first = it->second;
        }
        std::vector<Shape> out = ys;
        const int count = static_cast<int>(components(*f.space).size());
        for (int i = 0; i < count; ++i)
            out.push_back(Shape{first + i, {}, false});
        return out;
    }
    case K::map_from: {
        const int k = f.points();
        if (k == 0)
            return {Shape{}};
        if (k == 1)
            return ys;
        std::vector<Shape> out;
        std::vector<int> idx(k, 0);
        const int n = static_cast<int>(ys.size());
        if (n == 0)
            return out;
        while (true) {
            Shape s;
            for (int i : idx)
                s.parts.push_back(ys[i]);
            out.push_back(std::move(s));
            int pos = k - 1;
            while (pos >= 0 && ++idx[pos] == n)
                idx[pos--] = 0;
            if (pos < 0)
                break;
        }
        return out;
    }
    case K::compose:
        return apply(*f.outer, apply(*f.inner, ys));
    }
    return {};
}

int ComponentModel::image_of(const FunctorExpr& f, const std::vector<Shape>& ys, int b)
{
    using K = FunctorExpr::Kind;
    switch (f.kind) {
    case K::id:
    case K::disjoint_union:
        return b;
    case K::q_plus:
        return 0;
    case K::map_from: {
        const int k = f.points();
        if (k == 0)
            return 0;
        if (k == 1)
            return b;
        int out = 0;
        for (int i = 0; i < k; ++i)
            out = out * static_cast<int>(ys.size()) + b;
        return out;
    }
    case K::compose: {
        std::vector<Shape> mid = apply(*f.inner, ys);
        return image_of(*f.outer, mid, image_of(*f.inner, ys, b));
    }
    }
    return 0;
}

std::string ComponentModel::label(const Shape& s) const
{
    if (s.stable)
        return "Q";
    if (s.is_atom())
        return atoms_[s.atom].label;
    if (s.parts.empty())
        return "pt";
    std::string out = "(";
    for (std::size_t i = 0; i < s.parts.size(); ++i)
        out += (i ? " × " : "") + label(s.parts[i]);
    return out + ")";
}

int ComponentModel::count_atom(const Shape& s, int a) const
{
    if (s.is_atom())
        return s.atom == a ? 1 : 0;
    int n = 0;
    for (const Shape& p : s.parts)
        n += count_atom(p, a);
    return n;
}

AlgebraPtr ComponentModel::loop_algebra(const Shape& s)
{
    if (s.parts.size() == 1)
        return loop_algebra(s.parts[0]);
    const std::string k = s.key();
    if (auto it = algebras_.find(k); it != algebras_.end())
        return it->second;
    AlgebraPtr a;
    if (s.is_atom()) {
        const Atom& atom = atoms_[s.atom];
        SMap q = reduce_at(atom.space, atom.base);
        if (!is_one_reduced(*q.target()))
            throw UnsupportedInput("component " + atom.label +
                                   " has no 1-reduced model after collapsing a spanning tree");
        a = cobar(*q.target(), top_);
    }
    else if (s.stable || s.parts.empty()) {
        a = trivial_algebra(top_);
    }
    else {
        std::vector<AlgebraPtr> fs;
        for (const Shape& p : s.parts)
            fs.push_back(loop_algebra(p));
        a = tensor_product(fs);
    }
    algebras_.emplace(k, a);
    return a;
}

// -- derivatives ---------------------------------------------------------------------------------

namespace {

class Deriver {
public:
    explicit Deriver(ComponentModel& cm) : cm_(cm) {}

    // ∂f at component b of Y, restricted to component g of f(Y), vanishes.
    bool vanishes(const FunctorExpr& f, const std::vector<Shape>& ys, int b, int g)
    {
        using K = FunctorExpr::Kind;
        switch (f.kind) {
        case K::id:
        case K::disjoint_union:
            return g != b;
        case K::q_plus:
            return false;
        case K::map_from: {
            const int k = f.points();
            if (k == 0)
                return true;
            if (k == 1)
                return g != b;
            const int n = static_cast<int>(ys.size());
            for (int i = 0; i < k; ++i, g /= n)
                if (g % n == b)
                    return false;
            return true;
        }
        case K::compose: {
            std::vector<Shape> mid = cm_.apply(*f.inner, ys);
            for (int beta = 0; beta < static_cast<int>(mid.size()); ++beta)
                if (!vanishes(*f.inner, ys, b, beta) && !vanishes(*f.outer, mid, beta, g))
                    return false;
            return true;
        }
        }
        return true;
    }

    std::optional<DgModule> derive(const FunctorExpr& f, const std::vector<Shape>& ys, int b, int g)
    {
        if (vanishes(f, ys, b, g))
            return std::nullopt;
        using K = FunctorExpr::Kind;
        const int top = cm_.top();
        switch (f.kind) {
        case K::id:
        case K::disjoint_union:
            return regular_bimodule(cm_.loop_algebra(ys[b]));
        case K::q_plus:
            return trivial_module(cm_.loop_algebra(Shape{-1, {}, true}), cm_.loop_algebra(ys[b]), unit_complex(top));
        case K::map_from: {
            const int k = f.points();
            if (k == 1)
                return regular_bimodule(cm_.loop_algebra(ys[b]));
            std::vector<Shape> out = cm_.apply(f, ys);
            const Shape& gamma = out[g];
            AlgebraPtr ab = cm_.loop_algebra(ys[b]);
            AlgebraPtr ag = cm_.loop_algebra(gamma);
            std::vector<std::pair<int, DgModule>> summands;
            for (int i = 0; i < k; ++i)
                if (gamma.parts[i] == ys[b])
                    summands.emplace_back(i, regular_bimodule(ab));
            return coordinate_sum_module(ag, summands, ab);
        }
        case K::compose: {
            std::optional<DgModule> total;
            for (auto& [beta, m] : split(f, ys, b, g)) {
                (void)beta;
                if (!m)
                    continue;
                total = total ? direct_sum(*total, *m) : *m;
            }
            return total;
        }
        }
        return std::nullopt;
    }

    // One bar bimodule per middle component of a composite; nullopt for vanishing ones.
    std::vector<std::pair<int, std::optional<DgModule>>> split(const FunctorExpr& f, const std::vector<Shape>& ys,
                                                              int b, int g)
    {
        std::vector<std::pair<int, std::optional<DgModule>>> out;
        std::vector<Shape> mid = cm_.apply(*f.inner, ys);
        for (int beta = 0; beta < static_cast<int>(mid.size()); ++beta) {
            if (vanishes(*f.inner, ys, b, beta) || vanishes(*f.outer, mid, beta, g)) {
                out.emplace_back(beta, std::nullopt);
                continue;
            }
            std::optional<DgModule> r = derive(*f.outer, mid, beta, g);
            std::optional<DgModule> l = derive(*f.inner, ys, b, beta);
            out.emplace_back(beta, bar_bimodule(*r, cm_.loop_algebra(mid[beta]), *l, cm_.top()));
        }
        return out;
    }

private:
    ComponentModel& cm_;
};

int target_component(ComponentModel& cm, const FunctorExpr& f, std::optional<int> z)
{
    std::vector<Shape> out = cm.apply(f, cm.input());
    int g = z ? *z : cm.image_of(f, cm.input(), cm.base_component());
    if (g < 0 || g >= static_cast<int>(out.size()))
        throw CalculusError("component " + std::to_string(g) + " out of range (" + std::to_string(out.size()) +
                            " components)");
    return g;
}

}  // namespace

GradedAbelianGroup DerivativeModel::homology() const
{
    if (zero || !module)
        return zero_group(lo, hi);
    return module->chains().homology(lo, hi);
}

std::vector<DerivativeModel> derivative_model(const FunctorExpr& f, const SSetPtr& x, Basepoint xb,
                                              const DerivativeRequest& req)
{
    check_window(req.lo, req.hi);
    check_q_position(f);
    ComponentModel cm(x, xb, req.hi + 1);
    Deriver d(cm);
    const int g = target_component(cm, f, req.z_component);
    const int b = cm.base_component();

    std::vector<DerivativeModel> out;
    if (f.kind == FunctorExpr::Kind::compose) {
        std::vector<Shape> mid = cm.apply(*f.inner, cm.input());
        for (auto& [beta, m] : d.split(f, cm.input(), b, g)) {
            DerivativeModel dm;
            dm.component = cm.label(mid[beta]);
            dm.zero = !m.has_value();
            dm.module = std::move(m);
            dm.lo = req.lo;
            dm.hi = req.hi;
            out.push_back(std::move(dm));
        }
        return out;
    }
    DerivativeModel dm;
    dm.component = cm.label(cm.apply(f, cm.input())[g]);
    dm.module = d.derive(f, cm.input(), b, g);
    dm.zero = !dm.module.has_value();
    dm.lo = req.lo;
    dm.hi = req.hi;
    out.push_back(std::move(dm));
    return out;
}

GradedAbelianGroup stable_cofiber_oracle(const FunctorExpr& f, const SSetPtr& x, Basepoint xb, int n, int lo, int hi)
{
    check_window(lo, hi);
    require_q_free(f, "stable cofiber oracle");
    if (n < hi + 2)
        throw RangeError("suspension degree " + std::to_string(n) + " must be at least hi + 2 = " +
                         std::to_string(hi + 2));
    BasedSet sphere = sphere_model(n);
    RetractivePresentation w = wedge_at(x, xb, sphere.space, sphere.base);
    SMap g = apply(f, w.section);
    const int top = n + hi + 1;
    ChainComplex src = normalized_chains(*g.source(), top);
    ChainComplex tgt = normalized_chains(*g.target(), top);
    ChainMap m{&src, &tgt, induced_chain_map(g, top)};
    return mapping_cone(m).homology(n + lo, n + hi).shifted_down(n);
}

GradedAbelianGroup em_derivative_oracle(const FunctorExpr& f, const SSetPtr& x, Basepoint xb, int n, int lo, int hi,
                                        std::optional<int> z_component)
{
    check_window(lo, hi);
    require_q_free(f, "Eilenberg–Moore oracle");
    if (n < 2)
        throw CalculusError("sphere dimension must be at least 2");
    ComponentModel cm(x, xb, hi + 1);
    const int g = target_component(cm, f, z_component);
    const int m = cm.count_atom(cm.apply(f, cm.input())[g], cm.base_atom());
    if (m == 0)
        return zero_group(lo, hi);
    ChainComplex fiber = reduced_fiber_of_wedge(cm.atoms()[cm.base_atom()], n, hi + 1);
    return tensor_power(fiber, m, hi + 1).homology(lo, hi);
}

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::stable_cofiber:
        return "stable cofiber";
    case Provenance::eilenberg_moore:
        return "Eilenberg-Moore";
    case Provenance::formula:
        return "formula (degraded)";
    case Provenance::bar:
        return "two-sided bar";
    }
    return {};
}

ChainRuleReport chain_rule_check(const ExprPtr& e, const ExprPtr& f, const SSetPtr& x, Basepoint xb,
                                 const ChainRuleOptions& opt)
{
    using clock = std::chrono::steady_clock;
    check_window(opt.lo, opt.hi);
    ExprPtr full = FunctorExpr::compose(e, f);
    check_q_position(*full);

    ChainRuleReport r;
    r.outer = e->to_string();
    r.inner = f->to_string();
    r.lo = opt.lo;
    r.hi = opt.hi;
    r.suspension = opt.suspension.value_or(opt.hi + 2);

    ComponentModel cm(x, xb, opt.hi + 1);
    Deriver d(cm);
    const int g = target_component(cm, *full, opt.z_component);
    const int b = cm.base_component();

    std::vector<ExprPtr> terms = flatten(full);
    const bool stable = terms[0]->kind == FunctorExpr::Kind::q_plus;
    if (stable && opt.z_component && *opt.z_component != 0)
        throw CalculusError("Q has a single component");
    if (!stable && r.suspension < opt.hi + 2)
        throw RangeError("suspension degree must be at least hi + 2");
    auto lhs = std::async(std::launch::async, [&]() -> std::optional<GradedAbelianGroup> {
        auto t0 = clock::now();
        std::optional<GradedAbelianGroup> h;
        if (stable) {
            h = stable_cofiber_oracle(*recompose(terms, 1), x, xb, r.suspension, opt.lo, opt.hi);
        }
        else {
            try {
                h = em_derivative_oracle(*full, x, xb, r.suspension, r.suspension + opt.lo, r.suspension + opt.hi, g)
                        .shifted_down(r.suspension);
            }
            catch (const UnsupportedInput&) {
            }
        }
        r.lhs_seconds = std::chrono::duration<double>(clock::now() - t0).count();
        return h;
    });

    auto t1 = clock::now();
    std::vector<Shape> ys;
    try {
        ys = cm.apply(*f, cm.input());
        r.rhs = zero_group(opt.lo, opt.hi);
        for (int beta = 0; beta < static_cast<int>(ys.size()); ++beta) {
            ComponentTerm term;
            term.component = cm.label(ys[beta]);
            term.homology = zero_group(opt.lo, opt.hi);
            if (!d.vanishes(*f, cm.input(), b, beta) && !d.vanishes(*e, ys, beta, g)) {
                std::optional<DgModule> de = d.derive(*e, ys, beta, g);
                std::optional<DgModule> df = d.derive(*f, cm.input(), b, beta);
                ChainComplex bar = two_sided_bar(*de, cm.loop_algebra(ys[beta]), *df, opt.hi + 1);
                term.zero = false;
                term.homology = bar.homology(opt.lo, opt.hi);
                term.bar_ranks = bar.ranks();
                r.rhs = direct_sum(r.rhs, term.homology);
            }
            r.components.push_back(std::move(term));
        }
    }
    catch (...) {
        lhs.wait();
        throw;
    }
    r.rhs_seconds = std::chrono::duration<double>(clock::now() - t1).count();

    if (std::optional<GradedAbelianGroup> h = lhs.get()) {
        r.lhs = std::move(*h);
        r.lhs_route = stable ? Provenance::stable_cofiber : Provenance::eilenberg_moore;
    }
    else {
        auto t2 = clock::now();
        std::optional<DgModule> m = d.derive(*full, cm.input(), b, g);
        r.lhs = m ? m->chains().homology(opt.lo, opt.hi) : zero_group(opt.lo, opt.hi);
        r.lhs_route = Provenance::formula;
        r.lhs_seconds = std::chrono::duration<double>(clock::now() - t2).count();
    }

    r.comparison = compare_graded(r.lhs, r.rhs, opt.lo, opt.hi);
    return r;
}

std::string ChainRuleReport::to_text(bool timings) const
{
    std::ostringstream os;
    auto indent = [&](const GradedAbelianGroup& h, const std::string& pad) {
        std::istringstream lines(h.to_string());
        for (std::string line; std::getline(lines, line);)
            os << pad << line << "\n";
    };
    os << "chain rule: " << outer << " o " << inner << ", degrees " << lo << ".." << hi << "\n";
    os << "lhs via " << gcalc::to_string(lhs_route);
    if (lhs_route != Provenance::formula)
        os << " (n = " << suspension << ")";
    os << "\n";
    indent(lhs, "  ");
    os << "rhs via " << gcalc::to_string(Provenance::bar) << "\n";
    for (const ComponentTerm& c : components) {
        os << "  component " << c.component << (c.zero ? ": zero" : "") << "\n";
        if (!c.zero)
            indent(c.homology, "    ");
    }
    os << "  total\n";
    indent(rhs, "    ");
    os << (comparison.equal ? "equal" : "differ: " + comparison.to_string()) << "\n";
    if (timings)
        os << "lhs " << lhs_seconds << " s, rhs " << rhs_seconds << " s\n";
    return os.str();
}

// -- excision and bar checks ----------------------------------------------------------------

Square suspension_square(const BasedSet& a)
{
    ReducedCone c = reduced_cone(a);
    return {c.inclusion, c.inclusion};
}

ExcisionReport excision_defect(const FunctorExpr& f, const Square& square, int lo, int hi)
{
    check_window(lo, hi);
    require_q_free(f, "excision");
    const SSetPtr& x0 = square.to_first.source();
    if (x0->count(0) == 0 || components(*x0).size() != 1)
        throw UnsupportedInput("excision needs a connected X0");
    ComponentModel cm(x0, Basepoint{0}, hi + 1);
    const int g = target_component(cm, f, std::nullopt);
    const int m = cm.count_atom(cm.apply(f, cm.input())[g], cm.base_atom());

    Pushout po(square.to_first, square.to_second);
    auto fiber = [&](const SMap& p) {
        try {
            return tensor_power(em_fiber(p, hi + 1), m, hi + 1).homology(lo, hi);
        }
        catch (const NotReducedError& err) {
            throw UnsupportedInput(std::string("excision: ") + err.what());
        }
    };
    ExcisionReport r;
    r.lo = lo;
    r.hi = hi;
    r.fiber_02 = fiber(square.to_second);
    r.fiber_13 = fiber(po.from_b());
    GradedComparison c = compare_graded(r.fiber_02, r.fiber_13, lo, hi);
    r.first_mismatch = c.degree;
    return r;
}

GradedComparison bar_theta_check(const AlgebraPtr& a, const DgModule& m, int lo, int hi)
{
    check_window(lo, hi);
    ChainComplex bar = two_sided_bar(regular_bimodule(a), a, m, hi + 1);
    return compare_graded(bar.homology(lo, hi), m.chains().homology(lo, hi), lo, hi);
}

}  // namespace gcalc
