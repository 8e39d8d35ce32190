#include <algorithm>
#include <numeric>
#include <set>

#include "gcalc/chains.hpp"
#include "gcalc/sset.hpp"

namespace gcalc {

namespace {

// Name of a degenerate simplex, written s1s0.x.
std::string component_name(const SimplicialSet& x, const Simplex& s)
{
    std::string word = s.word.to_string();
    return word.empty() ? x.name(s.gen_dim, s.gen) : word.substr(1) + "." + x.name(s.gen_dim, s.gen);
}

}  // namespace

namespace {

/// All k-subsets of {0..m-1}, each listed in decreasing order.
std::vector<std::vector<int>> subsets(int m, int k)
{
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m)
        return out;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.emplace_back(idx.rbegin(), idx.rend());
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == m - k + pos)
            --pos;
        if (pos < 0)
            break;
        ++idx[pos];
        for (int r = pos + 1; r < k; ++r)
            idx[r] = idx[r - 1] + 1;
    }
    return out;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b)
{
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end())
            return false;
    return true;
}

std::string subset_name(const std::vector<int>& verts)
{
    std::string s = "[";
    for (std::size_t i = 0; i < verts.size(); ++i)
        s += (i ? "," : "") + std::to_string(verts[i]);
    return s + "]";
}

SSetPtr shared(SimplicialSet x)
{
    return std::make_shared<const SimplicialSet>(std::move(x));
}

std::vector<std::vector<bool>> empty_mask(const SimplicialSet& x)
{
    std::vector<std::vector<bool>> m(x.dimension() + 1);
    for (int d = 0; d <= x.dimension(); ++d)
        m[d].assign(x.count(d), false);
    return m;
}

}  // namespace

SimplicialSet point()
{
    SimplicialSet::Builder b;
    b.add_vertex("*");
    return std::move(b).build();
}

namespace {

SimplicialSet simplex_faces(int n, bool include_top)
{
    SimplicialSet::Builder b;
    std::vector<std::map<std::vector<int>, int>> index(n + 1);
    int top = include_top ? n : n - 1;
    for (int d = 0; d <= top; ++d) {
        for (auto verts : subsets(n + 1, d + 1)) {
            std::reverse(verts.begin(), verts.end());
            std::vector<Simplex> faces;
            if (d > 0) {
                for (int i = 0; i <= d; ++i) {
                    std::vector<int> f = verts;
                    f.erase(f.begin() + i);
                    faces.push_back(Simplex{d - 1, index[d - 1].at(f), {}});
                }
            }
            index[d][verts] = b.add_simplex(d, subset_name(verts), std::move(faces));
        }
    }
    return std::move(b).build();
}

}  // namespace

SimplicialSet standard_simplex(int n)
{
    if (n < 0)
        throw SimplicialSetError("negative simplex dimension");
    return simplex_faces(n, true);
}

SimplicialSet simplex_boundary(int n)
{
    if (n < 1)
        throw SimplicialSetError("boundary needs n >= 1");
    return simplex_faces(n, false);
}

BasedSet sphere_model(int n, SphereModel model)
{
    if (n < 0)
        throw SimplicialSetError("negative sphere dimension");
    if (model == SphereModel::minimal) {
        SimplicialSet::Builder b;
        b.add_vertex("*");
        if (n == 0) {
            b.add_vertex("p");
        }
        else {
            std::vector<Simplex> faces(n + 1, SimplicialSet::degenerate_vertex(0, n - 1));
            b.add_simplex(n, "e" + std::to_string(n), std::move(faces));
        }
        return {shared(std::move(b).build()), Basepoint{0}};
    }
    if (n == 0)
        return {shared(simplex_boundary(1)), Basepoint{0}};
    if (n == 1) {
        auto edge = shared(standard_simplex(1));
        auto ends = shared(simplex_boundary(1));
        SMap inc(ends, edge, {{Simplex{0, 0, {}}, Simplex{0, 1, {}}}});
        Pushout circle(inc, inc);
        return {circle.object(), Basepoint{0}};
    }
    BasedSet s1 = sphere_model(1, SphereModel::paper);
    return smash(s1, sphere_model(n - 1, SphereModel::paper));
}

// -- Product ---------------------------------------------------------------------

Product::Product(SSetPtr a, SSetPtr b) : a_(std::move(a)), b_(std::move(b))
{
    const int da = a_->dimension(), db = b_->dimension();
    const int top = (da < 0 || db < 0) ? -1 : da + db;
    keys_.resize(top + 1);
    SimplicialSet::Builder builder;
    for (int n = 0; n <= top; ++n) {
        for (int p = 0; p <= std::min(n, da); ++p) {
            for (int q = 0; q <= std::min(n, db); ++q) {
                if (p + q < n)
                    continue;
                auto is = subsets(n, n - p);
                auto js = subsets(n, n - q);
                for (int ai = 0; ai < a_->count(p); ++ai) {
                    for (int bi = 0; bi < b_->count(q); ++bi) {
                        for (const auto& I : is) {
                            for (const auto& J : js) {
                                if (!disjoint(I, J))
                                    continue;
                                Simplex x{p, ai, DegeneracyWord(I)};
                                Simplex y{q, bi, DegeneracyWord(J)};
                                int idx = static_cast<int>(keys_[n].size());
                                keys_[n].emplace_back(x, y);
                                lookup_.emplace(std::make_pair(x, y), idx);
                            }
                        }
                    }
                }
            }
        }
    }
    for (int n = 0; n <= top; ++n) {
        for (const auto& [x, y] : keys_[n]) {
            std::vector<Simplex> faces;
            if (n > 0)
                for (int i = 0; i <= n; ++i)
                    faces.push_back(pair(a_->face(x, i), b_->face(y, i)));
            builder.add_simplex(n, "(" + component_name(*a_, x) + "," + component_name(*b_, y) + ")", std::move(faces));
        }
    }
    object_ = shared(std::move(builder).build());
}

Simplex Product::pair(const Simplex& x0, const Simplex& y0) const
{
    if (x0.dim() != y0.dim())
        throw SimplicialSetError("pairing simplices of different dimension");
    Simplex x = x0, y = y0;
    std::vector<int> collected;
    while (true) {
        int common = -1;
        for (int j : x.word.ops())
            if (y.word.contains(j))
                common = std::max(common, j);
        if (common < 0)
            break;
        x = a_->face(x, common);
        y = b_->face(y, common);
        collected.push_back(common);
    }
    auto it = lookup_.find({x, y});
    if (it == lookup_.end())
        throw SimplicialSetError("product lookup failed");
    return Simplex{x.dim(), it->second, DegeneracyWord(std::move(collected))};
}

SMap Product::projection_left() const
{
    std::vector<std::vector<Simplex>> images(keys_.size());
    for (std::size_t n = 0; n < keys_.size(); ++n)
        for (const auto& k : keys_[n])
            images[n].push_back(k.first);
    return SMap(object_, a_, std::move(images));
}

SMap Product::projection_right() const
{
    std::vector<std::vector<Simplex>> images(keys_.size());
    for (std::size_t n = 0; n < keys_.size(); ++n)
        for (const auto& k : keys_[n])
            images[n].push_back(k.second);
    return SMap(object_, b_, std::move(images));
}

SimplicialSet product(const SimplicialSet& a, const SimplicialSet& b)
{
    Product p(shared(a), shared(b));
    return *p.object();
}

SMap product_map(const Product& source, const Product& target, const SMap& f, const SMap& g)
{
    const SimplicialSet& s = *source.object();
    std::vector<std::vector<Simplex>> images(s.dimension() + 1);
    for (int n = 0; n <= s.dimension(); ++n) {
        for (int i = 0; i < s.count(n); ++i) {
            auto [x, y] = source.split(n, i);
            images[n].push_back(target.pair(f.apply(x), g.apply(y)));
        }
    }
    return SMap(source.object(), target.object(), std::move(images));
}

SMap pairing_map(const Product& target, const SMap& f, const SMap& g)
{
    const SimplicialSet& s = *f.source();
    std::vector<std::vector<Simplex>> images(s.dimension() + 1);
    for (int n = 0; n <= s.dimension(); ++n)
        for (int i = 0; i < s.count(n); ++i)
            images[n].push_back(target.pair(f.image(n, i), g.image(n, i)));
    return SMap(f.source(), target.object(), std::move(images));
}

// -- Coproduct -------------------------------------------------------------------

Coproduct coproduct(SSetPtr a, SSetPtr b)
{
    SimplicialSet::Builder builder;
    const int top = std::max(a->dimension(), b->dimension());
    std::set<std::string> used;
    for (int d = 0; d <= top; ++d) {
        for (int i = 0; i < a->count(d); ++i) {
            builder.add_simplex(d, a->name(d, i), d ? a->faces(d, i) : std::vector<Simplex>{});
            used.insert(a->name(d, i));
        }
        for (int i = 0; i < b->count(d); ++i) {
            std::vector<Simplex> faces;
            if (d)
                for (Simplex f : b->faces(d, i)) {
                    f.gen += a->count(f.gen_dim);
                    faces.push_back(f);
                }
            std::string name = b->name(d, i);
            while (used.count(name))
                name += "'";
            used.insert(name);
            builder.add_simplex(d, name, std::move(faces));
        }
    }
    auto object = shared(std::move(builder).build());
    std::vector<std::vector<Simplex>> li(a->dimension() + 1), ri(b->dimension() + 1);
    for (int d = 0; d <= a->dimension(); ++d)
        for (int i = 0; i < a->count(d); ++i)
            li[d].push_back(Simplex{d, i, {}});
    for (int d = 0; d <= b->dimension(); ++d)
        for (int i = 0; i < b->count(d); ++i)
            ri[d].push_back(Simplex{d, a->count(d) + i, {}});
    return {object, SMap(a, object, std::move(li)), SMap(b, object, std::move(ri))};
}

SMap coproduct_map(const Coproduct& source, const Coproduct& target, const SMap& f, const SMap& g)
{
    const SimplicialSet& s = *source.object;
    std::vector<std::vector<Simplex>> images(s.dimension() + 1);
    const SimplicialSet& a = *f.source();
    for (int d = 0; d <= s.dimension(); ++d) {
        for (int i = 0; i < s.count(d); ++i) {
            if (i < a.count(d))
                images[d].push_back(target.left.apply(f.image(d, i)));
            else
                images[d].push_back(target.right.apply(g.image(d, i - a.count(d))));
        }
    }
    return SMap(source.object, target.object, std::move(images));
}

// -- Pushout ---------------------------------------------------------------------

Pushout::Pushout(const SMap& f0, const SMap& g0)
{
    if (f0.source().get() != g0.source().get() && f0.source()->total_cells() != g0.source()->total_cells())
        throw SimplicialSetError("pushout legs have different sources");
    const SMap* keep_leg = &f0;  // its target is kept whole
    const SMap* inj_leg = &g0;   // injective; its target contributes the complement
    if (!g0.injective()) {
        if (!f0.injective())
            throw SimplicialSetError("pushout requires one injective leg");
        std::swap(keep_leg, inj_leg);
        swapped_ = true;
    }
    const SimplicialSet& a = *inj_leg->source();
    const SimplicialSet& first = *keep_leg->target();
    const SimplicialSet& second = *inj_leg->target();

    // preimage of second's generators under the injective leg
    std::vector<std::vector<int>> pre(second.dimension() + 1);
    for (int d = 0; d <= second.dimension(); ++d)
        pre[d].assign(second.count(d), -1);
    for (int d = 0; d <= a.dimension(); ++d)
        for (int i = 0; i < a.count(d); ++i) {
            const Simplex& s = inj_leg->image(d, i);
            pre[s.gen_dim][s.gen] = i;
        }

    const int top = std::max(first.dimension(), second.dimension());
    std::vector<std::vector<int>> new_index(second.dimension() + 1);
    for (int d = 0; d <= second.dimension(); ++d) {
        int next = first.count(d);
        for (int i = 0; i < second.count(d); ++i)
            new_index[d].push_back(pre[d][i] < 0 ? next++ : -1);
    }
    auto map_second = [&](const Simplex& s) {
        int p = pre[s.gen_dim][s.gen];
        if (p >= 0)
            return keep_leg->apply(Simplex{s.gen_dim, p, s.word});
        return Simplex{s.gen_dim, new_index[s.gen_dim][s.gen], s.word};
    };

    SimplicialSet::Builder builder;
    std::set<std::string> used;
    for (int d = 0; d <= top; ++d) {
        for (int i = 0; i < first.count(d); ++i) {
            builder.add_simplex(d, first.name(d, i), d ? first.faces(d, i) : std::vector<Simplex>{});
            used.insert(first.name(d, i));
        }
        for (int i = 0; i < second.count(d); ++i) {
            if (pre[d][i] >= 0)
                continue;
            std::vector<Simplex> faces;
            if (d)
                for (const Simplex& f : second.faces(d, i))
                    faces.push_back(map_second(f));
            std::string name = second.name(d, i);
            while (used.count(name))
                name += "'";
            used.insert(name);
            builder.add_simplex(d, name, std::move(faces));
        }
    }
    object_ = shared(std::move(builder).build());

    std::vector<std::vector<Simplex>> fi(first.dimension() + 1), si(second.dimension() + 1);
    for (int d = 0; d <= first.dimension(); ++d)
        for (int i = 0; i < first.count(d); ++i)
            fi[d].push_back(Simplex{d, i, {}});
    for (int d = 0; d <= second.dimension(); ++d)
        for (int i = 0; i < second.count(d); ++i)
            si[d].push_back(map_second(Simplex{d, i, {}}));
    SMap from_first(keep_leg->target(), object_, std::move(fi));
    SMap from_second(inj_leg->target(), object_, std::move(si));
    if (swapped_) {
        from_b_.emplace(std::move(from_second));
        from_c_.emplace(std::move(from_first));
    }
    else {
        from_b_.emplace(std::move(from_first));
        from_c_.emplace(std::move(from_second));
    }
}

SMap Pushout::induced(const SMap& hb, const SMap& hc) const
{
    const SMap& first_leg = swapped_ ? *from_c_ : *from_b_;
    const SMap& second_leg = swapped_ ? *from_b_ : *from_c_;
    const SMap& h_first = swapped_ ? hc : hb;
    const SMap& h_second = swapped_ ? hb : hc;
    const SimplicialSet& p = *object_;
    std::vector<std::vector<Simplex>> images(p.dimension() + 1);
    for (int d = 0; d <= p.dimension(); ++d)
        images[d].resize(p.count(d));
    const SimplicialSet& first = *first_leg.source();
    for (int d = 0; d <= first.dimension(); ++d)
        for (int i = 0; i < first.count(d); ++i)
            images[d][i] = h_first.image(d, i);
    const SimplicialSet& second = *second_leg.source();
    for (int d = 0; d <= second.dimension(); ++d)
        for (int i = 0; i < second.count(d); ++i) {
            const Simplex& s = second_leg.image(d, i);
            if (s.nondegenerate() && s.gen >= first.count(d))
                images[d][s.gen] = h_second.image(d, i);
        }
    return SMap(object_, h_first.target(), std::move(images));
}

// -- sub-objects and quotients ----------------------------------------------------

SMap subcomplex(SSetPtr x, const std::vector<std::vector<bool>>& keep)
{
    std::vector<std::vector<int>> index(x->dimension() + 1);
    SimplicialSet::Builder builder;
    std::vector<std::vector<Simplex>> images(x->dimension() + 1);
    for (int d = 0; d <= x->dimension(); ++d) {
        index[d].assign(x->count(d), -1);
        for (int i = 0; i < x->count(d); ++i) {
            if (d >= static_cast<int>(keep.size()) || !keep[d][i])
                continue;
            std::vector<Simplex> faces;
            if (d)
                for (Simplex f : x->faces(d, i)) {
                    int j = index[f.gen_dim][f.gen];
                    if (j < 0)
                        throw SimplicialSetError("subcomplex not closed under faces at " + x->name(d, i));
                    f.gen = j;
                    faces.push_back(f);
                }
            index[d][i] = builder.add_simplex(d, x->name(d, i), std::move(faces));
        }
    }
    auto sub = shared(std::move(builder).build());
    for (int d = 0; d <= sub->dimension(); ++d)
        images[d].resize(sub->count(d));
    images.resize(sub->dimension() + 1);
    for (int d = 0; d <= x->dimension(); ++d)
        for (int i = 0; i < x->count(d); ++i)
            if (index[d][i] >= 0)
                images[d][index[d][i]] = Simplex{d, i, {}};
    return SMap(sub, x, std::move(images));
}

SMap collapse(SSetPtr x, const std::vector<std::vector<bool>>& keep)
{
    SMap inc = subcomplex(x, keep);
    auto pt = shared(point());
    SMap to_point = SMap::constant(inc.source(), pt, 0);
    Pushout q(to_point, inc);
    return q.from_c();
}

RetractivePresentation wedge_at(SSetPtr x, Basepoint xb, SSetPtr t, Basepoint tb)
{
    if (xb.vertex < 0 || xb.vertex >= x->count(0) || tb.vertex < 0 || tb.vertex >= t->count(0))
        throw SimplicialSetError("basepoint out of range");
    auto pt = shared(point());
    SMap f(pt, x, {{Simplex{0, xb.vertex, {}}}});
    SMap g(pt, t, {{Simplex{0, tb.vertex, {}}}});
    Pushout w(f, g);
    SMap r = w.induced(SMap::identity(x), SMap::constant(t, x, xb.vertex));
    SMap s = w.from_b();
    SMap rs = s.then(r);
    for (int d = 0; d <= x->dimension(); ++d)
        for (int i = 0; i < x->count(d); ++i)
            if (rs.image(d, i) != Simplex{d, i, {}})
                throw SimplicialSetError("wedge retraction is not a left inverse");
    return {x, w.object(), std::move(r), std::move(s)};
}

namespace {

std::vector<std::vector<bool>> wedge_mask(const Product& p, int a0, int b0)
{
    const SimplicialSet& obj = *p.object();
    auto keep = empty_mask(obj);
    for (int d = 0; d <= obj.dimension(); ++d)
        for (int i = 0; i < obj.count(d); ++i) {
            auto [x, y] = p.split(d, i);
            keep[d][i] = (x.gen_dim == 0 && x.gen == a0) || (y.gen_dim == 0 && y.gen == b0);
        }
    return keep;
}

}  // namespace

BasedSet smash(const BasedSet& a, const BasedSet& b)
{
    Product p(a.space, b.space);
    SMap q = collapse(p.object(), wedge_mask(p, a.base.vertex, b.base.vertex));
    return {q.target(), Basepoint{0}};
}

ReducedCone reduced_cone(const BasedSet& a)
{
    auto interval = shared(standard_simplex(1));
    Product p(a.space, interval);
    SMap q = collapse(p.object(), wedge_mask(p, a.base.vertex, 1));
    SMap inc = pairing_map(p, SMap::identity(a.space), SMap::constant(a.space, interval, 0)).then(q);
    return {{q.target(), Basepoint{0}}, std::move(inc)};
}

FiberwiseSuspension fiberwise_suspension(const SMap& p)
{
    SSetPtr total = p.source();
    SSetPtr base = p.target();
    auto interval = shared(standard_simplex(1));
    Product cyl(total, interval);
    SMap id = SMap::identity(total);
    SMap at1 = pairing_map(cyl, id, SMap::constant(total, interval, 1));
    SMap at0 = pairing_map(cyl, id, SMap::constant(total, interval, 0));

    Pushout cone(p, at1);
    SMap cone_to_base = cone.induced(SMap::identity(base), cyl.projection_left().then(p));
    SMap free_end = at0.then(cone.from_c());

    Pushout susp(free_end, free_end);
    SMap to_base = susp.induced(cone_to_base, cone_to_base);
    return {cone.object(), susp.object(), cone_to_base, to_base, free_end, susp.from_b(), susp.from_c()};
}

// -- components ---------------------------------------------------------------------

std::vector<std::vector<int>> component_labels(const SimplicialSet& x)
{
    const int nv = x.count(0);
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int e = 0; e < x.count(1); ++e) {
        int u = find(x.faces(1, e)[0].gen), v = find(x.faces(1, e)[1].gen);
        if (u != v)
            parent[std::max(u, v)] = std::min(u, v);
    }
    std::vector<int> label_of_root(nv, -1);
    int next = 0;
    std::vector<int> vlabel(nv);
    for (int v = 0; v < nv; ++v) {
        int r = find(v);
        if (label_of_root[r] < 0)
            label_of_root[r] = next++;
        vlabel[v] = label_of_root[r];
    }
    std::vector<std::vector<int>> labels(x.dimension() + 1);
    for (int d = 0; d <= x.dimension(); ++d)
        for (int i = 0; i < x.count(d); ++i)
            labels[d].push_back(vlabel[x.vertex_of(Simplex{d, i, {}})]);
    return labels;
}

std::vector<Component> components(const SimplicialSet& x)
{
    auto labels = component_labels(x);
    int n = 0;
    for (int l : labels.empty() ? std::vector<int>{} : labels[0])
        n = std::max(n, l + 1);
    std::vector<Component> out(n);
    for (auto& c : out)
        c.members.resize(x.dimension() + 1);
    for (int d = 0; d <= x.dimension(); ++d)
        for (int i = 0; i < x.count(d); ++i)
            out[labels[d][i]].members[d].push_back(i);
    for (auto& c : out)
        c.basepoint = c.members[0].front();
    return out;
}

SMap component_inclusion(SSetPtr x, const Component& c)
{
    auto keep = empty_mask(*x);
    for (std::size_t d = 0; d < c.members.size(); ++d)
        for (int i : c.members[d])
            keep[d][i] = true;
    return subcomplex(std::move(x), keep);
}

SMap reduce_at(SSetPtr x, Basepoint b)
{
    const int nv = x->count(0);
    if (b.vertex < 0 || b.vertex >= nv)
        throw SimplicialSetError("basepoint out of range");
    std::vector<std::vector<std::pair<int, int>>> adj(nv);
    for (int e = 0; e < x->count(1); ++e) {
        int u = x->faces(1, e)[1].gen, v = x->faces(1, e)[0].gen;
        if (u == v)
            continue;
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }
    auto keep = empty_mask(*x);
    std::vector<bool> seen(nv, false);
    std::vector<int> stack{b.vertex};
    seen[b.vertex] = true;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [v, e] : adj[u]) {
            if (seen[v])
                continue;
            seen[v] = true;
            ++reached;
            keep[1][e] = true;
            stack.push_back(v);
        }
    }
    if (reached != nv)
        throw SimplicialSetError("space is not connected");
    if (nv == 1)
        return SMap::identity(x);
    for (int v = 0; v < nv; ++v)
        keep[0][v] = true;
    return collapse(std::move(x), keep);
}

bool is_one_reduced(const SimplicialSet& x)
{
    return x.count(0) == 1 && x.count(1) == 0;
}

ChainComplex normalized_chains(const SimplicialSet& x, int top, std::optional<Basepoint> reduced)
{
    if (top < 0)
        throw RangeError("chain top must be non-negative");
    std::vector<int> ranks(top + 1);
    std::vector<int> vertex_index(x.count(0));
    int skip = reduced ? reduced->vertex : -1;
    for (int v = 0, k = 0; v < x.count(0); ++v)
        vertex_index[v] = (v == skip) ? -1 : k++;
    for (int d = 0; d <= top; ++d)
        ranks[d] = x.count(d) - (d == 0 && reduced ? 1 : 0);
    std::vector<SparseIntMatrix> bd(top + 1);
    for (int d = 1; d <= top; ++d) {
        bd[d] = SparseIntMatrix(ranks[d - 1], ranks[d]);
        for (int g = 0; g < ranks[d]; ++g) {
            VectorBuilder col;
            for (int i = 0; i <= d; ++i) {
                const Simplex& f = x.faces(d, g)[i];
                if (!f.nondegenerate())
                    continue;
                int row = f.gen;
                if (d == 1) {
                    row = vertex_index[f.gen];
                    if (row < 0)
                        continue;
                }
                col.add(row, (i % 2 == 0) ? 1 : -1);
            }
            bd[d].set_column(g, col.take());
        }
    }
    return ChainComplex(std::move(ranks), std::move(bd));
}

}  // namespace gcalc

namespace gcalc {

std::vector<SparseIntMatrix> induced_chain_map(const SMap& f, int top)
{
    std::vector<SparseIntMatrix> out(top + 1);
    for (int d = 0; d <= top; ++d) {
        out[d] = SparseIntMatrix(f.target()->count(d), f.source()->count(d));
        for (int g = 0; g < f.source()->count(d); ++g) {
            const Simplex& s = f.image(d, g);
            if (s.nondegenerate())
                out[d].set_column(g, {{s.gen, 1}});
        }
    }
    return out;
}

}  // namespace gcalc
