#include "gcalc/sset.hpp"

#include <algorithm>
#include <sstream>

namespace gcalc {

// -- DegeneracyWord ------------------------------------------------------------

DegeneracyWord::DegeneracyWord(std::vector<int> ops) : ops_(std::move(ops))
{
    for (int i : ops_)
        if (i < 0)
            throw SimplicialSetError("negative degeneracy index");
    // s_i s_j = s_{j+1} s_i for i <= j; bubble until strictly decreasing
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < ops_.size(); ++k) {
            int i = ops_[k], j = ops_[k + 1];
            if (i <= j) {
                ops_[k] = j + 1;
                ops_[k + 1] = i;
                changed = true;
            }
        }
    }
}

bool DegeneracyWord::contains(int i) const
{
    return std::find(ops_.begin(), ops_.end(), i) != ops_.end();
}

DegeneracyWord DegeneracyWord::after(const DegeneracyWord& outer) const
{
    std::vector<int> all = outer.ops_;
    all.insert(all.end(), ops_.begin(), ops_.end());
    return DegeneracyWord(std::move(all));
}

std::string DegeneracyWord::to_string() const
{
    if (ops_.empty())
        return {};
    std::string out = "@";
    for (int i : ops_)
        out += "s" + std::to_string(i);
    return out;
}

// -- SimplicialSet::Builder ---------------------------------------------------

int SimplicialSet::Builder::add_vertex(std::string name)
{
    return add_simplex(0, std::move(name), {});
}

int SimplicialSet::Builder::add_simplex(int dim, std::string name, std::vector<Simplex> faces)
{
    if (dim < 0)
        throw SimplicialSetError("negative dimension for " + name);
    if (static_cast<int>(faces.size()) != (dim == 0 ? 0 : dim + 1))
        throw SimplicialSetError("simplex " + name + " needs " + std::to_string(dim + 1) + " faces");
    if (static_cast<int>(names_.size()) <= dim) {
        names_.resize(dim + 1);
        faces_.resize(dim + 1);
    }
    names_[dim].push_back(std::move(name));
    faces_[dim].push_back(std::move(faces));
    return static_cast<int>(names_[dim].size()) - 1;
}

int SimplicialSet::Builder::count(int dim) const
{
    return dim < static_cast<int>(names_.size()) ? static_cast<int>(names_[dim].size()) : 0;
}

SimplicialSet SimplicialSet::Builder::build() &&
{
    // drop empty top dimensions
    while (!names_.empty() && names_.back().empty()) {
        names_.pop_back();
        faces_.pop_back();
    }
    SimplicialSet x;
    x.names_ = std::move(names_);
    x.faces_ = std::move(faces_);
    for (int d = 0; d <= x.dimension(); ++d) {
        for (int i = 0; i < x.count(d); ++i) {
            for (const Simplex& f : x.faces_[d][i]) {
                if (f.dim() != d - 1 || f.gen_dim < 0 || f.gen_dim > x.dimension() || f.gen < 0 ||
                    f.gen >= x.count(f.gen_dim))
                    throw SimplicialSetError("simplex " + x.names_[d][i] + " has a dangling or misdimensioned face",
                                             x.names_[d][i]);
            }
            x.index_.emplace(x.names_[d][i], Simplex{d, i, {}});
        }
    }
    x.check_identities();
    return x;
}

// -- SimplicialSet -------------------------------------------------------------

int SimplicialSet::count(int dim) const
{
    return (dim < 0 || dim > dimension()) ? 0 : static_cast<int>(names_[dim].size());
}

int SimplicialSet::total_cells() const
{
    int n = 0;
    for (const auto& v : names_)
        n += static_cast<int>(v.size());
    return n;
}

std::optional<Simplex> SimplicialSet::find(const std::string& name) const
{
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Simplex SimplicialSet::face(const Simplex& s, int i) const
{
    if (i < 0 || i > s.dim() || s.dim() == 0)
        throw SimplicialSetError("face index out of range");
    const auto& w = s.word.ops();
    std::vector<int> out;
    out.reserve(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        int j = w[k];
        if (i < j) {
            out.push_back(j - 1);
        }
        else if (i == j || i == j + 1) {
            out.insert(out.end(), w.begin() + static_cast<long>(k) + 1, w.end());
            return Simplex{s.gen_dim, s.gen, DegeneracyWord(std::move(out))};
        }
        else {
            out.push_back(j);
            --i;
        }
    }
    const Simplex& f = faces_[s.gen_dim][s.gen][i];
    out.insert(out.end(), f.word.ops().begin(), f.word.ops().end());
    return Simplex{f.gen_dim, f.gen, DegeneracyWord(std::move(out))};
}

Simplex SimplicialSet::degeneracy(const Simplex& s, int j) const
{
    if (j < 0 || j > s.dim())
        throw SimplicialSetError("degeneracy index out of range");
    return Simplex{s.gen_dim, s.gen, s.word.after(DegeneracyWord({j}))};
}

Simplex SimplicialSet::front(const Simplex& s, int k) const
{
    Simplex out = s;
    for (int d = s.dim(); d > k; --d)
        out = face(out, d);
    return out;
}

Simplex SimplicialSet::back(const Simplex& s, int k) const
{
    Simplex out = s;
    for (int i = 0; i < k; ++i)
        out = face(out, 0);
    return out;
}

int SimplicialSet::vertex_of(const Simplex& s) const
{
    Simplex v = front(s, 0);
    return v.gen;
}

Simplex SimplicialSet::degenerate_vertex(int v, int dim)
{
    std::vector<int> ops;
    for (int j = dim - 1; j >= 0; --j)
        ops.push_back(j);
    return Simplex{0, v, DegeneracyWord(std::move(ops))};
}

long SimplicialSet::euler_characteristic() const
{
    long chi = 0;
    for (int d = 0; d <= dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(count(d));
    return chi;
}

void SimplicialSet::check_identities() const
{
    for (int d = 2; d <= dimension(); ++d) {
        for (int g = 0; g < count(d); ++g) {
            Simplex s{d, g, {}};
            for (int j = 1; j <= d; ++j) {
                for (int i = 0; i < j; ++i) {
                    if (face(face(s, j), i) != face(face(s, i), j - 1))
                        throw SimplicialSetError("simplicial identity d" + std::to_string(i) + " d" +
                                                 std::to_string(j) + " fails on " + names_[d][g],
                                                 names_[d][g]);
                }
            }
        }
    }
}

std::string SimplicialSet::to_string(const Simplex& s) const
{
    return names_[s.gen_dim][s.gen] + s.word.to_string();
}

// -- SMap ------------------------------------------------------------------------

SMap::SMap(SSetPtr source, SSetPtr target, std::vector<std::vector<Simplex>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    images_.resize(source_->dimension() + 1);
    for (int d = 0; d <= source_->dimension(); ++d) {
        if (static_cast<int>(images_[d].size()) != source_->count(d))
            throw SimplicialSetError("map assignment missing generators in dimension " + std::to_string(d));
        for (const Simplex& s : images_[d])
            if (s.dim() != d || s.gen_dim > target_->dimension() || s.gen >= target_->count(s.gen_dim))
                throw SimplicialSetError("map image has wrong dimension or dangling target");
    }
    check_faces();
}

SMap SMap::identity(SSetPtr x)
{
    std::vector<std::vector<Simplex>> images(x->dimension() + 1);
    for (int d = 0; d <= x->dimension(); ++d)
        for (int i = 0; i < x->count(d); ++i)
            images[d].push_back(Simplex{d, i, {}});
    return SMap(x, x, std::move(images));
}

SMap SMap::constant(SSetPtr source, SSetPtr target, int v)
{
    std::vector<std::vector<Simplex>> images(source->dimension() + 1);
    for (int d = 0; d <= source->dimension(); ++d)
        images[d].assign(source->count(d), SimplicialSet::degenerate_vertex(v, d));
    return SMap(std::move(source), std::move(target), std::move(images));
}

Simplex SMap::apply(const Simplex& s) const
{
    const Simplex& img = images_[s.gen_dim][s.gen];
    return Simplex{img.gen_dim, img.gen, img.word.after(s.word)};
}

bool SMap::injective() const
{
    std::vector<std::vector<bool>> hit(target_->dimension() + 1);
    for (int d = 0; d <= target_->dimension(); ++d)
        hit[d].assign(target_->count(d), false);
    for (const auto& dim : images_) {
        for (const Simplex& s : dim) {
            if (!s.nondegenerate() || hit[s.gen_dim][s.gen])
                return false;
            hit[s.gen_dim][s.gen] = true;
        }
    }
    return true;
}

SMap SMap::then(const SMap& next) const
{
    if (next.source_.get() != target_.get() && next.source_->total_cells() != target_->total_cells())
        throw SimplicialSetError("composition of incompatible maps");
    std::vector<std::vector<Simplex>> images(images_.size());
    for (std::size_t d = 0; d < images_.size(); ++d)
        for (const Simplex& s : images_[d])
            images[d].push_back(next.apply(s));
    return SMap(source_, next.target_, std::move(images));
}

void SMap::check_faces() const
{
    for (int d = 1; d <= source_->dimension(); ++d) {
        for (int g = 0; g < source_->count(d); ++g) {
            for (int i = 0; i <= d; ++i) {
                Simplex lhs = apply(source_->faces(d, g)[i]);
                Simplex rhs = target_->face(images_[d][g], i);
                if (lhs != rhs)
                    throw SimplicialSetError("map does not commute with d" + std::to_string(i) + " on " +
                                             source_->name(d, g));
            }
        }
    }
}

}  // namespace gcalc
