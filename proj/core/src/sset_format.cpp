#include "gcalc/sset_format.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace gcalc {

namespace {

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok)
        out.push_back(tok);
    return out;
}

DegeneracyWord parse_word(const std::string& w, int line)
{
    std::vector<int> ops;
    std::size_t i = 0;
    while (i < w.size()) {
        if (w[i] != 's')
            throw FormatError(line, "bad degeneracy word '" + w + "'");
        std::size_t j = ++i;
        while (j < w.size() && std::isdigit(static_cast<unsigned char>(w[j])))
            ++j;
        if (j == i)
            throw FormatError(line, "bad degeneracy word '" + w + "'");
        ops.push_back(std::stoi(w.substr(i, j - i)));
        i = j;
    }
    return DegeneracyWord(std::move(ops));
}

}  // namespace

LoadedSet parse_sset(const std::string& text)
{
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool header = false;
    SimplicialSet::Builder builder;
    std::map<std::string, std::pair<Simplex, int>> declared;  // name -> (simplex, line)
    std::optional<std::string> base_name;
    int base_line = 0;

    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        auto toks = split_ws(raw);
        if (toks.empty())
            continue;
        if (!header) {
            if (toks.size() != 2 || toks[0] != "sset" || toks[1] != "v1")
                throw FormatError(lineno, "expected header 'sset v1'");
            header = true;
            continue;
        }
        if (toks[0] == "base") {
            if (toks.size() != 2)
                throw FormatError(lineno, "expected 'base <vertex>'");
            base_name = toks[1];
            base_line = lineno;
            continue;
        }
        if (toks[0].size() < 2 || toks[0][0] != 'd')
            throw FormatError(lineno, "expected 'd<k> <name>: <faces>'");
        int dim = 0;
        try {
            std::size_t used = 0;
            dim = std::stoi(toks[0].substr(1), &used);
            if (used != toks[0].size() - 1 || dim < 0)
                throw std::invalid_argument("dim");
        }
        catch (const std::exception&) {
            throw FormatError(lineno, "bad dimension tag '" + toks[0] + "'");
        }
        if (toks.size() < 2)
            throw FormatError(lineno, "missing simplex name");
        std::string name = toks[1];
        std::size_t first_face = 2;
        if (!name.empty() && name.back() == ':')
            name.pop_back();
        else if (toks.size() > 2 && toks[2] == ":")
            first_face = 3;
        if (name.empty())
            throw FormatError(lineno, "missing simplex name");
        if (declared.count(name))
            throw FormatError(lineno, "simplex " + name + " declared twice");

        std::vector<Simplex> faces;
        for (std::size_t k = first_face; k < toks.size(); ++k) {
            const std::string& t = toks[k];
            auto at = declared.count(t) ? std::string::npos : t.rfind('@');
            std::string ref = t.substr(0, at);
            auto it = declared.find(ref);
            if (it == declared.end())
                throw FormatError(lineno, "simplex " + name + " refers to undeclared face '" + ref + "'");
            Simplex f = it->second.first;
            if (at != std::string::npos)
                f.word = parse_word(t.substr(at + 1), lineno);
            for (std::size_t j = 0; j < f.word.ops().size(); ++j) {
                // applied right to left: the k-th operator from the right sees dimension gen_dim + k
                int idx = f.word.ops()[f.word.size() - 1 - j];
                if (idx > f.gen_dim + static_cast<int>(j))
                    throw FormatError(lineno, "degeneracy index out of range in face '" + t + "' of " + name);
            }
            if (f.dim() != dim - 1)
                throw FormatError(lineno, "face '" + t + "' of " + name + " has dimension " +
                                              std::to_string(f.dim()) + ", expected " + std::to_string(dim - 1));
            faces.push_back(f);
        }
        if (static_cast<int>(faces.size()) != (dim == 0 ? 0 : dim + 1))
            throw FormatError(lineno, "simplex " + name + " needs " + std::to_string(dim == 0 ? 0 : dim + 1) +
                                          " faces, got " + std::to_string(faces.size()));
        int idx = builder.add_simplex(dim, name, std::move(faces));
        declared.emplace(name, std::make_pair(Simplex{dim, idx, {}}, lineno));
    }
    if (!header)
        throw FormatError(lineno, "empty file, expected header 'sset v1'");

    LoadedSet out;
    try {
        out.space = std::make_shared<const SimplicialSet>(std::move(builder).build());
    }
    catch (const SimplicialSetError& e) {
        auto it = declared.find(e.simplex());
        throw FormatError(it == declared.end() ? lineno : it->second.second, e.what());
    }
    if (out.space->count(0) == 0)
        throw FormatError(lineno, "no vertices declared");
    if (base_name) {
        auto it = declared.find(*base_name);
        if (it == declared.end() || it->second.first.gen_dim != 0)
            throw FormatError(base_line, "base '" + *base_name + "' is not a declared vertex");
        out.declared_base = Basepoint{it->second.first.gen};
    }
    return out;
}

std::string write_sset(const SimplicialSet& x, std::optional<Basepoint> base)
{
    std::ostringstream os;
    os << "sset v1\n";
    for (int d = 0; d <= x.dimension(); ++d) {
        for (int i = 0; i < x.count(d); ++i) {
            os << "d" << d << " " << x.name(d, i);
            if (d > 0) {
                os << ":";
                for (const Simplex& f : x.faces(d, i))
                    os << " " << x.to_string(f);
            }
            os << "\n";
        }
    }
    if (base)
        os << "base " << x.name(0, base->vertex) << "\n";
    return os.str();
}

}  // namespace gcalc
