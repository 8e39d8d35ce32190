#pragma once

#include <memory>
#include <vector>

#include "gcalc/chains.hpp"
#include "gcalc/sset.hpp"

namespace gcalc::test {

inline SSetPtr shared(SimplicialSet x) { return std::make_shared<const SimplicialSet>(std::move(x)); }

inline std::vector<int> cell_counts(const SimplicialSet& x)
{
    std::vector<int> out;
    for (int d = 0; d <= x.dimension(); ++d)
        out.push_back(x.count(d));
    return out;
}

inline GradedAbelianGroup homology(const SimplicialSet& x, int lo, int hi)
{
    return normalized_chains(x, hi + 1).homology(lo, hi);
}

inline HomologyGroup Z(int rank = 1) { return HomologyGroup{rank, {}}; }

/// Betti numbers of a torsion-free group on its window.
inline std::vector<int> bettis(const GradedAbelianGroup& g)
{
    std::vector<int> out;
    for (int d = g.lo(); d <= g.hi(); ++d) {
        out.push_back(g.at(d).betti);
    }
    return out;
}

inline bool torsion_free(const GradedAbelianGroup& g)
{
    for (int d = g.lo(); d <= g.hi(); ++d)
        if (!g.at(d).torsion.empty())
            return false;
    return true;
}

inline std::string data_path(const std::string& name) { return std::string(GCALC_DATA_DIR) + "/" + name; }
inline std::string fixture_path(const std::string& name) { return std::string(GCALC_FIXTURE_DIR) + "/" + name; }

}  // namespace gcalc::test
