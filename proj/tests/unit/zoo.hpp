#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gcalc/sset.hpp"
#include "support.hpp"

namespace gcalc::test {

// Every space built below, for the exhaustive identity and ∂² checks.
inline std::vector<std::pair<std::string, SSetPtr>> zoo()
{
    std::vector<std::pair<std::string, SSetPtr>> out;
    out.emplace_back("point", shared(point()));
    for (int n = 0; n <= 3; ++n)
        out.emplace_back("simplex" + std::to_string(n), shared(standard_simplex(n)));
    for (int n = 1; n <= 3; ++n)
        out.emplace_back("boundary" + std::to_string(n), shared(simplex_boundary(n)));
    for (int n = 0; n <= 3; ++n) {
        out.emplace_back("minimal sphere " + std::to_string(n), sphere_model(n).space);
        out.emplace_back("smash sphere " + std::to_string(n), sphere_model(n, SphereModel::paper).space);
    }
    auto s1 = sphere_model(1, SphereModel::paper);
    auto s2 = sphere_model(2);
    out.emplace_back("S1 x S1", shared(product(*s1.space, *s1.space)));
    out.emplace_back("S2 x S2", shared(product(*s2.space, *s2.space)));
    out.emplace_back("simplex1 x simplex2", shared(product(standard_simplex(1), standard_simplex(2))));
    out.emplace_back("S2 v S3", wedge_at(s2.space, s2.base, sphere_model(3).space, Basepoint{0}).total);
    out.emplace_back("cone S2", reduced_cone(s2).cone.space);
    out.emplace_back("cone smash S1", reduced_cone(s1).cone.space);
    auto p = fiberwise_suspension(SMap::constant(sphere_model(0, SphereModel::paper).space, shared(point()), 0));
    out.emplace_back("unreduced suspension S0", p.suspension);
    out.emplace_back("fiberwise cone of S1 -> pt", fiberwise_suspension(SMap::constant(s1.space, shared(point()), 0)).cone);
    return out;
}

}  // namespace gcalc::test
