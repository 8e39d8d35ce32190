#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcalc/chains.hpp"
#include "gcalc/sset.hpp"

namespace gcalc {

class KanError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Freely reduced word in generators τ(x), x a simplex of the reduced base.
class GroupWord {
public:
    struct Letter {
        Simplex gen;
        int exp = 1;  // ±1
        auto operator<=>(const Letter&) const = default;
    };

    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> letters);  // reduces
    static GroupWord generator(const Simplex& x) { return GroupWord({{x, 1}}); }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    GroupWord operator*(const GroupWord& rhs) const;
    GroupWord inverse() const;

    bool operator==(const GroupWord&) const = default;

private:
    std::vector<Letter> letters_;
};

/// The Kan loop group of a reduced simplicial set, evaluated symbolically on words.
/// Degree n is free on the (n+1)-simplices outside the image of s₀, with
///   ∂₀τx = τ(d₁x) τ(d₀x)⁻¹,  ∂ᵢτx = τ(dᵢ₊₁x) (i > 0),  sᵢτx = τ(sᵢ₊₁x),
/// and τ(s₀y) = 1.
class SymbolicSimplicialGroup {
public:
    /// Face of a generator τx (x of dimension n + 1) in degree n.
    using FaceRule = std::function<GroupWord(const SymbolicSimplicialGroup&, const Simplex& x, int i)>;

    explicit SymbolicSimplicialGroup(SSetPtr reduced);

    const SimplicialSet& base() const { return *base_; }
    const SSetPtr& base_ptr() const { return base_; }

    /// τ(x) for an (n+1)-simplex x; the identity when x lies in the image of s₀.
    GroupWord tau(const Simplex& x) const;
    bool is_generator(const Simplex& x) const { return !x.word.contains(0); }
    /// Generators of degree n, in a fixed order.
    std::vector<Simplex> generators(int n) const;

    GroupWord face(const GroupWord& w, int i) const;
    GroupWord degeneracy(const GroupWord& w, int j) const;

    /// The unperturbed generator face.
    GroupWord standard_face(const Simplex& x, int i) const;
    /// Copy with a different generator face rule (test fixtures).
    SymbolicSimplicialGroup with_face_rule(FaceRule rule) const;

    std::string to_string(const GroupWord& w) const;

private:
    SSetPtr base_;
    FaceRule face_rule_;
};

/// Reduces y's space at y by collapsing a spanning tree, then builds the loop group.
SymbolicSimplicialGroup kan_loop_group(const SSetPtr& y, Basepoint base);

struct IdentityVerdict {
    bool passed = true;
    long checks = 0;
    std::string identity;        // the failing identity, e.g. "d0 d1 = d0 d0"
    std::string counterexample;  // the word it fails on
    int degree = -1;
};

/// Random words of length <= max_len in each sampled degree; checks the face/degeneracy
/// identities and that faces and degeneracies are homomorphisms. Reproducible from seed.
IdentityVerdict check_identities(const SymbolicSimplicialGroup& g, int samples, int max_len, std::uint64_t seed);

/// Abelianized π₀: generators of degree 0 modulo d₀w - d₁w for w in degree 1.
HomologyGroup h1_via_pi0(const SymbolicSimplicialGroup& g);

}  // namespace gcalc
