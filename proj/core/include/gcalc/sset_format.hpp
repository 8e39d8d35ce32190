#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "gcalc/sset.hpp"

namespace gcalc {

// Text format, one simplicial set per file:
//
//   sset v1
//   d0 v
//   d2 s: v@s0 v@s0 v@s0
//   base v
//
// Faces are `name` or `name@s<i1>s<i2>...`; words need not be in normal form.
// `#` starts a comment.

class FormatError : public std::runtime_error {
public:
    FormatError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

struct LoadedSet {
    SSetPtr space;
    std::optional<Basepoint> declared_base;

    /// Declared basepoint, else the lowest-index vertex.
    Basepoint base() const { return declared_base.value_or(Basepoint{0}); }
};

LoadedSet parse_sset(const std::string& text);
std::string write_sset(const SimplicialSet& x, std::optional<Basepoint> base = {});

}  // namespace gcalc
