#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcalc/calculus.hpp"
#include "gcalc/sset_format.hpp"

namespace gcalc::cli {

enum Status { ok = 0, mismatch = 1, input_error = 2, unsupported = 3 };

/// Syntax error at a 0-based offset into the expression text.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::invalid_argument("at " + std::to_string(pos) + ": " + what), pos_(pos)
    {
    }
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Any file or argument problem that maps to status 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Loader = std::function<SSetPtr(const std::string& path)>;

/// expr := term { ("o" | "∘") term }, right-associative;
/// term := "Id" | "Q" | "Map(" path ")" | "Union(" path ")" | "(" expr ")".
ExprPtr parse_functor_expr(const std::string& text, const Loader& load);

/// Reads and checks an sset v1 file. Errors name the file and line.
LoadedSet load_sset(const std::string& path);

struct Window {
    int lo = 0;
    int hi = 0;
};
/// "LO..HI" with 0 <= LO <= HI.
Window parse_window(const std::string& text);

enum class Format { text, record };

struct Command {
    std::string name;  // homology | loopalg | derivative | chainrule | excision | kancheck
    std::string space;
    std::optional<std::string> base;
    std::optional<std::string> outer;
    std::optional<std::string> inner;
    Window window;
    std::optional<int> suspension;
    int samples = 1000;
    std::uint64_t seed = 7;
    Format format = Format::text;
    std::optional<std::string> out;
    bool timings = false;
};

/// Runs a command, writing the report to `os` (and to `cmd.out` as a record if set).
/// Returns the exit status; errors are reported on `err`.
int execute(const Command& cmd, std::ostream& os, std::ostream& err);

}  // namespace gcalc::cli
