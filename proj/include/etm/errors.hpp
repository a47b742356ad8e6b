#pragma once

#include <stdexcept>
#include <string>

namespace etm {

// Malformed input text (edge lists, signatures). Carries a 1-based line
// number when the source is line-oriented.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
    parse_error(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_ = 0;
};

// Well-formed signature text that is not in canonical form
// (blocks out of lexicographic order, or an all-zero block).
class canonicality_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Cosine of a pair of embeddings where at least one vector is all-zero.
class undefined_cosine_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Mining a temporal graph whose snapshot count m satisfies m <= k.
class graph_too_short : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Degree-preserving rewiring could not place the requested swaps.
class generation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace etm
