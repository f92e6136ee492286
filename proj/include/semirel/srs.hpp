#ifndef SEMIREL_SRS_HPP
#define SEMIREL_SRS_HPP

#include <string>
#include <vector>

#include "semirel/completion.hpp"
#include "semirel/types.hpp"

namespace semirel {

// A parsed string rewriting system. The alphabet is the sorted set of all
// tokens occurring in any rule side; rules refer to it by index.
struct Srs {
    std::vector<std::string> alphabet;
    std::vector<Rule> rules;
};

// One rule per nonempty, non-comment line: `tok tok ... -> tok tok ...`.
// Tokens are whitespace-separated; `#` starts a comment; the right-hand side
// may be empty, the left-hand side may not. A file without rules is an
// error. Throws parse_error naming the offending line.
Srs parse_srs(const std::string& text);

std::string show_rule(const Rule& rule, const std::vector<std::string>& alphabet);

} // namespace semirel

#endif
