#ifndef SEMIREL_CHAIN_HPP
#define SEMIREL_CHAIN_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "semirel/types.hpp"

namespace semirel {

// Letter of the extended alphabet. PreInv(c) is the formal left inverse of c
// (it collapses with a following c); PostInv(c) is the formal right inverse
// (collapses with a preceding c); Lambda is the epsilon letter.
struct ExtLetter {
    enum class Kind : std::uint8_t { Lambda, Plain, PreInv, PostInv };

    Kind kind = Kind::Lambda;
    Symbol sym = 0;

    static ExtLetter lambda() { return {Kind::Lambda, 0}; }
    static ExtLetter plain(Symbol c) { return {Kind::Plain, c}; }
    static ExtLetter pre_inv(Symbol c) { return {Kind::PreInv, c}; }
    static ExtLetter post_inv(Symbol c) { return {Kind::PostInv, c}; }

    friend bool operator==(const ExtLetter&, const ExtLetter&) = default;
    friend auto operator<=>(const ExtLetter&, const ExtLetter&) = default;
};

using Word = std::vector<ExtLetter>;

std::string show_letter(const ExtLetter& l, const std::vector<std::string>& names);
std::string show_word(const Word& w, const std::vector<std::string>& names);

// Node of a multiplication chain: either a single letter or the product of
// two earlier nodes. The denoted word is stored explicitly.
struct ChainNode {
    struct Unit {
        ExtLetter letter;
    };
    struct Times {
        std::uint32_t left;
        std::uint32_t right;
    };

    std::variant<Unit, Times> def;
    Word word;

    bool is_unit() const { return std::holds_alternative<Unit>(def); }
    const Unit& unit() const { return std::get<Unit>(def); }
    const Times& times() const { return std::get<Times>(def); }
};

// Multiplication chain covering a query-word set: every letter in use has a
// Unit node, every query word of length > 1 is denoted by some Times node,
// and Times operands always refer to earlier nodes. Cost counts Times nodes.
class Chain {
public:
    Chain() = default;
    Chain(std::vector<ChainNode> nodes, std::map<Word, std::uint32_t> query_index);

    // Builds a chain with the RePair heuristic: repeatedly extract the most
    // frequent adjacent node pair (non-overlapping, counted left to right;
    // ties resolved by the smallest leftmost occurrence). Words are put in
    // canonical order (sorted, deduplicated) first, so the result depends
    // only on the word set. Throws std::invalid_argument on an empty word.
    static Chain build(std::vector<Word> words);

    const std::vector<ChainNode>& nodes() const { return nodes_; }
    const std::map<Word, std::uint32_t>& query_index() const { return query_index_; }
    const std::map<ExtLetter, std::uint32_t>& unit_index() const { return unit_index_; }

    // Node ids grouped by definition depth; all nodes of one level depend
    // only on strictly earlier levels.
    const std::vector<std::vector<std::uint32_t>>& levels() const { return levels_; }

    std::size_t cost() const;

    std::string dump(const std::vector<std::string>& names) const;

private:
    void compute_levels();

    std::vector<ChainNode> nodes_;
    std::map<Word, std::uint32_t> query_index_;
    std::map<ExtLetter, std::uint32_t> unit_index_;
    std::vector<std::vector<std::uint32_t>> levels_;
};

// Validates the chain conditions against a query set: every letter of every
// query word has a Unit node, every Times node's word is the concatenation
// of its operands' words (with operands earlier in the list), and every
// query word is denoted by some node.
bool is_chain(const Chain& chain, const std::vector<Word>& words);

} // namespace semirel

#endif
