#include "semirel/chain.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace semirel {

std::string show_letter(const ExtLetter& l, const std::vector<std::string>& names) {
    auto name = [&names](Symbol s) {
        return s < names.size() ? names[s] : "#" + std::to_string(s);
    };
    switch (l.kind) {
        case ExtLetter::Kind::Lambda: return "λ";
        case ExtLetter::Kind::Plain: return name(l.sym);
        case ExtLetter::Kind::PreInv: return "->" + name(l.sym);
        case ExtLetter::Kind::PostInv: return "<-" + name(l.sym);
    }
    return "?";
}

std::string show_word(const Word& w, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ' ';
        out += show_letter(w[i], names);
    }
    return out;
}

Chain::Chain(std::vector<ChainNode> nodes, std::map<Word, std::uint32_t> query_index)
    : nodes_(std::move(nodes)), query_index_(std::move(query_index)) {
    compute_levels();
}

void Chain::compute_levels() {
    levels_.clear();
    unit_index_.clear();
    std::vector<std::uint32_t> depth(nodes_.size(), 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].is_unit()) {
            unit_index_.emplace(nodes_[i].unit().letter, static_cast<std::uint32_t>(i));
        } else {
            const auto& t = nodes_[i].times();
            depth[i] = 1 + std::max(depth[t.left], depth[t.right]);
        }
        if (depth[i] >= levels_.size()) levels_.resize(depth[i] + 1);
        levels_[depth[i]].push_back(static_cast<std::uint32_t>(i));
    }
}

std::size_t Chain::cost() const {
    std::size_t n = 0;
    for (const auto& node : nodes_)
        if (!node.is_unit()) ++n;
    return n;
}

namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

struct PairStat {
    std::size_t count = 0;
    // (word index, position) of the leftmost occurrence; drives tie-breaking.
    std::pair<std::size_t, std::size_t> leftmost{};
};

// Non-overlapping adjacent pair counts over all sequences, scanned left to
// right. For runs like b b b the pair (b,b) is counted once per two cells,
// matching what substitution will actually replace.
std::map<Pair, PairStat> count_pairs(const std::vector<std::vector<std::uint32_t>>& seqs) {
    std::map<Pair, PairStat> stats;
    for (std::size_t w = 0; w < seqs.size(); ++w) {
        const auto& seq = seqs[w];
        std::map<Pair, std::size_t> last_end;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            Pair p{seq[i], seq[i + 1]};
            auto it = last_end.find(p);
            if (it != last_end.end() && it->second > i) continue;
            last_end[p] = i + 2;
            auto [st, inserted] = stats.try_emplace(p);
            if (inserted || st->second.count == 0) st->second.leftmost = {w, i};
            ++st->second.count;
        }
    }
    return stats;
}

std::vector<std::uint32_t> substitute(const std::vector<std::uint32_t>& seq, Pair pair,
                                      std::uint32_t fresh) {
    std::vector<std::uint32_t> out;
    out.reserve(seq.size());
    std::size_t i = 0;
    while (i < seq.size()) {
        if (i + 1 < seq.size() && seq[i] == pair.first && seq[i + 1] == pair.second) {
            out.push_back(fresh);
            i += 2;
        } else {
            out.push_back(seq[i]);
            ++i;
        }
    }
    return out;
}

} // namespace

Chain Chain::build(std::vector<Word> words) {
    for (const auto& w : words) {
        if (w.empty()) throw std::invalid_argument("Chain::build: empty query word");
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (words.empty()) throw std::invalid_argument("Chain::build: empty query set");

    std::vector<ChainNode> nodes;
    std::map<ExtLetter, std::uint32_t> unit_of;
    std::map<Pair, std::uint32_t> times_of; // hash-consing of Times defs

    auto unit_node = [&](const ExtLetter& l) {
        auto it = unit_of.find(l);
        if (it != unit_of.end()) return it->second;
        auto id = static_cast<std::uint32_t>(nodes.size());
        nodes.push_back({ChainNode::Unit{l}, Word{l}});
        unit_of.emplace(l, id);
        return id;
    };

    auto times_node = [&](std::uint32_t left, std::uint32_t right) {
        auto it = times_of.find({left, right});
        if (it != times_of.end()) return it->second;
        Word w = nodes[left].word;
        w.insert(w.end(), nodes[right].word.begin(), nodes[right].word.end());
        auto id = static_cast<std::uint32_t>(nodes.size());
        nodes.push_back({ChainNode::Times{left, right}, std::move(w)});
        times_of.emplace(Pair{left, right}, id);
        return id;
    };

    std::vector<std::vector<std::uint32_t>> seqs;
    seqs.reserve(words.size());
    for (const auto& w : words) {
        std::vector<std::uint32_t> seq;
        seq.reserve(w.size());
        for (const auto& l : w) seq.push_back(unit_node(l));
        seqs.push_back(std::move(seq));
    }

    auto all_short = [&seqs] {
        return std::all_of(seqs.begin(), seqs.end(),
                           [](const auto& s) { return s.size() <= 2; });
    };

    while (!all_short()) {
        auto stats = count_pairs(seqs);
        Pair best{};
        const PairStat* best_stat = nullptr;
        for (const auto& [pair, stat] : stats) {
            if (!best_stat || stat.count > best_stat->count ||
                (stat.count == best_stat->count && stat.leftmost < best_stat->leftmost)) {
                best = pair;
                best_stat = &stat;
            }
        }
        std::uint32_t fresh = times_node(best.first, best.second);
        for (auto& seq : seqs) seq = substitute(seq, best, fresh);
    }

    std::map<Word, std::uint32_t> query_index;
    for (std::size_t w = 0; w < words.size(); ++w) {
        const auto& seq = seqs[w];
        std::uint32_t id = seq.size() == 1 ? seq[0] : times_node(seq[0], seq[1]);
        query_index.emplace(words[w], id);
    }

    return Chain(std::move(nodes), std::move(query_index));
}

bool is_chain(const Chain& chain, const std::vector<Word>& words) {
    const auto& nodes = chain.nodes();

    std::map<ExtLetter, std::uint32_t> unit_of;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& node = nodes[i];
        if (node.is_unit()) {
            if (node.word != Word{node.unit().letter}) return false;
            unit_of.emplace(node.unit().letter, static_cast<std::uint32_t>(i));
        } else {
            const auto& t = node.times();
            if (t.left >= i || t.right >= i) return false;
            Word expect = nodes[t.left].word;
            expect.insert(expect.end(), nodes[t.right].word.begin(), nodes[t.right].word.end());
            if (node.word != expect) return false;
        }
    }

    std::set<Word> denoted;
    for (const auto& node : nodes) denoted.insert(node.word);

    for (const auto& w : words) {
        if (w.empty()) return false;
        for (const auto& l : w)
            if (!unit_of.count(l)) return false;
        if (!denoted.count(w)) return false;
        auto it = chain.query_index().find(w);
        if (it == chain.query_index().end()) return false;
        if (it->second >= nodes.size() || nodes[it->second].word != w) return false;
    }
    return true;
}

std::string Chain::dump(const std::vector<std::string>& names) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const auto& node = nodes_[i];
        os << i << ": ";
        if (node.is_unit()) {
            os << "unit " << show_letter(node.unit().letter, names);
        } else {
            os << "times " << node.times().left << " " << node.times().right;
        }
        os << "  [" << show_word(node.word, names) << "]\n";
    }
    os << "cost: " << cost() << "\n";
    return os.str();
}

} // namespace semirel
