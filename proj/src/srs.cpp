#include "semirel/srs.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace semirel {

namespace {

struct RawRule {
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
};

} // namespace

Srs parse_srs(const std::string& text) {
    std::vector<RawRule> raw;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::vector<std::string> toks;
        std::string tok;
        while (tokens >> tok) toks.push_back(tok);
        if (toks.empty()) continue;

        auto arrow = std::find(toks.begin(), toks.end(), "->");
        if (arrow == toks.end())
            throw parse_error("line " + std::to_string(line_no) + ": missing '->'");
        if (std::find(arrow + 1, toks.end(), "->") != toks.end())
            throw parse_error("line " + std::to_string(line_no) + ": more than one '->'");
        if (arrow == toks.begin())
            throw parse_error("line " + std::to_string(line_no) + ": empty left-hand side");

        RawRule rule;
        rule.lhs.assign(toks.begin(), arrow);
        rule.rhs.assign(arrow + 1, toks.end());
        raw.push_back(std::move(rule));
    }
    if (raw.empty()) throw parse_error("no rules found");

    std::map<std::string, Symbol> symbol_of;
    for (const auto& rule : raw) {
        for (const auto& tok : rule.lhs) symbol_of.emplace(tok, 0);
        for (const auto& tok : rule.rhs) symbol_of.emplace(tok, 0);
    }
    Srs srs;
    for (auto& [name, sym] : symbol_of) {
        sym = static_cast<Symbol>(srs.alphabet.size());
        srs.alphabet.push_back(name);
    }
    for (const auto& rule : raw) {
        Rule out;
        for (const auto& tok : rule.lhs) out.lhs.push_back(symbol_of.at(tok));
        for (const auto& tok : rule.rhs) out.rhs.push_back(symbol_of.at(tok));
        srs.rules.push_back(std::move(out));
    }
    return srs;
}

std::string show_rule(const Rule& rule, const std::vector<std::string>& alphabet) {
    std::string out;
    for (Symbol c : rule.lhs) out += alphabet[c] + " ";
    out += "->";
    for (Symbol c : rule.rhs) out += " " + alphabet[c];
    return out;
}

} // namespace semirel
