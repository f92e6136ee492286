#include "semirel/certificate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "semirel/semiring.hpp"

namespace semirel {

namespace {

const char* kind_name(LabelKind k) {
    switch (k) {
        case LabelKind::Plain: return "plain";
        case LabelKind::Lambda: return "lambda";
        case LabelKind::PreInv: return "pre_inv";
        case LabelKind::PostInv: return "post_inv";
    }
    return "?";
}

LabelKind kind_from_name(const std::string& name) {
    if (name == "plain") return LabelKind::Plain;
    if (name == "lambda") return LabelKind::Lambda;
    if (name == "pre_inv") return LabelKind::PreInv;
    if (name == "post_inv") return LabelKind::PostInv;
    throw parse_error("unknown edge label kind: " + name);
}

std::string edge_label_text(const CertEdge& e) {
    switch (e.kind) {
        case LabelKind::Plain: return e.symbol + ":" + std::to_string(*e.height);
        case LabelKind::Lambda: return "ε";
        case LabelKind::PreInv: return "->" + e.symbol + ":" + std::to_string(*e.height);
        case LabelKind::PostInv: return "<-" + e.symbol + ":" + std::to_string(*e.height);
    }
    return "?";
}

} // namespace

Certificate make_certificate(const Completion& completion) {
    Certificate cert;
    cert.alphabet = completion.alphabet();
    for (const auto& rule : completion.rules()) {
        CertRule cr;
        for (Symbol c : rule.lhs) cr.lhs.push_back(cert.alphabet[c]);
        for (Symbol c : rule.rhs) cr.rhs.push_back(cert.alphabet[c]);
        cert.rules.push_back(std::move(cr));
    }
    for (NodeId s = 1; s <= completion.state_count(); ++s) cert.states.push_back(s);

    const auto& aut = completion.automaton();
    auto emit = [&cert](const ExtLetter& letter, const std::string& symbol,
                        const Relation<EWeightSemiring>& rel) {
        for (const auto& [p, q, w] : rel.to_edges()) {
            CertEdge e;
            e.from = p;
            e.to = q;
            e.symbol = symbol;
            switch (letter.kind) {
                case ExtLetter::Kind::Plain:
                    e.kind = LabelKind::Plain;
                    e.height = w.height();
                    break;
                case ExtLetter::Kind::Lambda:
                    e.kind = LabelKind::Lambda;
                    e.symbol.clear();
                    break;
                case ExtLetter::Kind::PreInv:
                    e.kind = LabelKind::PreInv;
                    e.height = w.height();
                    break;
                case ExtLetter::Kind::PostInv:
                    e.kind = LabelKind::PostInv;
                    e.height = w.height();
                    break;
            }
            cert.edges.push_back(std::move(e));
        }
    };

    emit(ExtLetter::lambda(), "", aut.letter_relation(ExtLetter::lambda()));
    for (Symbol c = 0; c < cert.alphabet.size(); ++c) {
        emit(ExtLetter::plain(c), cert.alphabet[c], aut.letter_relation(ExtLetter::plain(c)));
        emit(ExtLetter::pre_inv(c), cert.alphabet[c],
             aut.letter_relation(ExtLetter::pre_inv(c)));
        emit(ExtLetter::post_inv(c), cert.alphabet[c],
             aut.letter_relation(ExtLetter::post_inv(c)));
    }
    cert.bound = completion.bound();
    return cert;
}

namespace {

// Dense fuzzy matrix over the certificate's states; entries are heights,
// absence is -inf. Deliberately separate from the sparse engine.
struct FuzzyMatrix {
    std::size_t n = 0;
    std::vector<Fuzzy> cells;

    explicit FuzzyMatrix(std::size_t n_)
        : n(n_), cells(n_ * n_, Fuzzy::neg_inf()) {}

    Fuzzy& at(std::size_t i, std::size_t j) { return cells[i * n + j]; }
    Fuzzy at(std::size_t i, std::size_t j) const { return cells[i * n + j]; }
};

FuzzyMatrix mat_multiply(const FuzzyMatrix& a, const FuzzyMatrix& b) {
    FuzzyMatrix out(a.n);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) {
            Fuzzy acc = Fuzzy::neg_inf();
            for (std::size_t k = 0; k < a.n; ++k)
                acc = fuzzy_plus(acc, fuzzy_times(a.at(i, k), b.at(k, j)));
            out.at(i, j) = acc;
        }
    return out;
}

bool fuzzy_lt_zero(Fuzzy a, Fuzzy b) {
    if (a.is_neg_inf() && b.is_neg_inf()) return true;
    return a < b;
}

} // namespace

Verdict verify(const Certificate& cert) {
    Verdict verdict;
    auto fail = [&verdict](CertFailure f) { verdict.failures.push_back(std::move(f)); };

    std::set<NodeId> states(cert.states.begin(), cert.states.end());
    std::set<std::string> alphabet(cert.alphabet.begin(), cert.alphabet.end());

    for (const auto& e : cert.edges) {
        if (!states.count(e.from) || !states.count(e.to)) {
            fail({CertFailure::Kind::Malformed, 0, e.from, e.to,
                  "edge references a state outside the state list"});
        }
        if (e.kind == LabelKind::Lambda) {
            if (e.height)
                fail({CertFailure::Kind::Malformed, 0, e.from, e.to,
                      "epsilon edge carries a height"});
        } else {
            if (!e.height)
                fail({CertFailure::Kind::Malformed, 0, e.from, e.to,
                      "labelled edge is missing a height"});
            else if (*e.height < 0)
                fail({CertFailure::Kind::Malformed, 0, e.from, e.to,
                      "negative height " + std::to_string(*e.height)});
            if (!alphabet.count(e.symbol))
                fail({CertFailure::Kind::Malformed, 0, e.from, e.to,
                      "edge symbol outside the alphabet: " + e.symbol});
        }
    }
    for (const auto& r : cert.rules) {
        if (r.lhs.empty())
            fail({CertFailure::Kind::Malformed, 0, 0, 0, "rule with empty left-hand side"});
        for (const auto& tok : r.lhs)
            if (!alphabet.count(tok))
                fail({CertFailure::Kind::Malformed, 0, 0, 0,
                      "rule symbol outside the alphabet: " + tok});
        for (const auto& tok : r.rhs)
            if (!alphabet.count(tok))
                fail({CertFailure::Kind::Malformed, 0, 0, 0,
                      "rule symbol outside the alphabet: " + tok});
    }
    if (!verdict.ok()) return verdict;

    std::map<NodeId, std::size_t> index;
    for (NodeId s : cert.states) index.emplace(s, index.size());
    const std::size_t n = index.size();

    FuzzyMatrix eps(n);
    std::map<std::string, FuzzyMatrix> letter;
    for (const auto& name : cert.alphabet) letter.emplace(name, FuzzyMatrix(n));
    for (const auto& e : cert.edges) {
        std::size_t i = index.at(e.from);
        std::size_t j = index.at(e.to);
        if (e.kind == LabelKind::Lambda) {
            eps.at(i, j) = Fuzzy::pos_inf();
        } else if (e.kind == LabelKind::Plain) {
            auto& m = letter.at(e.symbol);
            m.at(i, j) = fuzzy_plus(m.at(i, j), Fuzzy::of(*e.height));
        }
        // Inverse-letter edges do not participate in the certificate
        // conditions.
    }

    // Flower: some state has a loop for every alphabet letter. Completion
    // merges parallel edges with max, so a repair path landing on the flower
    // can raise a loop's height above 0; any height keeps the flower's
    // coverage (heights are already validated non-negative above).
    bool flower = false;
    for (std::size_t i = 0; i < n && !flower; ++i) {
        bool all = true;
        for (const auto& name : cert.alphabet) {
            if (letter.at(name).at(i, i).is_neg_inf()) {
                all = false;
                break;
            }
        }
        flower = all && !cert.alphabet.empty();
    }
    if (!flower) fail({CertFailure::Kind::FlowerMissing, 0, 0, 0, "no flower state"});

    for (std::size_t i = 0; i < n; ++i) {
        if (!eps.at(i, i).is_pos_inf())
            fail({CertFailure::Kind::EpsilonNotReflexive, 0, cert.states[i], cert.states[i],
                  "missing reflexive epsilon edge"});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!eps.at(i, j).is_pos_inf()) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (eps.at(j, k).is_pos_inf() && !eps.at(i, k).is_pos_inf())
                    fail({CertFailure::Kind::EpsilonNotTransitive, 0, cert.states[i],
                          cert.states[k], "epsilon relation is not transitive"});
            }
        }

    // A_eps(w) = eps * A(w1) * eps * ... * A(wn) * eps, naive products.
    auto interleaved = [&](const std::vector<std::string>& word) {
        FuzzyMatrix acc = eps;
        for (const auto& tok : word) {
            acc = mat_multiply(acc, letter.at(tok));
            acc = mat_multiply(acc, eps);
        }
        return acc;
    };

    for (std::size_t r = 0; r < cert.rules.size(); ++r) {
        FuzzyMatrix lhs = interleaved(cert.rules[r].lhs);
        FuzzyMatrix rhs = interleaved(cert.rules[r].rhs);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!fuzzy_lt_zero(lhs.at(i, j), rhs.at(i, j))) {
                    fail({CertFailure::Kind::Incompatible, r, cert.states[i], cert.states[j],
                          "lhs weight " + lhs.at(i, j).show() + " not below rhs weight " +
                              rhs.at(i, j).show()});
                }
            }
    }

    // Reported bound must match the edge heights.
    std::int64_t max_height = 0;
    for (const auto& e : cert.edges)
        if (e.kind == LabelKind::Plain) max_height = std::max(max_height, *e.height);
    if (max_height != cert.bound)
        fail({CertFailure::Kind::BoundMismatch, 0, 0, 0,
              "stated bound " + std::to_string(cert.bound) + " but max plain height is " +
                  std::to_string(max_height)});

    return verdict;
}

std::string describe(const CertFailure& f) {
    std::ostringstream os;
    switch (f.kind) {
        case CertFailure::Kind::Malformed: os << "malformed: " << f.detail; break;
        case CertFailure::Kind::FlowerMissing: os << "flower: " << f.detail; break;
        case CertFailure::Kind::EpsilonNotReflexive:
            os << "epsilon reflexivity at state " << f.p;
            break;
        case CertFailure::Kind::EpsilonNotTransitive:
            os << "epsilon transitivity: missing " << f.p << " -> " << f.q;
            break;
        case CertFailure::Kind::Incompatible:
            os << "incompatible: rule " << f.rule << " at (" << f.p << "," << f.q
               << "): " << f.detail;
            break;
        case CertFailure::Kind::BoundMismatch: os << "bound: " << f.detail; break;
    }
    return os.str();
}

std::string export_dot(const Certificate& cert) {
    std::ostringstream os;
    os << "digraph certificate {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle];\n";
    for (NodeId s : cert.states) os << "  " << s << ";\n";
    for (const auto& e : cert.edges) {
        if (e.kind == LabelKind::Lambda) {
            if (e.from == e.to) continue; // reflexive loops clutter the picture
            os << "  " << e.from << " -> " << e.to << " [label=\"ε\", style=dashed];\n";
        } else {
            os << "  " << e.from << " -> " << e.to << " [label=\"" << edge_label_text(e)
               << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string export_json(const Certificate& cert) {
    nlohmann::json j;
    j["alphabet"] = cert.alphabet;
    j["rules"] = nlohmann::json::array();
    for (const auto& r : cert.rules)
        j["rules"].push_back({{"lhs", r.lhs}, {"rhs", r.rhs}});
    j["states"] = cert.states;
    j["edges"] = nlohmann::json::array();
    for (const auto& e : cert.edges) {
        nlohmann::json label;
        label["kind"] = kind_name(e.kind);
        if (e.kind == LabelKind::Lambda)
            label["symbol"] = nullptr;
        else
            label["symbol"] = e.symbol;
        nlohmann::json edge;
        edge["from"] = e.from;
        edge["label"] = label;
        edge["to"] = e.to;
        if (e.height)
            edge["height"] = *e.height;
        else
            edge["height"] = nullptr;
        j["edges"].push_back(std::move(edge));
    }
    j["bound"] = cert.bound;
    return j.dump(2) + "\n";
}

Certificate import_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("certificate JSON: ") + e.what());
    }
    try {
        Certificate cert;
        cert.alphabet = j.at("alphabet").get<std::vector<std::string>>();
        for (const auto& r : j.at("rules")) {
            CertRule rule;
            rule.lhs = r.at("lhs").get<std::vector<std::string>>();
            rule.rhs = r.at("rhs").get<std::vector<std::string>>();
            cert.rules.push_back(std::move(rule));
        }
        cert.states = j.at("states").get<std::vector<NodeId>>();
        for (const auto& je : j.at("edges")) {
            CertEdge e;
            e.from = je.at("from").get<NodeId>();
            e.to = je.at("to").get<NodeId>();
            const auto& label = je.at("label");
            e.kind = kind_from_name(label.at("kind").get<std::string>());
            if (!label.at("symbol").is_null())
                e.symbol = label.at("symbol").get<std::string>();
            if (!je.at("height").is_null())
                e.height = je.at("height").get<std::int64_t>();
            cert.edges.push_back(std::move(e));
        }
        cert.bound = j.at("bound").get<std::int64_t>();
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("certificate JSON: ") + e.what());
    }
}

} // namespace semirel
