#include "nonsep/io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nonsep/errors.hpp"

namespace nonsep {

namespace {

void validate(const GraphDocument& doc, const std::string& where) {
    if (doc.n < 0) throw ParseError("negative vertex count", where);
    for (std::size_t i = 0; i < doc.arcs.size(); ++i) {
        auto [u, v] = doc.arcs[i];
        if (u < 0 || v < 0 || u >= doc.n || v >= doc.n)
            throw ParseError("arc endpoint out of range", where + "/arcs/" + std::to_string(i));
        if (u == v) throw ParseError("loop arc", where + "/arcs/" + std::to_string(i));
    }
    if (!doc.labels.empty()) {
        if (static_cast<int>(doc.labels.size()) != doc.n) throw ParseError("label count differs from n", where + "/labels");
        std::set<std::string> seen(doc.labels.begin(), doc.labels.end());
        if (seen.size() != doc.labels.size()) throw ParseError("labels are not unique", where + "/labels");
    }
}

}  // namespace

GraphDocument parse_json_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), "byte " + std::to_string(e.byte));
    }
    if (!j.is_object()) throw ParseError("expected a JSON object", "/");
    GraphDocument doc;
    if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer field \"n\"", "/n");
    doc.n = j["n"].get<int>();
    if (!j.contains("arcs") || !j["arcs"].is_array()) throw ParseError("missing array field \"arcs\"", "/arcs");
    for (std::size_t i = 0; i < j["arcs"].size(); ++i) {
        const auto& a = j["arcs"][i];
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
            throw ParseError("arc must be a pair of integers", "/arcs/" + std::to_string(i));
        doc.arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw ParseError("labels must be an array", "/labels");
        for (std::size_t i = 0; i < j["labels"].size(); ++i) {
            if (!j["labels"][i].is_string()) throw ParseError("label must be a string", "/labels/" + std::to_string(i));
            doc.labels.push_back(j["labels"][i].get<std::string>());
        }
    }
    if (j.contains("directed")) {
        if (!j["directed"].is_boolean()) throw ParseError("directed must be a boolean", "/directed");
        doc.directed = j["directed"].get<bool>();
    }
    validate(doc, "");
    return doc;
}

std::string emit_json_graph(const GraphDocument& doc) {
    nlohmann::json j;
    j["n"] = doc.n;
    nlohmann::json arcs = nlohmann::json::array();
    for (auto [u, v] : doc.arcs) arcs.push_back({u, v});
    j["arcs"] = arcs;
    if (!doc.labels.empty()) j["labels"] = doc.labels;
    if (!doc.directed) j["directed"] = false;
    return j.dump() + "\n";
}

namespace {

class DotLexer {
public:
    explicit DotLexer(const std::string& text) : s_(text) {}

    struct Token {
        enum Kind { Ident, Number, Arrow, Dash, LBrace, RBrace, Semi, End } kind;
        std::string text;
        int line, col;
    };

    Token next() {
        skip();
        Token t{Token::End, "", line_, col_};
        if (i_ >= s_.size()) return t;
        const char c = s_[i_];
        if (c == '{') return advance(t, Token::LBrace, 1);
        if (c == '}') return advance(t, Token::RBrace, 1);
        if (c == ';') return advance(t, Token::Semi, 1);
        if (c == '-' && i_ + 1 < s_.size() && s_[i_ + 1] == '>') return advance(t, Token::Arrow, 2);
        if (c == '-' && i_ + 1 < s_.size() && s_[i_ + 1] == '-') return advance(t, Token::Dash, 2);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            return advance(t, Token::Number, j - i_);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
            return advance(t, Token::Ident, j - i_);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", where(t));
    }

    static std::string where(const Token& t) { return "line " + std::to_string(t.line) + ", column " + std::to_string(t.col); }

private:
    Token advance(Token t, Token::Kind k, std::size_t len) {
        t.kind = k;
        t.text = s_.substr(i_, len);
        i_ += len;
        col_ += static_cast<int>(len);
        return t;
    }

    void skip() {
        while (i_ < s_.size()) {
            const char c = s_[i_];
            if (c == '\n') {
                ++line_, col_ = 1, ++i_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_, ++i_;
            } else if (c == '#' || (c == '/' && i_ + 1 < s_.size() && s_[i_ + 1] == '/')) {
                while (i_ < s_.size() && s_[i_] != '\n') ++i_;
            } else {
                break;
            }
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;
};

}  // namespace

GraphDocument parse_dot_graph(const std::string& text) {
    using Token = DotLexer::Token;
    DotLexer lex(text);
    GraphDocument doc;
    Token t = lex.next();
    if (t.kind == Token::Ident && t.text == "strict") t = lex.next();
    if (t.kind != Token::Ident || (t.text != "digraph" && t.text != "graph"))
        throw ParseError("expected 'digraph' or 'graph'", DotLexer::where(t));
    doc.directed = t.text == "digraph";
    t = lex.next();
    if (t.kind == Token::Ident || t.kind == Token::Number) t = lex.next();
    if (t.kind != Token::LBrace) throw ParseError("expected '{'", DotLexer::where(t));
    int max_id = -1;
    auto node = [&](const Token& tok) {
        if (tok.kind != Token::Number) throw ParseError("expected an integer node id", DotLexer::where(tok));
        int id = 0;
        try {
            id = std::stoi(tok.text);
        } catch (const std::exception&) {
            throw ParseError("node id out of range", DotLexer::where(tok));
        }
        max_id = std::max(max_id, id);
        return id;
    };
    while (true) {
        t = lex.next();
        if (t.kind == Token::RBrace) break;
        if (t.kind == Token::Semi) continue;
        if (t.kind == Token::End) throw ParseError("unexpected end of input, expected '}'", DotLexer::where(t));
        int prev = node(t);
        while (true) {
            Token op = lex.next();
            if (op.kind == Token::Semi || op.kind == Token::RBrace) {
                if (op.kind == Token::RBrace) goto done;
                break;
            }
            const auto want = doc.directed ? Token::Arrow : Token::Dash;
            if (op.kind != want)
                throw ParseError(doc.directed ? "expected '->' or ';'" : "expected '--' or ';'", DotLexer::where(op));
            Token rhs = lex.next();
            const int cur = node(rhs);
            if (cur == prev) throw ParseError("loop edge", DotLexer::where(rhs));
            doc.arcs.emplace_back(prev, cur);
            prev = cur;
        }
    }
done:
    t = lex.next();
    if (t.kind != Token::End) throw ParseError("trailing input after '}'", DotLexer::where(t));
    doc.n = max_id + 1;
    validate(doc, "");
    return doc;
}

std::string emit_dot_graph(const GraphDocument& doc) {
    std::ostringstream os;
    os << (doc.directed ? "digraph" : "graph") << " {\n";
    for (int v = 0; v < doc.n; ++v) os << "  " << v << ";\n";
    for (auto [u, v] : doc.arcs) os << "  " << u << (doc.directed ? " -> " : " -- ") << v << ";\n";
    os << "}\n";
    return os.str();
}

GraphDocument parse_graph(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_json_graph(text) : parse_dot_graph(text);
    }
    throw ParseError("empty input", "byte 0");
}

std::string read_text(const std::string& path) {
    std::ostringstream os;
    if (path == "-") {
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    os << in.rdbuf();
    return os.str();
}

GraphDocument load_graph(const std::string& path) { return parse_graph(read_text(path)); }

Digraph to_digraph(const GraphDocument& doc) {
    Digraph d(doc.n);
    for (auto [u, v] : doc.arcs) {
        d.add_arc(u, v);
        if (!doc.directed) d.add_arc(v, u);
    }
    return d;
}

UndirectedGraph to_undirected(const GraphDocument& doc) {
    UndirectedGraph g(doc.n);
    for (auto [u, v] : doc.arcs) g.add_edge(u, v);
    return g;
}

GraphDocument document_of(const Digraph& d, std::vector<std::string> labels) {
    GraphDocument doc;
    doc.n = d.order();
    for (const Arc& a : d.arcs()) doc.arcs.emplace_back(a.tail, a.head);
    doc.labels = std::move(labels);
    return doc;
}

GraphDocument document_of(const UndirectedGraph& g) {
    GraphDocument doc;
    doc.n = g.order();
    doc.directed = false;
    for (auto [u, v] : g.edges()) doc.arcs.emplace_back(u, v);
    return doc;
}

}  // namespace nonsep
