#include "rigidlab/construct.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace rigidlab {

namespace {

// Tiny recursive-descent parser for the constructor grammar. Graph-level
// validation (anchor ranges, missing edges, ...) is left to the
// constructors themselves and surfaces as std::invalid_argument.
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Graph parse() {
        Graph g = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return g;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ExpressionError(what + " at position " + std::to_string(pos_) +
                              " in expression \"" + std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c)) fail(std::string("expected '") + c + "'");
    }

    std::string parse_ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected a constructor name");
        return std::string(text_.substr(start, pos_ - start));
    }

    uint32_t parse_uint() {
        skip_ws();
        size_t start = pos_;
        uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > UINT32_MAX) fail("integer too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        return static_cast<uint32_t>(value);
    }

    std::vector<uint32_t> parse_uint_list() {
        std::vector<uint32_t> values{parse_uint()};
        while (try_consume(',')) values.push_back(parse_uint());
        return values;
    }

    // A possibly empty list, ending at ';' or ')'.
    std::vector<uint32_t> parse_uint_list_or_empty() {
        skip_ws();
        if (pos_ < text_.size() && (text_[pos_] == ';' || text_[pos_] == ')')) return {};
        return parse_uint_list();
    }

    void expect_key(const std::string& key) {
        skip_ws();
        if (text_.substr(pos_).substr(0, key.size()) != key) fail("expected '" + key + "='");
        pos_ += key.size();
        expect('=');
    }

    Graph parse_expr() {
        std::string name = parse_ident();
        if (name == "complete") return complete(parse_uint());
        if (name == "bipartite") {
            uint32_t a = parse_uint();
            uint32_t b = parse_uint();
            return complete_bipartite(a, b);
        }
        if (name == "kchain") return k_chain(ChainSpec(parse_uint_list()));
        if (name == "kring") return k_ring(ChainSpec(parse_uint_list()));
        if (name == "cone") {
            expect('(');
            Graph inner = parse_expr();
            expect(')');
            return cone(inner);
        }
        if (name == "attach") {
            expect('(');
            AttachmentSpec spec;
            spec.host = parse_expr();
            expect(';');
            expect_key("left");
            spec.left_anchor = parse_uint_list();
            expect(';');
            expect_key("right");
            spec.right_anchor = parse_uint_list();
            expect(';');
            expect_key("interior");
            spec.interior_sizes = parse_uint_list();
            expect(')');
            return attach(spec);
        }
        if (name == "hennenberg") {
            expect('(');
            Graph inner = parse_expr();
            expect(';');
            expect_key("d");
            uint32_t d = parse_uint();
            expect(';');
            expect_key("i");
            uint32_t i = parse_uint();
            expect(';');
            expect_key("j");
            uint32_t j = parse_uint();
            expect(';');
            expect_key("others");
            std::vector<uint32_t> others = parse_uint_list_or_empty();
            expect(')');
            return hennenberg(inner, d, i, j, others);
        }
        fail("unknown constructor '" + name + "'");
    }
};

}  // namespace

Graph build_graph_from_expression(std::string_view expr) {
    try {
        return Parser(expr).parse();
    } catch (const std::invalid_argument& e) {
        throw ExpressionError(std::string(e.what()) + " in expression \"" + std::string(expr) +
                              "\"");
    }
}

}  // namespace rigidlab
