#include "eip/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eip/errors.hpp"

namespace eip {

namespace {

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool is_blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

class ExpressionParser {
public:
    ExpressionParser(std::string text, int max_vertices) : text_(std::move(text)), max_vertices_(max_vertices) {}

    Graph parse() {
        Graph g = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return g;
    }

private:
    Graph expression() {
        const std::string name = identifier();
        if (name == "petersen") return petersen_graph();
        if (name == "x") return graph_x();
        if (name == "y") return graph_y();

        expect('(');
        Graph g;
        if (name == "complete" || name == "path" || name == "cycle" || name == "star" || name == "empty" ||
            name == "z") {
            const int n = integer();
            check_size(n);
            if (name == "complete") g = complete_graph(n);
            else if (name == "path") g = path_graph(n);
            else if (name == "cycle") g = cycle_graph(n);
            else if (name == "star") g = star_graph(n);
            else if (name == "empty") g = empty_graph(n);
            else {
                if (n < 1) throw InputError("Z needs n >= 1, got " + std::to_string(n));
                check_size(5 + 6LL * n);
                g = graph_z(n);
            }
        } else if (name == "union" || name == "join" || name == "product") {
            Graph a = expression();
            expect(',');
            Graph b = expression();
            if (name == "union") g = disjoint_union(a, b, max_vertices_);
            else if (name == "join") g = join(a, b, max_vertices_);
            else g = cartesian_product(a, b, max_vertices_);
        } else if (name == "power") {
            Graph a = expression();
            expect(',');
            const int d = integer();
            g = cartesian_power(a, d, max_vertices_);
        } else {
            fail("unknown graph constructor '" + name + "'");
        }
        expect(')');
        return g;
    }

    void check_size(long long n) const {
        if (n > max_vertices_)
            throw CapacityError(std::to_string(n) + " vertices exceeds the cap of " + std::to_string(max_vertices_));
    }

    std::string identifier() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail("expected a constructor name");
        std::string id = text_.substr(start, pos_ - start);
        std::transform(id.begin(), id.end(), id.begin(), [](unsigned char c) { return std::tolower(c); });
        return id;
    }

    int integer() {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_ || (pos_ == start + 1 && text_[start] == '-')) fail("expected an integer");
        const std::string digits = text_.substr(start, pos_ - start);
        if (digits.size() > 9) throw CapacityError("integer argument '" + digits + "' is too large");
        return std::stoi(digits);
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError(what + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
    }

    std::string text_;
    int max_vertices_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph read_edge_list(std::istream& in, int max_vertices) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_comment(line);
        if (is_blank(line)) continue;
        std::istringstream fields(line);
        auto bad = [&](const std::string& what) {
            throw InputError("line " + std::to_string(line_no) + ": " + what);
        };
        if (n < 0) {
            std::string tag;
            fields >> tag >> n;
            if (tag != "n" || fields.fail() || n < 0) bad("expected header 'n <count>'");
            if (n > max_vertices)
                throw CapacityError(std::to_string(n) + " vertices exceeds the cap of " + std::to_string(max_vertices));
        } else {
            int u = 0, v = 0;
            fields >> u >> v;
            if (fields.fail()) bad("expected 'u v'");
            if (u < 0 || v < 0 || u >= n || v >= n) bad("endpoint outside 0.." + std::to_string(n - 1));
            if (u == v) bad("self-loop at vertex " + std::to_string(u));
            edges.emplace_back(u, v);
        }
        std::string rest;
        if (fields >> rest) bad("unexpected token '" + rest + "'");
    }
    if (n < 0) throw InputError("missing header 'n <count>'");
    return Graph::from_edge_list(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    if (!g.name().empty()) out << "# " << g.name() << '\n';
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph parse_graph_expression(const std::string& text, int max_vertices) {
    return ExpressionParser(text, max_vertices).parse();
}

Graph load_graph(const std::string& spec, int max_vertices) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) {
        std::ifstream in(spec);
        if (!in) throw InputError("cannot open '" + spec + "'");
        return read_edge_list(in, max_vertices).renamed(std::filesystem::path(spec).filename().string());
    }
    return parse_graph_expression(spec, max_vertices);
}

}  // namespace eip
