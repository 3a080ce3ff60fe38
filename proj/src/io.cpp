#include "nullsolve/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace nullsolve {

namespace {

struct Token {
    std::string text;
    int col = 0; // 1-based column of the first character
};

struct Line {
    int number = 0; // 1-based
    std::string text; // comment-stripped
    std::vector<Token> tokens;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        Line line{number, raw, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < raw.size() &&
                   !std::isspace(static_cast<unsigned char>(raw[j])))
                ++j;
            line.tokens.push_back(
                Token{raw.substr(i, j - i), static_cast<int>(i) + 1});
            i = j;
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(const Line& line, int col, const std::string& msg) {
    throw ParseError(msg, line.number, col);
}

std::int64_t parse_int(const Line& line, const Token& tok) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(tok.text, &pos);
    } catch (...) {
        fail(line, tok.col, "expected an integer, got '" + tok.text + "'");
    }
    if (pos != tok.text.size())
        fail(line, tok.col, "expected an integer, got '" + tok.text + "'");
    return v;
}

class LineReader {
public:
    explicit LineReader(const std::string& text)
        : lines_(significant_lines(text)) {}

    bool done() const { return next_ >= lines_.size(); }
    const Line& peek() const { return lines_[next_]; }
    const Line& take(const char* what) {
        if (done())
            throw ParseError(std::string("unexpected end of file, expected ") +
                                 what,
                             last_line_number() + 1, 1);
        return lines_[next_++];
    }
    int last_line_number() const {
        return lines_.empty() ? 0 : lines_.back().number;
    }
    void expect_end() const {
        if (!done())
            throw ParseError("unexpected trailing content", peek().number,
                             peek().tokens[0].col);
    }

private:
    std::vector<Line> lines_;
    std::size_t next_ = 0;
};

void expect_token_count(const Line& line, std::size_t count,
                        const std::string& what) {
    if (line.tokens.size() != count)
        fail(line, line.tokens.empty() ? 1 : line.tokens[0].col,
             "expected " + what);
}

// Monomial list of one polynomial line: '+'-separated monomials over
// x<j> tokens and "1"; a lone "0" denotes the empty polynomial.
std::vector<Mask> parse_poly_line(const Line& line, int m) {
    std::vector<Mask> monomials;
    const std::string& s = line.text;
    // split on '+', tracking the base column of each chunk
    std::vector<std::pair<std::string, int>> chunks;
    std::size_t start = 0;
    while (true) {
        const std::size_t plus = s.find('+', start);
        chunks.emplace_back(s.substr(start, plus - start),
                            static_cast<int>(start) + 1);
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    // a lone "0" (exactly one chunk) is the zero polynomial
    if (chunks.size() == 1) {
        std::string trimmed;
        for (char ch : chunks[0].first)
            if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
        if (trimmed == "0") return monomials;
    }
    for (const auto& [chunk, base] : chunks) {
        Mask mono = 0;
        bool saw_var = false;
        bool saw_one = false;
        std::size_t i = 0;
        while (i < chunk.size()) {
            const char ch = chunk[i];
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
                ++i;
                continue;
            }
            if (ch == '1' && !saw_var && !saw_one) {
                saw_one = true;
                ++i;
                continue;
            }
            if (ch == 'x') {
                ++i;
                std::size_t j = i;
                while (j < chunk.size() &&
                       std::isdigit(static_cast<unsigned char>(chunk[j])))
                    ++j;
                if (j == i)
                    fail(line, base + static_cast<int>(i) - 1,
                         "expected a variable index after 'x'");
                const int var = std::stoi(chunk.substr(i, j - i));
                if (var < 1 || var > m)
                    fail(line, base + static_cast<int>(i) - 1,
                         "variable index " + std::to_string(var) +
                             " outside [1, " + std::to_string(m) + "]");
                mono |= Mask{1} << (var - 1);
                saw_var = true;
                i = j;
                continue;
            }
            fail(line, base + static_cast<int>(i),
                 std::string("unexpected character '") + ch + "' in monomial");
        }
        if (!saw_var && !saw_one)
            fail(line, base, "empty monomial");
        if (saw_one && saw_var)
            fail(line, base, "constant and variables mixed in one monomial");
        monomials.push_back(mono);
    }
    return monomials;
}

TermTuple parse_tuple(const Line& line, const GeneralFormPoly& inst,
                      std::size_t& tok_idx) {
    if (tok_idx >= line.tokens.size())
        fail(line, static_cast<int>(line.text.size()) + 1,
             "expected a term tuple");
    const Token& btok = line.tokens[tok_idx];
    const std::int64_t bi = parse_int(line, btok);
    if (bi < 1 || bi > static_cast<std::int64_t>(inst.blocks.size()))
        fail(line, btok.col, "block index out of range");
    ++tok_idx;
    TermTuple t;
    t.block = static_cast<int>(bi - 1);
    const Block& blk = inst.blocks[static_cast<std::size_t>(t.block)];
    for (std::size_t j = 0; j < blk.polys.size(); ++j) {
        if (tok_idx >= line.tokens.size())
            fail(line, static_cast<int>(line.text.size()) + 1,
                 "tuple needs " + std::to_string(blk.polys.size()) +
                     " monomial indices");
        const Token& tok = line.tokens[tok_idx];
        const std::int64_t a = parse_int(line, tok);
        if (a < 1 || a > static_cast<std::int64_t>(blk.polys[j].monomials.size()))
            fail(line, tok.col, "monomial index out of range");
        t.choice.push_back(static_cast<int>(a - 1));
        ++tok_idx;
    }
    return t;
}

} // namespace

GraphFile parse_graph_file(const std::string& text) {
    LineReader in(text);
    const Line& header = in.take("'graph n m' header");
    expect_token_count(header, 3, "'graph n m' header");
    if (header.tokens[0].text != "graph")
        fail(header, header.tokens[0].col, "expected 'graph' header");
    const std::int64_t n = parse_int(header, header.tokens[1]);
    const std::int64_t m = parse_int(header, header.tokens[2]);
    if (n < 1 || n > 1'000'000)
        fail(header, header.tokens[1].col, "vertex count out of range");
    if (m < 0 || m > 1'000'000)
        fail(header, header.tokens[2].col, "edge count out of range");
    std::vector<std::pair<int, int>> edges;
    for (std::int64_t e = 0; e < m; ++e) {
        const Line& line = in.take("an edge line 'u v'");
        expect_token_count(line, 2, "an edge line 'u v'");
        const std::int64_t u = parse_int(line, line.tokens[0]);
        const std::int64_t v = parse_int(line, line.tokens[1]);
        if (u < 1 || u > n)
            fail(line, line.tokens[0].col, "endpoint outside [1, n]");
        if (v < 1 || v > n)
            fail(line, line.tokens[1].col, "endpoint outside [1, n]");
        if (u == v)
            fail(line, line.tokens[0].col, "loops are not supported");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    GraphFile gf;
    gf.g = make_graph(static_cast<int>(n), std::move(edges));
    while (!in.done()) {
        const Line& line = in.take("a 'forbid v:' line");
        if (line.tokens[0].text != "forbid")
            fail(line, line.tokens[0].col, "expected 'forbid' or end of file");
        if (line.tokens.size() < 2)
            fail(line, line.tokens[0].col, "expected 'forbid v: f1 f2 ...'");
        std::string vt = line.tokens[1].text;
        if (vt.empty() || vt.back() != ':')
            fail(line, line.tokens[1].col, "expected 'v:' after 'forbid'");
        vt.pop_back();
        const Token vtok{vt, line.tokens[1].col};
        const std::int64_t v = parse_int(line, vtok);
        if (v < 1 || v > n)
            fail(line, line.tokens[1].col, "vertex outside [1, n]");
        if (gf.forbid.count(static_cast<int>(v)))
            fail(line, line.tokens[1].col,
                 "duplicate forbid line for vertex " + std::to_string(v));
        std::set<std::int64_t> vals;
        for (std::size_t i = 2; i < line.tokens.size(); ++i)
            vals.insert(parse_int(line, line.tokens[i]));
        gf.forbid.emplace(static_cast<int>(v), std::move(vals));
    }
    return gf;
}

OlsonInstance parse_olson_file(const std::string& text) {
    LineReader in(text);
    const Line& header = in.take("'olson p n m' header");
    expect_token_count(header, 4, "'olson p n m' header");
    if (header.tokens[0].text != "olson")
        fail(header, header.tokens[0].col, "expected 'olson' header");
    const std::int64_t p = parse_int(header, header.tokens[1]);
    const std::int64_t n = parse_int(header, header.tokens[2]);
    const std::int64_t m = parse_int(header, header.tokens[3]);
    if (n < 1 || n > 64)
        fail(header, header.tokens[2].col, "row count out of range");
    if (m < 0 || m > 1'000'000)
        fail(header, header.tokens[3].col, "column count out of range");
    const Line& dline = in.take("the 'd:' line");
    if (dline.tokens[0].text != "d:")
        fail(dline, dline.tokens[0].col, "expected 'd:'");
    expect_token_count(dline, static_cast<std::size_t>(n) + 1,
                       "'d:' followed by " + std::to_string(n) + " exponents");
    std::vector<int> d;
    for (std::int64_t i = 0; i < n; ++i)
        d.push_back(static_cast<int>(
            parse_int(dline, dline.tokens[static_cast<std::size_t>(i) + 1])));
    std::vector<ResidueSet> Q;
    for (std::int64_t i = 0; i < n; ++i) {
        const Line& qline = in.take("a 'Q:' line");
        if (qline.tokens[0].text != "Q:")
            fail(qline, qline.tokens[0].col, "expected 'Q:'");
        std::set<std::int64_t> elems;
        for (std::size_t t = 1; t < qline.tokens.size(); ++t)
            elems.insert(parse_int(qline, qline.tokens[t]));
        try {
            Q.push_back(ResidueSet(p, d[static_cast<std::size_t>(i)],
                                   std::move(elems)));
        } catch (const Error& e) {
            fail(qline, qline.tokens[0].col, e.what());
        }
    }
    std::vector<std::vector<std::int64_t>> a;
    for (std::int64_t i = 0; i < n; ++i) {
        const Line& row = in.take("a matrix row");
        expect_token_count(row, static_cast<std::size_t>(m),
                           std::to_string(m) + " matrix entries");
        std::vector<std::int64_t> r;
        for (const Token& tok : row.tokens)
            r.push_back(parse_int(row, tok));
        a.push_back(std::move(r));
    }
    in.expect_end();
    try {
        return OlsonInstance(p, std::move(d), std::move(a), std::move(Q));
    } catch (const Error& e) {
        throw ParseError(e.what(), in.last_line_number(), 1);
    }
}

GeneralFormPoly parse_genpoly_file(const std::string& text) {
    LineReader in(text);
    const Line& header = in.take("'genpoly m k' header");
    expect_token_count(header, 3, "'genpoly m k' header");
    if (header.tokens[0].text != "genpoly")
        fail(header, header.tokens[0].col, "expected 'genpoly' header");
    const std::int64_t m = parse_int(header, header.tokens[1]);
    const std::int64_t k = parse_int(header, header.tokens[2]);
    if (m < 0 || m > kMaxVars)
        fail(header, header.tokens[1].col, "variable count out of range");
    if (k < 1 || k > 4096)
        fail(header, header.tokens[2].col, "block count out of range");
    GeneralFormPoly inst;
    inst.m = static_cast<int>(m);
    for (std::int64_t i = 0; i < k; ++i) {
        const Line& bline = in.take("a 'block m_i' line");
        expect_token_count(bline, 2, "a 'block m_i' line");
        if (bline.tokens[0].text != "block")
            fail(bline, bline.tokens[0].col, "expected 'block'");
        const std::int64_t mi = parse_int(bline, bline.tokens[1]);
        if (mi < 1 || mi > 4096)
            fail(bline, bline.tokens[1].col, "factor count out of range");
        Block blk;
        for (std::int64_t j = 0; j < mi; ++j) {
            const Line& pline = in.take("a polynomial line");
            blk.polys.push_back(
                ExplicitPoly{parse_poly_line(pline, inst.m)});
        }
        inst.blocks.push_back(std::move(blk));
    }
    if (!in.done() && in.peek().tokens[0].text == "fullpairs:") {
        const Line& fline = in.take("'fullpairs:'");
        expect_token_count(fline, 1, "'fullpairs:' alone on its line");
        while (!in.done()) {
            const Line& line = in.take("a 'pair:' or 'leftover:' line");
            std::size_t tok = 1;
            if (line.tokens[0].text == "pair:") {
                TermTuple a = parse_tuple(line, inst, tok);
                TermTuple b = parse_tuple(line, inst, tok);
                if (tok != line.tokens.size())
                    fail(line, line.tokens[tok].col, "trailing tokens after pair");
                inst.full_pairs.emplace_back(std::move(a), std::move(b));
            } else if (line.tokens[0].text == "leftover:") {
                if (inst.leftover)
                    fail(line, line.tokens[0].col, "duplicate leftover line");
                inst.leftover = parse_tuple(line, inst, tok);
                if (tok != line.tokens.size())
                    fail(line, line.tokens[tok].col,
                         "trailing tokens after leftover");
            } else {
                fail(line, line.tokens[0].col,
                     "expected 'pair:' or 'leftover:'");
            }
        }
        if (!inst.leftover)
            throw ParseError("fullpairs section lacks a leftover line",
                             in.last_line_number(), 1);
    } else {
        in.expect_end();
        infer_full_pairing(inst);
    }
    return inst;
}

std::string serialize_graph_file(const GraphFile& gf) {
    std::ostringstream os;
    os << "graph " << gf.g.n << ' ' << gf.g.edges.size() << '\n';
    for (const auto& [u, v] : gf.g.edges)
        os << u << ' ' << v << '\n';
    for (const auto& [v, vals] : gf.forbid) {
        os << "forbid " << v << ':';
        for (std::int64_t f : vals)
            os << ' ' << f;
        os << '\n';
    }
    return os.str();
}

std::string serialize_olson_file(const OlsonInstance& inst) {
    std::ostringstream os;
    os << "olson " << inst.p() << ' ' << inst.n() << ' ' << inst.m() << '\n';
    os << "d:";
    for (int di : inst.d())
        os << ' ' << di;
    os << '\n';
    for (const ResidueSet& Qi : inst.Q()) {
        os << "Q:";
        for (std::int64_t q : Qi.elems())
            os << ' ' << q;
        os << '\n';
    }
    for (const auto& row : inst.a()) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? " " : "") << row[j];
        os << '\n';
    }
    return os.str();
}

namespace {

std::string monomial_str(Mask mono) {
    if (mono == 0) return "1";
    std::string out;
    for (int j = 0; j < kMaxVars; ++j)
        if (mono & (Mask{1} << j))
            out += "x" + std::to_string(j + 1);
    return out;
}

void write_tuple(std::ostringstream& os, const TermTuple& t) {
    os << ' ' << t.block + 1;
    for (int a : t.choice)
        os << ' ' << a + 1;
}

} // namespace

std::string serialize_genpoly_file(const GeneralFormPoly& inst) {
    std::ostringstream os;
    os << "genpoly " << inst.m << ' ' << inst.blocks.size() << '\n';
    for (const Block& blk : inst.blocks) {
        os << "block " << blk.polys.size() << '\n';
        for (const ExplicitPoly& poly : blk.polys) {
            if (poly.monomials.empty()) {
                os << "0\n";
                continue;
            }
            for (std::size_t t = 0; t < poly.monomials.size(); ++t)
                os << (t ? " + " : "") << monomial_str(poly.monomials[t]);
            os << '\n';
        }
    }
    if (inst.leftover) {
        os << "fullpairs:\n";
        for (const auto& [a, b] : inst.full_pairs) {
            os << "pair:";
            write_tuple(os, a);
            write_tuple(os, b);
            os << '\n';
        }
        os << "leftover:";
        write_tuple(os, *inst.leftover);
        os << '\n';
    }
    return os.str();
}

} // namespace nullsolve
