#include "crackmd/eam_table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "crackmd/error.hpp"

namespace crackmd {

namespace {

// Whitespace tokenizer that tracks 1-based line numbers for error messages.
class TokenReader {
public:
    explicit TokenReader(const std::string& text) : text_(text) {}

    long line() const { return line_; }

    // Reads the remainder of the current line (for the comment header).
    std::string read_line() {
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '\n') out.push_back(text_[pos_++]);
        if (pos_ < text_.size()) {
            ++pos_;
            ++line_;
        }
        return out;
    }

    bool next_token(std::string& tok) {
        tok.clear();
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') ++line_;
            ++pos_;
        }
        token_line_ = line_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
            tok.push_back(text_[pos_++]);
        return !tok.empty();
    }

    std::string expect_token(const std::string& what) {
        std::string tok;
        if (!next_token(tok))
            throw ParseError("setfl: unexpected end of file while reading " + what, line_);
        return tok;
    }

    double expect_double(const std::string& what) {
        const std::string tok = expect_token(what);
        double v = 0.0;
        const auto* begin = tok.data();
        const auto* end = tok.data() + tok.size();
        auto [p, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc{} || p != end)
            throw ParseError("setfl: expected a number while reading " + what + ", got '" + tok +
                                 "'",
                             token_line_);
        return v;
    }

    long expect_int(const std::string& what) {
        const std::string tok = expect_token(what);
        long v = 0;
        const auto* begin = tok.data();
        const auto* end = tok.data() + tok.size();
        auto [p, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc{} || p != end)
            throw ParseError("setfl: expected an integer while reading " + what + ", got '" +
                                 tok + "'",
                             token_line_);
        return v;
    }

    void read_block(std::vector<double>& out, std::size_t count, const std::string& what) {
        out.resize(count);
        for (std::size_t k = 0; k < count; ++k) out[k] = expect_double(what);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    long line_ = 1;
    long token_line_ = 1;
};

void append_number(std::string& buf, double v) {
    char tmp[32];
    auto [p, ec] = std::to_chars(tmp, tmp + sizeof tmp, v);
    (void)ec;
    buf.append(tmp, p);
}

void write_block(std::ostream& out, const std::vector<double>& values) {
    std::string buf;
    for (std::size_t k = 0; k < values.size(); ++k) {
        append_number(buf, values[k]);
        buf.push_back((k % 5 == 4 || k + 1 == values.size()) ? '\n' : ' ');
    }
    out << buf;
}

} // namespace

int EamTable::element_index(const std::string& symbol) const {
    for (std::size_t k = 0; k < elements.size(); ++k)
        if (elements[k].symbol == symbol) return static_cast<int>(k);
    return -1;
}

void EamTable::validate() const {
    if (elements.empty()) throw ConfigError("setfl: no elements");
    if (nrho < 2 || nr < 2) throw ConfigError("setfl: nrho and nr must be >= 2");
    if (!(drho > 0.0) || !(dr > 0.0) || !(cutoff > 0.0))
        throw ConfigError("setfl: drho, dr and cutoff must be > 0");
    if (static_cast<double>(nr) * dr < cutoff)
        throw ConfigError("setfl: r grid too short, nr*dr < cutoff");
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto& e = elements[i];
        if (e.embed.size() != static_cast<std::size_t>(nrho) ||
            e.density.size() != static_cast<std::size_t>(nr))
            throw ConfigError("setfl: table size mismatch for element " + e.symbol);
        if (std::abs(e.density.back()) > 1e-6)
            throw ConfigError("setfl: density of " + e.symbol +
                              " does not reach 0 at the last grid point");
        for (std::size_t j = 0; j < i; ++j)
            if (elements[j].symbol == e.symbol)
                throw ConfigError("setfl: duplicate element symbol " + e.symbol);
    }
    const std::size_t npairs = elements.size() * (elements.size() + 1) / 2;
    if (rphi.size() != npairs) throw ConfigError("setfl: wrong number of pair tables");
    for (const auto& block : rphi) {
        if (block.size() != static_cast<std::size_t>(nr))
            throw ConfigError("setfl: pair table size mismatch");
        if (std::abs(block.back()) > 1e-6)
            throw ConfigError("setfl: r*phi table does not reach 0 at the last grid point");
    }
}

EamTable parse_setfl(const std::string& text) {
    TokenReader in(text);
    EamTable t;
    for (int k = 0; k < 3; ++k) t.comments.push_back(in.read_line());

    const long nelem = in.expect_int("element count");
    if (nelem < 1 || nelem > 16)
        throw ParseError("setfl: implausible element count " + std::to_string(nelem), in.line());
    t.elements.resize(nelem);
    for (auto& e : t.elements) e.symbol = in.expect_token("element symbol");

    t.nrho = static_cast<int>(in.expect_int("nrho"));
    t.drho = in.expect_double("drho");
    t.nr = static_cast<int>(in.expect_int("nr"));
    t.dr = in.expect_double("dr");
    t.cutoff = in.expect_double("cutoff");
    if (t.nrho < 2 || t.nr < 2) throw ParseError("setfl: nrho and nr must be >= 2", in.line());

    for (auto& e : t.elements) {
        const std::string ctx = "element " + e.symbol;
        e.atomic_number = static_cast<int>(in.expect_int(ctx + " atomic number"));
        e.mass = in.expect_double(ctx + " mass");
        e.lattice_a = in.expect_double(ctx + " lattice constant");
        e.lattice_type = in.expect_token(ctx + " lattice type");
        in.read_block(e.embed, t.nrho, ctx + " embedding table");
        in.read_block(e.density, t.nr, ctx + " density table");
    }

    t.rphi.resize(static_cast<std::size_t>(nelem) * (nelem + 1) / 2);
    for (long i = 0; i < nelem; ++i)
        for (long j = 0; j <= i; ++j)
            in.read_block(t.rphi[EamTable::pair_slot(static_cast<int>(i), static_cast<int>(j))],
                          t.nr,
                          "pair table " + t.elements[i].symbol + "-" + t.elements[j].symbol);

    t.validate();
    return t;
}

EamTable parse_setfl_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open potential file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_setfl(ss.str());
}

void write_setfl(const EamTable& table, std::ostream& out) {
    for (int k = 0; k < 3; ++k)
        out << (k < static_cast<int>(table.comments.size()) ? table.comments[k] : "") << '\n';
    out << table.elements.size();
    for (const auto& e : table.elements) out << ' ' << e.symbol;
    out << '\n';
    {
        std::string head;
        head += std::to_string(table.nrho);
        head += ' ';
        append_number(head, table.drho);
        head += ' ';
        head += std::to_string(table.nr);
        head += ' ';
        append_number(head, table.dr);
        head += ' ';
        append_number(head, table.cutoff);
        out << head << '\n';
    }
    for (const auto& e : table.elements) {
        std::string head;
        head += std::to_string(e.atomic_number);
        head += ' ';
        append_number(head, e.mass);
        head += ' ';
        append_number(head, e.lattice_a);
        head += ' ';
        head += e.lattice_type;
        out << head << '\n';
        write_block(out, e.embed);
        write_block(out, e.density);
    }
    for (std::size_t i = 0; i < table.elements.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            write_block(out, table.rphi[EamTable::pair_slot(static_cast<int>(i),
                                                            static_cast<int>(j))]);
}

void write_setfl_file(const EamTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write potential file: " + path);
    write_setfl(table, out);
    if (!out) throw IoError("write failed: " + path);
}

EamSplines build_splines(const EamTable& table) {
    table.validate();
    EamSplines s;
    s.cutoff = table.cutoff;
    s.cutoff_sq = table.cutoff * table.cutoff;
    s.dr = table.dr;
    s.nelem = static_cast<int>(table.elements.size());
    for (const auto& e : table.elements) {
        s.embed.emplace_back(table.drho, e.embed);
        s.density.emplace_back(table.dr, e.density);
    }
    s.rphi.reserve(table.rphi.size());
    for (const auto& block : table.rphi) s.rphi.emplace_back(table.dr, block);
    s.slot_of.resize(s.nelem * s.nelem);
    for (int i = 0; i < s.nelem; ++i)
        for (int j = 0; j < s.nelem; ++j)
            s.slot_of[i * s.nelem + j] = static_cast<int>(EamTable::pair_slot(i, j));
    return s;
}

} // namespace crackmd
