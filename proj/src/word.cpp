#include "readcode/word.hpp"

#include <algorithm>
#include <charconv>

#include "readcode/error.hpp"

namespace readcode {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidReadLength: return "InvalidReadLength";
    case ErrorCode::InvalidSymbol: return "InvalidSymbol";
    case ErrorCode::NotARealization: return "NotARealization";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotDistinct: return "NotDistinct";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::IdenticalWords: return "IdenticalWords";
    case ErrorCode::NotDistanceFour: return "NotDistanceFour";
    case ErrorCode::InvalidFamilyParams: return "InvalidFamilyParams";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::PrescribedTNonpositive: return "PrescribedTNonpositive";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::RadiusTooLarge: return "RadiusTooLarge";
    case ErrorCode::MaxOverEmptySet: return "MaxOverEmptySet";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

void check_alphabet(unsigned q) {
    if (q < 2 || q > kMaxAlphabet)
        throw Error(ErrorCode::InvalidSymbol,
                    "alphabet size " + std::to_string(q) + " outside [2, " + std::to_string(kMaxAlphabet) + "]");
}

void check_symbols(unsigned q, std::span<const Symbol> symbols) {
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i] >= q)
            throw Error(ErrorCode::InvalidSymbol, "symbol " + std::to_string(symbols[i]) + " at position " +
                                                      std::to_string(i + 1) + " is not below q=" + std::to_string(q));
}

unsigned parse_unsigned(std::string_view text) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw Error(ErrorCode::ParseError, "not an unsigned integer: '" + std::string(text) + "'");
    return value;
}

std::vector<Symbol> parse_symbol_list(std::string_view text, unsigned q, bool allow_digits) {
    std::vector<Symbol> out;
    if (text.empty()) return out;
    const bool has_comma = text.find(',') != std::string_view::npos;
    if (allow_digits && q <= 10 && !has_comma) {
        for (char c : text) {
            if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "unexpected character in word: '" + std::string(1, c) + "'");
            out.push_back(static_cast<Symbol>(c - '0'));
        }
    } else {
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = text.find(',', start);
            const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            const unsigned v = parse_unsigned(piece);
            if (v >= kMaxAlphabet) throw Error(ErrorCode::InvalidSymbol, "symbol too large: " + std::to_string(v));
            out.push_back(static_cast<Symbol>(v));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    check_symbols(q, out);
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\n' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\n' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

} // namespace

Word::Word(unsigned q) : q_(q) { check_alphabet(q); }

Word::Word(unsigned q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
    check_alphabet(q);
    check_symbols(q, symbols_);
}

Word::Word(unsigned q, std::initializer_list<Symbol> symbols) : Word(q, std::vector<Symbol>(symbols)) {}

Word Word::zeros(unsigned q, std::size_t n) { return Word(q, std::vector<Symbol>(n, 0)); }

Word Word::slice(std::size_t i, std::size_t j) const {
    if (i > j) return Word(q_);
    if (i < 1 || j > symbols_.size())
        throw Error(ErrorCode::IndexOutOfRange, "slice [" + std::to_string(i) + "," + std::to_string(j) +
                                                    "] outside [1," + std::to_string(symbols_.size()) + "]");
    return Word(q_, std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(i - 1),
                                        symbols_.begin() + static_cast<std::ptrdiff_t>(j)));
}

Word concat(std::initializer_list<const Word*> parts) {
    if (parts.size() == 0) return Word();
    const unsigned q = (*parts.begin())->q();
    std::vector<Symbol> out;
    for (const Word* w : parts) {
        if (w->q() != q) throw Error(ErrorCode::ShapeMismatch, "concatenating words over different alphabets");
        out.insert(out.end(), w->vec().begin(), w->vec().end());
    }
    return Word(q, std::move(out));
}

Word operator+(const Word& a, const Word& b) { return concat({&a, &b}); }

std::size_t hamming_distance(const Word& x, const Word& y) {
    if (x.size() != y.size() || x.q() != y.q())
        throw Error(ErrorCode::ShapeMismatch, "hamming distance needs equal length and alphabet");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x.vec()[i] != y.vec()[i];
    return d;
}

Multiset::Multiset(unsigned q, std::vector<Symbol> elems) : q_(q), elems_(std::move(elems)) {
    check_alphabet(q);
    check_symbols(q, elems_);
    std::sort(elems_.begin(), elems_.end());
}

ReadVector::ReadVector(unsigned q, unsigned ell, std::vector<Multiset> entries)
    : q_(q), ell_(ell), entries_(std::move(entries)) {
    check_alphabet(q);
    if (ell < 2) throw Error(ErrorCode::InvalidReadLength, "read length must be at least 2, got " + std::to_string(ell));
    if (entries_.size() + 1 < ell)
        throw Error(ErrorCode::ShapeMismatch, "a read vector has at least l-1 entries");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].size() != ell || entries_[i].q() != q)
            throw Error(ErrorCode::ShapeMismatch, "entry " + std::to_string(i + 1) + " is not an l-multiset over q");
}

std::string format_word(const Word& x) {
    std::string out;
    if (x.q() <= 10) {
        for (Symbol s : x.symbols()) out.push_back(static_cast<char>('0' + s));
    } else {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(x.vec()[i]);
        }
    }
    return out;
}

Word parse_word(std::string_view text, unsigned q) {
    check_alphabet(q);
    return Word(q, parse_symbol_list(trim(text), q, true));
}

std::string format_multiset(const Multiset& m) {
    std::string out = "{";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(m.elems()[i]);
    }
    out.push_back('}');
    return out;
}

Multiset parse_multiset(std::string_view text, unsigned q) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw Error(ErrorCode::ParseError, "multiset must be braced: '" + std::string(text) + "'");
    return Multiset(q, parse_symbol_list(trim(text.substr(1, text.size() - 2)), q, false));
}

std::string format_read_vector(const ReadVector& r) {
    std::string out = "[";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out.push_back(',');
        out += format_multiset(r[i]);
    }
    out.push_back(']');
    return out;
}

ReadVector parse_read_vector(std::string_view text, unsigned q, unsigned ell) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw Error(ErrorCode::ParseError, "read vector must be bracketed");
    text = trim(text.substr(1, text.size() - 2));
    std::vector<Multiset> entries;
    while (!text.empty()) {
        const std::size_t close = text.find('}');
        if (close == std::string_view::npos) throw Error(ErrorCode::ParseError, "unterminated multiset");
        entries.push_back(parse_multiset(text.substr(0, close + 1), q));
        text = trim(text.substr(close + 1));
        if (!text.empty()) {
            if (text.front() != ',') throw Error(ErrorCode::ParseError, "expected ',' between multisets");
            text = trim(text.substr(1));
        }
    }
    return ReadVector(q, ell, std::move(entries));
}

} // namespace readcode
