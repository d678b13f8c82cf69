#include "parikh/word.hpp"

#include <algorithm>
#include <cstdint>

#include "parikh/error.hpp"

namespace parikh {

Alphabet make_alphabet(std::vector<Symbol> symbols) {
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    return symbols;
}

bool alphabet_contains(const Alphabet& alphabet, Symbol s) {
    return std::binary_search(alphabet.begin(), alphabet.end(), s);
}

std::size_t symbol_index(const Alphabet& alphabet, Symbol s) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), s);
    if (it == alphabet.end() || *it != s) throw InvalidArgument("symbol '" + to_utf8(s) + "' is not in the alphabet");
    return static_cast<std::size_t>(it - alphabet.begin());
}

Word from_utf8(std::string_view text) {
    Word out;
    std::size_t i = 0;
    auto byte = [&](std::size_t k) { return static_cast<unsigned char>(text[k]); };
    while (i < text.size()) {
        unsigned char c = byte(i);
        std::size_t len = 0;
        char32_t cp = 0;
        if (c < 0x80) {
            len = 1;
            cp = c;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            cp = c & 0x07;
        } else {
            throw InvalidArgument("invalid UTF-8 lead byte");
        }
        if (i + len > text.size()) throw InvalidArgument("truncated UTF-8 sequence");
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char cc = byte(i + k);
            if ((cc & 0xC0) != 0x80) throw InvalidArgument("invalid UTF-8 continuation byte");
            cp = (cp << 6) | (cc & 0x3F);
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string to_utf8(Symbol s) {
    std::string out;
    auto cp = static_cast<std::uint32_t>(s);
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

std::string to_utf8(const Word& word) {
    std::string out;
    for (Symbol s : word) out += to_utf8(s);
    return out;
}

void for_each_word(const Alphabet& alphabet, std::size_t max_length, const std::function<bool(const Word&)>& visit) {
    if (!visit(Word{})) return;
    if (alphabet.empty()) return;
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<std::size_t> digits(len, 0);
        Word w(len, alphabet.front());
        while (true) {
            if (!visit(w)) return;
            std::size_t pos = len;
            while (pos > 0) {
                --pos;
                if (++digits[pos] < alphabet.size()) {
                    w[pos] = alphabet[digits[pos]];
                    break;
                }
                digits[pos] = 0;
                w[pos] = alphabet.front();
                if (pos == 0) {
                    pos = len + 1;
                    break;
                }
            }
            if (pos == len + 1) break;
        }
    }
}

std::vector<std::size_t> letter_counts(const Alphabet& alphabet, const Word& w) {
    std::vector<std::size_t> counts(alphabet.size(), 0);
    for (Symbol s : w) ++counts[symbol_index(alphabet, s)];
    return counts;
}

}  // namespace parikh
