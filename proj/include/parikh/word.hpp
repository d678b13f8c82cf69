#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace parikh {

/// One letter: a Unicode code point.
using Symbol = char32_t;
using Word = std::u32string;
/// Sorted, duplicate-free.
using Alphabet = std::vector<Symbol>;

Alphabet make_alphabet(std::vector<Symbol> symbols);
bool alphabet_contains(const Alphabet& alphabet, Symbol s);
std::size_t symbol_index(const Alphabet& alphabet, Symbol s);

Word from_utf8(std::string_view text);
std::string to_utf8(const Word& word);
std::string to_utf8(Symbol s);

/// Calls `visit` on every word over `alphabet` of length <= max_length, in
/// length-lexicographic order. Stops early when `visit` returns false.
void for_each_word(const Alphabet& alphabet, std::size_t max_length, const std::function<bool(const Word&)>& visit);

/// Letter counts of `w` in alphabet order.
std::vector<std::size_t> letter_counts(const Alphabet& alphabet, const Word& w);

}  // namespace parikh
