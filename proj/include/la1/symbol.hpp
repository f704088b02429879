#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace la1 {

enum class SymbolKind : uint8_t { Input, Marked, Work, LeftEnd, RightEnd };

// One tape symbol: a plain input letter, its marked version, an auxiliary work
// letter, or one of the two end-markers. End-markers carry no letter.
struct TapeSymbol {
    SymbolKind kind = SymbolKind::Input;
    std::string letter;

    static TapeSymbol input(std::string l) { return {SymbolKind::Input, std::move(l)}; }
    static TapeSymbol marked(std::string l) { return {SymbolKind::Marked, std::move(l)}; }
    static TapeSymbol work(std::string l) { return {SymbolKind::Work, std::move(l)}; }
    static TapeSymbol left_end() { return {SymbolKind::LeftEnd, {}}; }
    static TapeSymbol right_end() { return {SymbolKind::RightEnd, {}}; }

    bool is_end_marker() const {
        return kind == SymbolKind::LeftEnd || kind == SymbolKind::RightEnd;
    }

    bool operator==(const TapeSymbol&) const = default;

    // Rendering used by the text format and DOT export: a, a', |-, -|
    std::string text() const;
};

bool operator<(const TapeSymbol& a, const TapeSymbol& b);

// True for names the text format can represent: [A-Za-z_][A-Za-z0-9_]*
bool is_identifier(const std::string& s);

uint64_t fnv1a64(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ull);

} // namespace la1

template <>
struct std::hash<la1::TapeSymbol> {
    size_t operator()(const la1::TapeSymbol& s) const noexcept {
        uint64_t h = la1::fnv1a64(s.letter.data(), s.letter.size());
        return static_cast<size_t>(h * 31 + static_cast<uint64_t>(s.kind));
    }
};
