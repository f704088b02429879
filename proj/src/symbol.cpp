#include "la1/symbol.hpp"

#include <cctype>

namespace la1 {

std::string TapeSymbol::text() const {
    switch (kind) {
    case SymbolKind::LeftEnd: return "|-";
    case SymbolKind::RightEnd: return "-|";
    case SymbolKind::Marked: return letter + "'";
    default: return letter;
    }
}

bool operator<(const TapeSymbol& a, const TapeSymbol& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.letter < b.letter;
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

uint64_t fnv1a64(const void* data, size_t len, uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    uint64_t h = seed;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace la1
