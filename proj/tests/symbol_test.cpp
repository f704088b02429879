#include "doctest.h"

#include <set>

#include "la1/symbol.hpp"

using namespace la1;

TEST_CASE("symbol factories and rendering") {
    CHECK(TapeSymbol::input("a").text() == "a");
    CHECK(TapeSymbol::marked("a").text() == "a'");
    CHECK(TapeSymbol::work("blank").text() == "blank");
    CHECK(TapeSymbol::left_end().text() == "|-");
    CHECK(TapeSymbol::right_end().text() == "-|");
}

TEST_CASE("end-marker predicate") {
    CHECK(TapeSymbol::left_end().is_end_marker());
    CHECK(TapeSymbol::right_end().is_end_marker());
    CHECK_FALSE(TapeSymbol::input("a").is_end_marker());
    CHECK_FALSE(TapeSymbol::marked("a").is_end_marker());
    CHECK_FALSE(TapeSymbol::work("x").is_end_marker());
}

TEST_CASE("identity distinguishes kind and letter") {
    CHECK(TapeSymbol::input("a") == TapeSymbol::input("a"));
    CHECK(TapeSymbol::input("a") != TapeSymbol::marked("a"));
    CHECK(TapeSymbol::input("a") != TapeSymbol::work("a"));
    CHECK(TapeSymbol::input("a") != TapeSymbol::input("b"));

    std::set<TapeSymbol> all = {TapeSymbol::input("a"), TapeSymbol::marked("a"),
                                TapeSymbol::work("a"),  TapeSymbol::input("b"),
                                TapeSymbol::left_end(), TapeSymbol::right_end()};
    CHECK(all.size() == 6);
}

TEST_CASE("ordering is total and kind-major") {
    TapeSymbol a = TapeSymbol::input("a");
    TapeSymbol b = TapeSymbol::input("b");
    TapeSymbol am = TapeSymbol::marked("a");
    CHECK(a < b);
    CHECK((a < am || am < a));
    CHECK_FALSE(a < a);
}

TEST_CASE("hash separates the common symbols") {
    std::hash<TapeSymbol> h;
    CHECK(h(TapeSymbol::input("a")) != h(TapeSymbol::input("b")));
    CHECK(h(TapeSymbol::input("a")) != h(TapeSymbol::marked("a")));
}

TEST_CASE("identifier letters") {
    CHECK(is_identifier("a"));
    CHECK(is_identifier("q10"));
    CHECK(is_identifier("left_end"));
    CHECK_FALSE(is_identifier(""));
    CHECK_FALSE(is_identifier("a'"));
    CHECK_FALSE(is_identifier("a b"));
    CHECK_FALSE(is_identifier("-|"));
}
