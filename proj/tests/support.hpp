#pragma once

#include <optional>
#include <string_view>

#include <doctest.h>

#include "readcode/error.hpp"
#include "readcode/word.hpp"

namespace readcode::test {

inline Word W(std::string_view text, unsigned q = 2) { return parse_word(text, q); }

template <class F>
std::optional<ErrorCode> error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

} // namespace readcode::test

#define CHECK_ERROR(expr, code) CHECK(::readcode::test::error_of([&] { (void)(expr); }) == (code))
