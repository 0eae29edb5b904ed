#pragma once

#include "g1surf/errors.hpp"

#include <string>
#include <utility>

namespace testutil {

// Runs f and reports the g1::Error code it threw ("" if it did not throw).
template <class F>
std::string error_code_of(F&& f) {
    try {
        std::forward<F>(f)();
    } catch (const g1::Error& e) {
        return e.code();
    } catch (...) {
        return "<non-library exception>";
    }
    return "";
}

} // namespace testutil
