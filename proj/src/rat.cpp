#include "g1surf/rat.hpp"

#include "g1surf/errors.hpp"

namespace g1 {

Rat parse_rat(const std::string& s) {
    if (s.empty()) fail("ParseError", "empty rational literal");
    auto is_int = [](const std::string& t) {
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!is_int(num) || !is_int(den) || den[0] == '-')
        fail("ParseError", "bad rational literal '" + s + "'");
    Rat x;
    if (x.set_str(num + "/" + den, 10) != 0)
        fail("ParseError", "bad rational literal '" + s + "'");
    if (x.get_den() == 0) fail("ParseError", "zero denominator in '" + s + "'");
    x.canonicalize();
    return x;
}

std::string rat_str(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::vector<Rat> parse_rat_list(const std::vector<std::string>& items) {
    std::vector<Rat> out;
    out.reserve(items.size());
    for (const auto& s : items) out.push_back(parse_rat(s));
    return out;
}

std::vector<std::string> rat_str_list(const std::vector<Rat>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(rat_str(x));
    return out;
}

} // namespace g1
