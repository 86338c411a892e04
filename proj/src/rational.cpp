#include "hyperclass/rational.hpp"

#include <numeric>

namespace hyperclass {

Big rat_floor(const Rat& q) {
    Big num = numerator(q);
    Big den = denominator(q);
    Big quot = num / den; // truncates toward zero
    if (num < 0 && quot * den != num) quot -= 1;
    return quot;
}

Big rat_ceil(const Rat& q) { return -rat_floor(-q); }

Rat frac(const Rat& q) { return q - Rat(rat_floor(q)); }

bool is_integer(const Rat& q) { return denominator(q) == 1; }

namespace {
long long big_to_ll(const Big& b) {
    if (b > Big(std::numeric_limits<long long>::max()) ||
        b < Big(std::numeric_limits<long long>::min()))
        throw InputError("integer out of 64-bit range: " + b.str());
    return static_cast<long long>(b);
}
} // namespace

long long rat_floor_ll(const Rat& q) { return big_to_ll(rat_floor(q)); }
long long rat_ceil_ll(const Rat& q) { return big_to_ll(rat_ceil(q)); }

Rat parse_rational(std::string_view text) {
    auto fail = [&] { throw InputError("malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Big(s));
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty() || den.find('/') != std::string::npos) fail();
        Big d(den);
        if (d <= 0) fail();
        return Rat(Big(num), d);
    } catch (const std::runtime_error&) {
        fail();
    }
    return Rat(); // unreachable
}

std::string rat_to_string(const Rat& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

long long common_denominator(const std::vector<Rat>& tuple) {
    Big l = 1;
    for (const Rat& q : tuple) l = lcm(l, denominator(q));
    return big_to_ll(l);
}

std::vector<Rat> frac_tuple(const std::vector<Rat>& tuple) {
    std::vector<Rat> out;
    out.reserve(tuple.size());
    for (const Rat& q : tuple) out.push_back(frac(q));
    return out;
}

long long gcd_ll(long long a, long long b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

bool frac_order_less(const Rat& x, const Rat& y) {
    if (denominator(x) != denominator(y)) return denominator(x) < denominator(y);
    return numerator(x) < numerator(y);
}

bool tuple_frac_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        if (a[i] != b[i]) return frac_order_less(a[i], b[i]);
    return a.size() < b.size();
}

} // namespace hyperclass
