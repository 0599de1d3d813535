#include "weyldisp/types.hpp"

#include <cctype>

#include "weyldisp/errors.hpp"

namespace weyldisp {

std::string TypeSpec::name() const {
    switch (family) {
        case Family::A: return "A" + std::to_string(rank);
        case Family::B: return "B" + std::to_string(rank);
        case Family::D: return "D" + std::to_string(rank);
        case Family::E: return "E" + std::to_string(rank);
        case Family::F: return "F4";
        case Family::H: return "H" + std::to_string(rank);
        case Family::I2: return "I2(" + std::to_string(m) + ")";
    }
    return "?";
}

bool TypeSpec::crystallographic() const {
    switch (family) {
        case Family::H: return false;
        case Family::I2: return m == 3 || m == 4 || m == 6;
        default: return true;
    }
}

TypeSpec parse_type(const std::string& s) {
    if (s.empty()) throw InvalidType(s);
    if (s == "G2") return TypeSpec{Family::I2, 2, 6};
    auto num = [&](std::size_t pos) -> int {
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return -1;
        int v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return v;
    };
    char f = s[0];
    if (f == 'I') {
        // "I2(m)"
        if (s.size() < 5 || s[1] != '2' || s[2] != '(' || s.back() != ')') throw InvalidType(s);
        int m = 0;
        for (std::size_t i = 3; i + 1 < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw InvalidType(s);
            m = m * 10 + (s[i] - '0');
        }
        if (m < 3 || m > 2000) throw InvalidType(s);
        return TypeSpec{Family::I2, 2, m};
    }
    int r = num(1);
    if (r < 0 || s != std::string(1, f) + std::to_string(r)) throw InvalidType(s);
    switch (f) {
        case 'A':
            if (r < 1 || r > 12) throw InvalidType(s);
            return TypeSpec{Family::A, r};
        case 'B':
        case 'C':
            if (r < 2 || r > 12) throw InvalidType(s);
            if (r == 2) return TypeSpec{Family::I2, 2, 4};
            return TypeSpec{Family::B, r};
        case 'D':
            if (r < 4 || r > 12) throw InvalidType(s);
            return TypeSpec{Family::D, r};
        case 'E':
            if (r < 6 || r > 8) throw InvalidType(s);
            return TypeSpec{Family::E, r};
        case 'F':
            if (r != 4) throw InvalidType(s);
            return TypeSpec{Family::F, 4};
        case 'H':
            if (r != 3 && r != 4) throw InvalidType(s);
            return TypeSpec{Family::H, r};
        default: throw InvalidType(s);
    }
}

std::uint64_t positive_root_count(const TypeSpec& t) {
    const std::uint64_t n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return t.rank == 6 ? 36 : t.rank == 7 ? 63 : 120;
        case Family::F: return 24;
        case Family::H: return t.rank == 3 ? 15 : 60;
        case Family::I2: return t.m;
    }
    return 0;
}

std::uint64_t group_order(const TypeSpec& t) {
    auto fact = [](std::uint64_t k) {
        std::uint64_t v = 1;
        for (std::uint64_t i = 2; i <= k; ++i) v *= i;
        return v;
    };
    const std::uint64_t n = t.rank;
    switch (t.family) {
        case Family::A: return fact(n + 1);
        case Family::B: return (1ULL << n) * fact(n);
        case Family::D: return (1ULL << (n - 1)) * fact(n);
        case Family::E: return t.rank == 6 ? 51840ULL : t.rank == 7 ? 2903040ULL : 696729600ULL;
        case Family::F: return 1152;
        case Family::H: return t.rank == 3 ? 120 : 14400;
        case Family::I2: return 2ULL * t.m;
    }
    return 0;
}

std::vector<int> degrees(const TypeSpec& t) {
    const int n = t.rank;
    std::vector<int> d;
    switch (t.family) {
        case Family::A:
            for (int i = 2; i <= n + 1; ++i) d.push_back(i);
            break;
        case Family::B:
            for (int i = 1; i <= n; ++i) d.push_back(2 * i);
            break;
        case Family::D:
            for (int i = 1; i < n; ++i) d.push_back(2 * i);
            d.push_back(n);
            break;
        case Family::E:
            if (n == 6) d = {2, 5, 6, 8, 9, 12};
            else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
            else d = {2, 8, 12, 14, 18, 20, 24, 30};
            break;
        case Family::F: d = {2, 6, 8, 12}; break;
        case Family::H: d = t.rank == 3 ? std::vector<int>{2, 6, 10} : std::vector<int>{2, 12, 20, 30}; break;
        case Family::I2: d = {2, t.m}; break;
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<std::vector<int>> coxeter_matrix(const TypeSpec& t) {
    const int n = t.rank;
    std::vector<std::vector<int>> M(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) M[i][i] = 1;
    auto bond = [&](int i, int j, int m) { M[i][j] = M[j][i] = m; };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, 3);
            break;
        case Family::B:
            for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, 3);
            bond(n - 2, n - 1, 4);
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, 3);
            bond(n - 3, n - 1, 3);
            break;
        case Family::E:
            bond(0, 2, 3);
            bond(2, 3, 3);
            bond(3, 4, 3);
            bond(4, 5, 3);
            if (n >= 7) bond(5, 6, 3);
            if (n == 8) bond(6, 7, 3);
            bond(1, 3, 3);
            break;
        case Family::F:
            bond(0, 1, 3);
            bond(1, 2, 4);
            bond(2, 3, 3);
            break;
        case Family::H:
            bond(0, 1, 5);
            bond(1, 2, 3);
            if (n == 4) bond(2, 3, 3);
            break;
        case Family::I2:
            bond(0, 1, t.m);
            break;
    }
    return M;
}

}  // namespace weyldisp
