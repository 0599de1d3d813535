#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weyldisp {

enum class Family { A, B, D, E, F, H, I2 };

// Finite type descriptor. rank is the number of nodes; I2(m) stores the bond
// label m as well. Bourbaki node labelling throughout (1-based in all I/O).
struct TypeSpec {
    Family family{Family::A};
    int rank{1};
    int m{0};  // I2 only

    std::string name() const;
    bool crystallographic() const;

    friend bool operator==(const TypeSpec&, const TypeSpec&) = default;
};

// Parses "A3", "B4", "D5", "E7", "F4", "H3", "I2(8)"; "G2" is accepted as an
// alias for I2(6). Throws InvalidType.
TypeSpec parse_type(const std::string& s);

// |Phi^+| and |W| for the finite types.
std::uint64_t positive_root_count(const TypeSpec&);
std::uint64_t group_order(const TypeSpec&);

// Degrees d_1 <= ... <= d_n of the fundamental invariants.
std::vector<int> degrees(const TypeSpec&);

// Coxeter matrix m(s,t), 0-based, m(s,s) = 1.
std::vector<std::vector<int>> coxeter_matrix(const TypeSpec&);

}  // namespace weyldisp
