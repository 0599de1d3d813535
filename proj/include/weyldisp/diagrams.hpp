#pragma once

#include <string>
#include <vector>

#include "weyldisp/coxeter.hpp"

namespace weyldisp {

class TwistedClass;

// Admissible diagram (Pi, J, sigma): J the encircled node set (0-based),
// sigma-stable. For a bi-capped class Cl^sigma(w_K) the fixed diagram
// encircles S minus K.
struct AdmissibleDiagram {
    const CoxeterSystem* sys{nullptr};
    std::vector<int> encircled;  // sorted, 0-based
    DiagramAutomorphism sigma;
};

// Symbol grammar: optional twist prefix "2"/"3" (omitted for family D),
// family, rank, ';', encircled-orbit count, optional prime marker 'p',
// optional '^j' disambiguator, optional '(m)' for I2. The two trivial classes
// render as "Cl(1)" and "Cl^s0(w0)".
std::string symbol_of(const AdmissibleDiagram& d);
AdmissibleDiagram parse_symbol(const CoxeterSystem& sys, const std::string& symbol);

struct RelativeType {
    std::vector<std::vector<int>> matrix;  // Coxeter matrix on the orbit generators
    std::string name;
    int rank{0};
};

// Relative Coxeter system of the Tits index: generators r_K = w_Theta
// w_{Theta u K} over the distinguished orbits K of the encircled set,
// Theta the non-encircled nodes. Orders found by explicit powering.
RelativeType relative_type(const AdmissibleDiagram& d);

// The formula r_K = w_Theta w_K instead; kept for reference, fails with
// NotCoxeterSystem whenever an orbit does not commute with Theta
// (e.g. the E7;4 diagram).
RelativeType relative_type_literal(const AdmissibleDiagram& d);

// Type name of an abstract Coxeter matrix ("F4", "B3", "A1xA1", "I2(8)",
// "X0" for the empty matrix). Throws NotCoxeterSystem for invalid or
// non-finite matrices.
std::string type_name(const std::vector<std::vector<int>>& coxeter_matrix);

// Duality on bi-capped diagrams via the class-level psi. Throws NotBicapped.
AdmissibleDiagram psi_diagram(const AdmissibleDiagram& d);

// Fixed and opposition diagrams of a bi-capped involution class; asserts
// Opp = psi(Fix).
std::pair<AdmissibleDiagram, AdmissibleDiagram> diagrams_of_class(const TwistedClass& c);

}  // namespace weyldisp
