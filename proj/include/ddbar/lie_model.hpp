#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddbar/bicomplex.hpp"
#include "ddbar/exterior.hpp"

namespace ddbar {

/// One term of d phi^i: phi^j ^ phi^k (j < k), phi^j ^ phibar^k, or
/// phibar^j ^ phibar^k (j < k). The last kind violates the integrability of
/// the complex structure; it parses, and validate_model rejects it.
struct StructureTerm {
    enum class Kind { phi_phi, phi_phibar, phibar_phibar };
    Kind kind = Kind::phi_phi;
    int j = 1;
    int k = 1;
    GaussianRational coeff;
};

/// Complex structure equations of an n-dimensional invariant model.
struct StructureEquations {
    std::string name;
    int n = 0;
    std::vector<std::vector<StructureTerm>> dphi;  // dphi[i-1] = terms of d phi^i
};

/// The compiled bigraded exterior algebra: V^{p,q} has the monomial basis
/// phi^I ^ phibar^J, |I| = p, |J| = q, ordered lexicographically on (I, J).
struct ExteriorModel {
    int n = 0;
    std::string name;
    Bicomplex complex;  // with conjugation and the n tag attached

    /// Basis of V^{p,q} as (I mask, J mask) pairs, in column order.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> basis(int p, int q) const;
    int basis_index(int p, int q, std::uint32_t I, std::uint32_t J) const;
    /// Reporting label, e.g. "phi13^phibar2".
    std::string label(int p, int q, int index) const;
};

/// d^2 = 0 failures on the generators (empty iff the Leibniz extension is a
/// differential; integrability is enforced by the term kinds).
std::vector<std::string> validate_model(const StructureEquations& s);

/// Compile valid structure equations into the full bigraded complex.
/// Throws ModelError when validate_model reports violations.
ExteriorModel compile(const StructureEquations& s);

/// Named models: "iwasawa" and "torus<k>" for 1 <= k <= 6.
StructureEquations builtin(const std::string& name);

/// Names accepted by builtin, for --list output.
std::vector<std::string> builtin_names();

}  // namespace ddbar
