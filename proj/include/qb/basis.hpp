#pragma once

#include <string>

#include "qb/errors.hpp"

namespace qb {

/// How the N-qubit holder is represented.
enum class QubitRep {
    Full,  ///< full tensor product, dimension 2^N
    Dicke, ///< permutation-symmetric sector |j=N/2, m>, dimension N+1
};

/// Hilbert-space layout of the composite charger (x) holder system.
///
/// Composite ordering is charger first, then the qubits; a basis index i
/// decomposes as i = n * holder_dim + h with photon number n and holder
/// index h.  In the Dicke representation h is the excitation count; in the
/// full representation h encodes qubit_1..qubit_N with |e> = 0, |g> = 1
/// and qubit_1 as the most significant bit.
struct BasisSpec {
    int n_qubits = 1;
    QubitRep qubit_rep = QubitRep::Dicke;
    int cavity_cutoff = 2; ///< retained Fock levels 0..cavity_cutoff-1

    BasisSpec() = default;
    BasisSpec(int n, QubitRep rep, int cutoff)
        : n_qubits(n), qubit_rep(rep), cavity_cutoff(cutoff) {
        if (n_qubits < 1)
            throw DimensionMismatch("BasisSpec: n_qubits must be >= 1");
        if (cavity_cutoff < 2)
            throw DimensionMismatch("BasisSpec: cavity cutoff must be >= 2");
        if (rep == QubitRep::Full && n_qubits > 16)
            throw DimensionMismatch("BasisSpec: full representation limited to 16 qubits");
    }

    static BasisSpec full(int n, int cutoff) { return {n, QubitRep::Full, cutoff}; }
    static BasisSpec dicke(int n, int cutoff) { return {n, QubitRep::Dicke, cutoff}; }

    int holder_dim() const {
        return qubit_rep == QubitRep::Full ? (1 << n_qubits) : n_qubits + 1;
    }
    int dim() const { return cavity_cutoff * holder_dim(); }

    /// Photon number of composite basis index i.
    int photon_of(int i) const { return i / holder_dim(); }
    /// Holder sub-index of composite basis index i.
    int holder_of(int i) const { return i % holder_dim(); }

    /// Number of excited qubits encoded by holder index h.
    int excitation_of_holder(int h) const {
        if (qubit_rep == QubitRep::Dicke) return h;
        int ground_bits = 0;
        for (int q = 0; q < n_qubits; ++q) ground_bits += (h >> q) & 1;
        return n_qubits - ground_bits;
    }

    /// Holder index of the all-ground state.
    int ground_holder_index() const {
        return qubit_rep == QubitRep::Dicke ? 0 : (1 << n_qubits) - 1;
    }

    bool operator==(const BasisSpec&) const = default;

    std::string describe() const {
        return (qubit_rep == QubitRep::Full ? "full" : "dicke") + std::string("(N=") +
               std::to_string(n_qubits) + ", d_c=" + std::to_string(cavity_cutoff) + ")";
    }
};

} // namespace qb
