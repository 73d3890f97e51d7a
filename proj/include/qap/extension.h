#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qap/subalgebra.h"
#include "qap/transform.h"

namespace qap {

constexpr int kMaxEnumerateBits = 5;

/// Every Cartan subalgebra of su(2^p), grouped by kind.
struct CartanAtlas {
    int p = 0;
    std::vector<std::vector<CartanSubalgebra>> by_kind;  // sorted by base set within a kind

    size_t size() const;
    /// Kind-major flat listing.
    std::vector<CartanSubalgebra> members() const;
    bool contains(const CartanSubalgebra &c) const;
};

/// B u W for every phase-type B and both halves of its pair, before dedup.
std::vector<CartanSubalgebra> extend_shell(const CartanSubalgebra &c);
/// Breadth-first by shells with canonical dedup. Throws ResourceError for p > 5.
CartanAtlas enumerate_all(int p);

/// N_k(2^p) from the closed form; total is the product of (2^i + 1).
uint64_t closed_form_count(int p, int k);
uint64_t closed_form_total(int p);

struct ParityStrings {
    std::string se;  // eps_11 ... eps_kk
    std::string mu;  // eps_12, eps_13, ..., eps_{k-1,k}
};

/// Parities on the canonical generators. For kind p these sit on the
/// ascending unit basis 0..01, 0..010, ...
ParityStrings parity_strings(const CartanSubalgebra &c);
/// Requires kind p.
ParityStrings mutual_parity(const CartanSubalgebra &c);

struct Lift {
    SymbolicCircuit circuit;
    CartanSubalgebra lifted;
};

/// Local rotations raising c to kind p. Identity circuit when already kind p.
Lift local_lift(const CartanSubalgebra &c);
/// Single-bit diagonal factors zeroing the self parities of a kind-p c.
SymbolicCircuit self_parity_normalizer(const CartanSubalgebra &c);
/// Kind-p subalgebra with zero self parities and the given mutual parities.
CartanSubalgebra class_representative(int p, const std::string &mu);
/// Local circuit taking c onto its class representative.
Lift local_class_circuit(const CartanSubalgebra &c);

/// mu string -> flat member indices (CartanAtlas::members order).
using ClassIndex = std::map<std::string, std::vector<size_t>>;
ClassIndex classify_local(const CartanAtlas &atlas);

struct Connector {
    SymbolicCircuit circuit;
    CartanSubalgebra target;
};

/// Diagonal one- and two-bit factors mapping kind-p c1 onto c2.
Connector nonlocal_connector(const CartanSubalgebra &c1, const CartanSubalgebra &c2);

}  // namespace qap
