#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rauzy/parametrization.hpp"

namespace rauzy {

/// 2b - a <= 3
bool criterion(const Params& p);

enum class ProductKind { Psi, Sl, Phi };

/// Phase of a state of the trivial-identification automaton.
enum class PhiPhase { None, Equal, LeftLow, RightLow };

struct ProductState {
    int left;
    int right;
    bool diverged;
    PhiPhase phase = PhiPhase::None;

    bool operator==(const ProductState&) const = default;
};

/// Edge labelled (p || o | p' || o').
struct ProductEdge {
    int from;
    int to;
    int p;
    int pp;
    int o;
    int oo;
};

struct ProductAutomaton {
    ProductKind kind = ProductKind::Psi;
    std::vector<ProductState> states;
    std::vector<ProductEdge> edges;
    std::vector<int> starts;

    int find(const ProductState& s) const;
    int add(const ProductState& s);
    std::string state_name(const OrderedGraph& g, int k) const;
};

/// Psi: pairs of G+ walks sharing the right-hand digits; Sl: pairs sharing the left digits;
/// Phi: pairs identified by the numeration.
ProductAutomaton build_product(const Embedding& emb, const OrderedGraph& g, ProductKind kind);

/// States and edges lying on an infinite walk from a start state through a diverged state.
ProductAutomaton prune_admissible(const ProductAutomaton& a);

struct PatternResult {
    bool ok = true;
    std::string reason;
    std::optional<Walk> left;   // offending pair, as walks from the start states
    std::optional<Walk> right;
};

/// Every admissible walk of the pruned automaton is a pair identified by the numeration.
PatternResult pattern_check(const OrderedGraph& g, const ProductAutomaton& pruned, const ProductAutomaton& phi);

struct Witness {
    Walk left;
    Walk right;
    long double t = 0;
    long double t_prime = 0;
    DigitSeq digits;
    long double psi_distance = 0;
    bool digits_equal = false;
    bool addresses_distinct = false;  // decided exactly in Q(lambda)
};

/// Explicit pair of admissible walks with equal digit sequences and distinct addresses.
/// Throws UsageError when 2b - a <= 3.
Witness find_witness(const Embedding& emb, const OrderedGraph& g, const Numeration& num);

struct DiskEvidence {
    bool result = false;
    bool verified = false;
    bool graph_equal = false;
    std::optional<PatternResult> psi;
    std::optional<PatternResult> sl;
    int psi_states = 0;
    int sl_states = 0;
    std::optional<Witness> witness;
};

enum class DiskMode { Fast, Verified };

/// Fast mode returns the criterion; verified mode also establishes it independently and throws
/// VerificationError when the two disagree.
DiskEvidence is_disklike(const Params& p, DiskMode mode);

} // namespace rauzy
