#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "rauzy/boundary_graph.hpp"
#include "rauzy/contact_graph.hpp"

namespace rauzy {

/// Order token standing for the largest order at the current state.
constexpr int kMaxOrder = -1;

/// Eventually periodic walk in G+: start state index, then order tokens, then a nonempty
/// period repeated forever. Tokens are orders >= 1 or kMaxOrder.
struct Walk {
    int start = 0;
    std::vector<int> orders;
    std::vector<int> period{1};

    bool operator==(const Walk&) const = default;
};

/// Walk as a lasso of G+ edge indices; the cycle closes at its first state.
struct Lasso {
    int start = 0;
    std::vector<int> pre;
    std::vector<int> cycle;
};

/// Resolves tokens and folds the walk into a joint (state, phase) lasso.
/// Throws UsageError for an order that does not exist at its state.
Lasso normalize(const OrderedGraph& g, const Walk& w);

/// Concrete order sequence of the first n steps.
std::vector<int> expand_orders(const OrderedGraph& g, const Walk& w, int n);

/// Left (p) and right (p') digit sequences of P(w).
DigitSeq left_digits(const OrderedGraph& g, const Lasso& l);
DigitSeq right_digits(const OrderedGraph& g, const Lasso& l);
/// State visited after k steps.
int state_at(const OrderedGraph& g, const Lasso& l, std::size_t k);

/// Strict lexicographic comparison (start, then orders); returns -1, 0 or 1.
int compare_lex(const OrderedGraph& g, const Walk& x, const Walk& y);

/// Walk in G obtained by dropping orders: states and (p|p') labels.
struct ProjectedWalk {
    std::vector<int> states;  // states of the preperiod and the first cycle pass
    DigitSeq left;
    DigitSeq right;
};
ProjectedWalk project_P(const OrderedGraph& g, const Walk& w);

/// Dumont-Thomas numeration on G+ with weights u normalized over the starting states.
class Numeration {
public:
    Numeration(const OrderedGraph& g, const PerronData& d, int mp_bits = 320);

    const OrderedGraph& graph() const { return g_; }
    const NumberField& field() const { return K_; }
    long double lambda() const { return lambda_; }
    /// Interval length u(S) of a state.
    long double weight(int s) const { return w_[s]; }
    long double min_weight() const;
    /// Left end of the starting state's interval.
    long double offset(int s) const { return off_[s]; }
    /// Sum of the weights of the targets of orders < o.
    long double phi0(int s, int o) const { return phi0_[s][o - 1]; }

    long double phi(const Walk& w) const;
    mpf_class phi_mp(const Walk& w) const;
    QElem phi_exact(const Walk& w) const;
    const std::vector<QElem>& exact_weights() const { return wq_; }
    const QElem& offset_exact(int s) const { return offq_[s]; }
    const QElem& phi0_exact(int s, int o) const { return phi0q_[s][o - 1]; }

    /// Lex-largest preimage truncated to n orders; the tail is 1-bar or omax-bar.
    Walk phi_inverse(const mpf_class& t, int n) const;
    Walk phi_inverse(long double t, int n) const;

private:
    const OrderedGraph& g_;
    NumberField K_;
    long double lambda_;
    std::vector<long double> w_, off_;
    std::vector<std::vector<long double>> phi0_;
    std::vector<QElem> wq_, offq_;
    std::vector<std::vector<QElem>> phi0q_;
    int bits_;
    mpf_class lambda_mp_;
    std::vector<mpf_class> w_mp_, off_mp_;
    std::vector<std::vector<mpf_class>> phi0_mp_;
};

/// Eigen-coordinates of sum_k h^k pi l(p_k) over the left digits.
EigenCoords psi(const Embedding& emb, const DigitSeq& digits);
EigenCoords psi(const Embedding& emb, const OrderedGraph& g, const Walk& w);

struct BoundaryPoint {
    PlanePoint point;
    EigenCoords coords;
    Walk walk;
};

/// psi(P(phi_inverse(t, depth))).
BoundaryPoint boundary_point(const Embedding& emb, const Numeration& num, long double t, int depth = 64);
BoundaryPoint boundary_point(const Embedding& emb, const Numeration& num, const mpf_class& t, int depth = 64);

/// One identification pair with its psi distance.
struct IdentPair {
    std::string kind;  // "cond1", "cond2", "cond3"
    std::string label;
    Walk left;
    Walk right;
    long double distance = 0;
    std::optional<bool> certified;  // boundary-graph walk certificate, if requested
};

/// All pairs (S;omax-bar)~(S+1;1-bar), (S_max;omax-bar)~(1;1-bar), (S;o+1,1-bar)~(S;o,omax-bar).
std::vector<IdentPair> identification_pairs(const OrderedGraph& g);

/// Fills the distances; with a graph, also certifies each pair by a walk in it.
void check_identification(const Embedding& emb, const OrderedGraph& g, std::vector<IdentPair>& pairs,
                          const BoundaryGraph* certify_in = nullptr);

/// Certificate that both walks have equal psi: a walk in `graph` with the two left digit
/// sequences as labels.
bool certify_equal(const Embedding& emb, const OrderedGraph& g, const BoundaryGraph& graph, const Walk& x,
                   const Walk& y);

/// -log|alpha| / log lambda
long double holder_exponent(const Embedding& emb, long double lambda);
/// 2 log lambda / log beta for a complex pair; empty otherwise.
std::optional<long double> hausdorff_dimension(const Embedding& emb, long double lambda);
/// Constant K with |C(t) - C(t')| <= K |t - t'|^s, from cylinder diameters.
long double holder_constant_bound(const Embedding& emb, const Numeration& num);

std::string walk_to_string(const OrderedGraph& g, const Walk& w);

} // namespace rauzy
