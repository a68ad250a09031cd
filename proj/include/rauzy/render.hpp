#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "rauzy/kernels.hpp"
#include "rauzy/parametrization.hpp"

namespace rauzy {

/// Admissible length-n walks of G+ in lexicographic order, one at a time.
class LexWalks {
public:
    LexWalks(const OrderedGraph& g, int n);

    /// Advances to the next walk; false when exhausted.
    bool next();
    int start() const { return start_; }
    const std::vector<int>& orders() const { return orders_; }
    /// states()[k] is the state after k steps (states()[0] == start()).
    const std::vector<int>& states() const { return states_; }
    /// First index k at which the current walk differs from the previous one.
    int changed_from() const { return changed_; }

private:
    const OrderedGraph& g_;
    int n_;
    int start_ = -1;
    std::vector<int> orders_;
    std::vector<int> states_;
    int changed_ = 0;
};

/// Number of admissible length-n walks.
std::uint64_t walk_count(const OrderedGraph& g, int n);

/// Polygon through psi(P(w & 1-bar)) over all length-n walks w in lexicographic order.
kernels::Polyline approximation(const Embedding& emb, const OrderedGraph& g, int n);

/// Exact addresses phi(w & 1-bar) of the vertices, in the same order.
std::vector<QElem> approximation_addresses(const Numeration& num, int n);

/// Every address of the n-th approximation occurs among those of the (n+1)-th, compared exactly.
/// Streams both walk sequences; nothing is stored.
bool addresses_nested(const Numeration& num, int n);

/// Symmetric sampled Hausdorff distance; segments are sampled with spacing rel_step times the
/// largest vertex-to-polyline distance.
double hausdorff_distance(const kernels::Polyline& p, const kernels::Polyline& q, double rel_step = 0.01);

struct RenderOptions {
    int width = 800;
    int height = 800;
    double stroke = 1.0;
    std::array<std::string, 3> colors{"#d62728", "#2ca02c", "#1f77b4"};
    double margin = 0.05;
    enum class Format { Svg, Csv } format = Format::Svg;
};

/// SVG polyline of the n-th approximation, or CSV rows "t_coeffs;x;y".
void render_boundary(const Embedding& emb, const Numeration& num, int n, const RenderOptions& opt, std::ostream& out);

/// Point cloud of the subtiles at a given depth, colored per letter (SVG) or rows "letter;x;y" (CSV).
void render_tiles(const Embedding& emb, int depth, const RenderOptions& opt, std::ostream& out);

/// Largest tile depth whose point count stays below the memory cap.
int max_tile_depth(const Params& p);

} // namespace rauzy
