#pragma once

#include <array>
#include <memory>
#include <vector>

#include "rauzy/embedding.hpp"

namespace rauzy::kernels {

/// Lattice point passing the numeric filters of the candidate enumeration.
struct ScanHit {
    LatticeVec x;
    bool flagged;  // ||x|| in (B, B (1 + tol)]

    bool operator==(const ScanHit&) const = default;
};

/// Scans x in [-R, R]^3 (per coordinate) and keeps |<x,v_beta>| < beta (1 + tol) and
/// ||x|| <= B (1 + tol). Result sorted lexicographically.
std::vector<ScanHit> scan_box_serial(const Embedding& emb, const std::array<std::int64_t, 3>& half);
std::vector<ScanHit> scan_box_omp(const Embedding& emb, const std::array<std::int64_t, 3>& half);

struct Pt {
    double x = 0;
    double y = 0;
};

/// Polyline given by its vertices; `closed` joins the last vertex to the first.
struct Polyline {
    std::vector<Pt> pts;
    bool closed = true;
};

std::size_t segment_total(const Polyline& l);

/// Nearest-segment index over a polyline (uniform grid in compressed rows). Keeps a reference
/// to the polyline.
class SegmentIndex {
public:
    explicit SegmentIndex(const Polyline& to);
    ~SegmentIndex();
    SegmentIndex(SegmentIndex&&) noexcept;
    SegmentIndex& operator=(SegmentIndex&&) noexcept;

    const Polyline& line() const;
    /// Distance from (x, y) to the polyline; `hint` is a segment used as first candidate and
    /// receives the nearest segment (-1 when the polyline has no segment).
    double distance(double x, double y, long& hint) const;
    double segment_distance(std::size_t s, double x, double y) const;

private:
    struct Grid;
    std::unique_ptr<Grid> grid_;
};

/// Distance from every vertex of `from` to the polyline `to`.
std::vector<double> vertex_distances_serial(const Polyline& from, const SegmentIndex& to);
std::vector<double> vertex_distances_omp(const Polyline& from, const SegmentIndex& to);
std::vector<double> vertex_distances_serial(const Polyline& from, const Polyline& to);
std::vector<double> vertex_distances_omp(const Polyline& from, const Polyline& to);

/// sup over points of `from` of the distance to `to`, sampled at the dyadic subdivision of each
/// segment into pieces no longer than step. Pieces whose bound cannot raise the maximum are not
/// sampled; the result equals the fully sampled value. `vertex_dist` optionally supplies the
/// vertex distances. With a positive `floor` the result is max(floor, value), and pieces that
/// cannot exceed the floor are skipped.
double directed_hausdorff_serial(const Polyline& from, const SegmentIndex& to, double step,
                                 const std::vector<double>* vertex_dist = nullptr, double floor = 0);
double directed_hausdorff_omp(const Polyline& from, const SegmentIndex& to, double step,
                              const std::vector<double>* vertex_dist = nullptr, double floor = 0);
double directed_hausdorff_serial(const Polyline& from, const Polyline& to, double step,
                                 const std::vector<double>* vertex_dist = nullptr, double floor = 0);
double directed_hausdorff_omp(const Polyline& from, const Polyline& to, double step,
                              const std::vector<double>* vertex_dist = nullptr, double floor = 0);

/// Tile points for every letter in parallel over first-level branches.
std::vector<PlanePoint> tile_points_omp(const Embedding& emb, Letter i, int n);

} // namespace rauzy::kernels
