#pragma once

#include "cfree/partitions.hpp"

#include <string>
#include <vector>

namespace cfree {

/// Rooted ordered tree. Vertices are identified with their left-depth-first
/// numbers 1..n when a numbering is needed.
struct PlanarTree {
    std::vector<PlanarTree> children;

    int size() const;
    /// Child counts in left-depth-first order; canonical key for ordering and
    /// equality.
    std::vector<int> ldf_key() const;

    friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.ldf_key() == b.ldf_key(); }
    friend bool operator!=(const PlanarTree& a, const PlanarTree& b) { return !(a == b); }
    friend bool operator<(const PlanarTree& a, const PlanarTree& b) { return a.ldf_key() < b.ldf_key(); }
};

/// Planar tree with a 0/1 color on every edge; within each elementary tree
/// the color-1 offsprings precede the color-0 offsprings.
struct BicolorTree {
    std::vector<BicolorTree> children;
    std::vector<int> colors;  // aligned with children, values 0 or 1

    int size() const;
    PlanarTree shape() const;
    std::pair<std::vector<int>, std::vector<int>> key() const;  // (ldf key, colors in LDF edge order)
    bool colors_valid() const;

    friend bool operator==(const BicolorTree& a, const BicolorTree& b) { return a.key() == b.key(); }
    friend bool operator!=(const BicolorTree& a, const BicolorTree& b) { return !(a == b); }
    friend bool operator<(const BicolorTree& a, const BicolorTree& b) { return a.key() < b.key(); }
};

/// All planar trees with n vertices, ordered by LDF child-count key.
std::vector<PlanarTree> enumerate_trees(int n, int n_max = kDefaultNMax);

/// All bicolor planar trees with n vertices.
std::vector<BicolorTree> enumerate_bicolor(int n, int n_max = kDefaultNMax);

/// Elementary bicolor trees with n vertices (one internal vertex; k color-1
/// branches then n-1-k color-0 branches, k = n-1..0).
std::vector<BicolorTree> enumerate_elementary_bicolor(int n, int n_max = kDefaultNMax);

/// Theta: connected NCL partitions (c(pi) = 1_n) -> planar trees. The blocks
/// of pi are the elementary trees; element values coincide with LDF numbers.
PlanarTree theta(const NCLPartition& pi);
NCLPartition theta_inv(const PlanarTree& tree);

/// Lambda: parity-separated linked partitions on 2n points whose connected
/// closure lies in NC_0(2n) -> bicolor trees on n vertices. Throws
/// DomainError away from that class.
BicolorTree lambda(const NCLPartition& pi);
NCLPartition lambda_inv(const BicolorTree& tree);

/// True iff lambda is defined on pi (parity-separated and c(pi)_+ = Kr(c(pi)_-)).
bool lambda_defined(const NCLPartition& pi);

/// Debug views.
std::string ascii_tree(const PlanarTree& t);
std::string ascii_tree(const BicolorTree& t);

}  // namespace cfree
