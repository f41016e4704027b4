#pragma once

#include "syzlab/ratkernel.hpp"

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace syz {

// Sorted subset of {1,..,5}.
class FaceLabel {
public:
    FaceLabel() = default;
    explicit FaceLabel(std::vector<int> indices);

    const std::vector<int>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool contains(int i) const;
    bool proper() const { return !indices_.empty() && indices_.size() < 5; }
    FaceLabel complement() const;
    std::string digits() const;  // "134"
    std::string name() const;    // "Delta_134"

    bool operator==(const FaceLabel&) const = default;
    auto operator<=>(const FaceLabel&) const = default;

private:
    std::vector<int> indices_;
};

enum class VertexKind { Pair, Triple };

struct GraphVertex {
    VertexKind kind;
    FaceLabel label;
    std::array<Rational, 5> barycentric;

    static GraphVertex pair(int i, int j);
    static GraphVertex triple(int i, int j, int k);
    // Pair or triple vertex for a 2- or 3-element index set.
    static GraphVertex from_label(const FaceLabel& label);

    std::string name() const;  // "P_12", "P_345"
    bool operator==(const GraphVertex& o) const { return kind == o.kind && label == o.label; }
};

// Leg Gamma_{ij}^k joining P_ijk (tail) to P_ij (head).
struct GraphEdge {
    int i, j, k;  // i < j

    static GraphEdge make(int a, int b, int apex);
    FaceLabel pair() const { return FaceLabel({i, j}); }
    FaceLabel triple() const { return FaceLabel({i, j, k}); }
    // Two indices of {1..5} outside {i,j,k}.
    std::array<int, 2> complement() const;
    std::string name() const;  // "Gamma_12^3"
    bool operator==(const GraphEdge&) const = default;
};

struct BaseGraph {
    std::vector<GraphVertex> vertices;  // 10 pair vertices, then 10 triple vertices
    std::vector<GraphEdge> edges;       // 30 legs
    std::vector<std::size_t> tail;      // index of P_ijk per edge
    std::vector<std::size_t> head;      // index of P_ij per edge

    std::size_t vertex_index(const FaceLabel& label) const;
    std::size_t edge_index(const GraphEdge& e) const;
    std::vector<std::size_t> incident_edges(std::size_t vertex) const;
    bool connected() const;
};

BaseGraph enumerate_graph();

enum class Stratum { Interior2, Edge1, Vertex0, Outside };

struct FattenedStratum {
    Stratum tag;
    double r1, r2;
};

std::string to_string(Stratum s);

// Stratum of a point of a 2-face in the coordinates (r1, r2) = (|z_a|/|z_c|, |z_b|/|z_c|).
FattenedStratum classify_fattened(double r1, double r2, double tol = 1e-9);

FaceLabel mirror_involution(const FaceLabel& face);
GraphVertex mirror_involution(const GraphVertex& v);

using Point4 = std::array<double, 4>;
using Anchors = std::array<Point4, 5>;

Anchors standard_anchors();
// Weighted average of the anchors with weights |z_k|^2 / sum |z_i|^2.
Point4 moment_image(const std::array<std::complex<double>, 5>& z, const Anchors& anchors);

}  // namespace syz
