#include "fem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace schrobpx::fem {

namespace {

bool onFace(double coord, double face) { return std::abs(coord - face) < 1e-14; }

} // namespace

Mesh Mesh::unitInterval(Index divisions, const BoundarySpec& bc) {
    require(divisions >= 1, ErrorCode::InvalidArgument, "mesh: divisions must be >= 1");
    Mesh m;
    m.dim_ = 1;
    m.divisions_ = divisions;
    m.h_ = 1.0 / static_cast<double>(divisions);

    m.coords_.resize(static_cast<size_t>(divisions + 1));
    m.tags_.assign(static_cast<size_t>(divisions + 1), VertexTag::Interior);
    for (Index i = 0; i <= divisions; ++i)
        m.coords_[static_cast<size_t>(i)] = {static_cast<double>(i) * m.h_, 0.0};

    m.tags_.front() = bc.x0 == FaceBc::Dirichlet ? VertexTag::Dirichlet : VertexTag::Neumann;
    m.tags_.back() = bc.x1 == FaceBc::Dirichlet ? VertexTag::Dirichlet : VertexTag::Neumann;

    m.boundary_.push_back({{0, -1}, bc.x0});
    m.boundary_.push_back({{divisions, -1}, bc.x1});

    for (Index i = 0; i < divisions; ++i) m.cells_.push_back({i, i + 1});

    m.buildFreeMaps();
    return m;
}

Mesh Mesh::unitSquare(Index divisions, const BoundarySpec& bc) {
    require(divisions >= 1, ErrorCode::InvalidArgument, "mesh: divisions must be >= 1");
    Mesh m;
    m.dim_ = 2;
    m.divisions_ = divisions;
    m.h_ = 1.0 / static_cast<double>(divisions);

    const Index nv = divisions + 1;
    auto vid = [nv](Index ix, Index iy) { return iy * nv + ix; };

    m.coords_.resize(static_cast<size_t>(nv * nv));
    m.tags_.assign(static_cast<size_t>(nv * nv), VertexTag::Interior);
    for (Index iy = 0; iy <= divisions; ++iy)
        for (Index ix = 0; ix <= divisions; ++ix)
            m.coords_[static_cast<size_t>(vid(ix, iy))] = {ix * m.h_, iy * m.h_};

    // Vertex tags: Dirichlet wins over Neumann where faces meet.
    for (Index v = 0; v < nv * nv; ++v) {
        const auto& p = m.coords_[static_cast<size_t>(v)];
        bool dirichlet = false, neumann = false;
        auto visit = [&](bool hit, FaceBc f) {
            if (!hit) return;
            (f == FaceBc::Dirichlet ? dirichlet : neumann) = true;
        };
        visit(onFace(p[0], 0.0), bc.x0);
        visit(onFace(p[0], 1.0), bc.x1);
        visit(onFace(p[1], 0.0), bc.y0);
        visit(onFace(p[1], 1.0), bc.y1);
        if (dirichlet)
            m.tags_[static_cast<size_t>(v)] = VertexTag::Dirichlet;
        else if (neumann)
            m.tags_[static_cast<size_t>(v)] = VertexTag::Neumann;
    }

    // Cells: both triangles share the (+1,+1) diagonal of their square.
    for (Index iy = 0; iy < divisions; ++iy)
        for (Index ix = 0; ix < divisions; ++ix) {
            const Index v00 = vid(ix, iy), v10 = vid(ix + 1, iy);
            const Index v01 = vid(ix, iy + 1), v11 = vid(ix + 1, iy + 1);
            m.cells_.push_back({v00, v10, v11});
            m.cells_.push_back({v00, v11, v01});
        }

    // Boundary edges, tagged by the face they lie on.
    for (Index i = 0; i < divisions; ++i) {
        m.boundary_.push_back({{vid(i, 0), vid(i + 1, 0)}, bc.y0});
        m.boundary_.push_back({{vid(i, divisions), vid(i + 1, divisions)}, bc.y1});
        m.boundary_.push_back({{vid(0, i), vid(0, i + 1)}, bc.x0});
        m.boundary_.push_back({{vid(divisions, i), vid(divisions, i + 1)}, bc.x1});
    }

    m.buildFreeMaps();
    return m;
}

void Mesh::buildFreeMaps() {
    free_index_.assign(coords_.size(), -1);
    free_to_vertex_.clear();
    n_free_ = 0;
    for (size_t v = 0; v < coords_.size(); ++v) {
        if (tags_[v] != VertexTag::Dirichlet) {
            free_index_[v] = n_free_++;
            free_to_vertex_.push_back(static_cast<Index>(v));
        }
    }
}

Index Mesh::maxVertexDegree() const {
    std::set<std::pair<Index, Index>> edges;
    for (const auto& cell : cells_) {
        for (size_t a = 0; a < cell.size(); ++a)
            for (size_t b = a + 1; b < cell.size(); ++b) {
                Index u = std::min(cell[a], cell[b]);
                Index v = std::max(cell[a], cell[b]);
                edges.insert({u, v});
            }
    }
    std::vector<Index> degree(coords_.size(), 0);
    for (const auto& [u, v] : edges) {
        ++degree[static_cast<size_t>(u)];
        ++degree[static_cast<size_t>(v)];
    }
    return *std::max_element(degree.begin(), degree.end());
}

Mesh Mesh::withPermutedCells(const std::vector<Index>& permutation) const {
    require(permutation.size() == cells_.size(), ErrorCode::InvalidArgument,
            "mesh: permutation size mismatch");
    Mesh m = *this;
    for (size_t i = 0; i < permutation.size(); ++i)
        m.cells_[i] = cells_[static_cast<size_t>(permutation[i])];
    return m;
}

MeshHierarchy buildHierarchy(int d, Index initial_divisions, Index level_count,
                             const BoundarySpec& bc) {
    require(d == 1 || d == 2, ErrorCode::InvalidArgument, "hierarchy: dimension must be 1 or 2");
    require(initial_divisions >= 1, ErrorCode::InvalidArgument,
            "hierarchy: initial divisions must be >= 1");
    require(level_count >= 0, ErrorCode::InvalidArgument, "hierarchy: level count must be >= 0");

    MeshHierarchy hier;
    hier.dimension = d;
    hier.bc = bc;
    for (Index j = 0; j <= level_count; ++j) {
        const Index divisions = initial_divisions << j;
        hier.levels.push_back(d == 1 ? Mesh::unitInterval(divisions, bc)
                                     : Mesh::unitSquare(divisions, bc));
    }
    return hier;
}

} // namespace schrobpx::fem
