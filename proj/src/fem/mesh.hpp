#pragma once

#include "core/types.hpp"

#include <array>
#include <string>
#include <vector>

namespace schrobpx::fem {

enum class VertexTag { Interior, Dirichlet, Neumann };
enum class FaceBc { Dirichlet, Neumann };

/// Boundary assignment per axis-aligned face of (0,1)^d. In 1D only x0/x1
/// are used. A boundary vertex shared by several faces is Dirichlet as soon
/// as any of them is (corners stay constrained).
struct BoundarySpec {
    FaceBc x0 = FaceBc::Dirichlet;
    FaceBc x1 = FaceBc::Dirichlet;
    FaceBc y0 = FaceBc::Dirichlet;
    FaceBc y1 = FaceBc::Dirichlet;

    static BoundarySpec allDirichlet() { return {}; }
    static BoundarySpec allNeumann() {
        return {FaceBc::Neumann, FaceBc::Neumann, FaceBc::Neumann, FaceBc::Neumann};
    }
    /// The model-problem convention: Neumann on the face x = 1, Dirichlet
    /// elsewhere (corners of x = 1 included in the Dirichlet set).
    static BoundarySpec neumannOnX1() {
        BoundarySpec s;
        s.x1 = FaceBc::Neumann;
        return s;
    }
};

/// Boundary facet: a vertex in 1D, an edge in 2D (second id unused in 1D).
struct BoundaryFacet {
    std::array<Index, 2> vertices{-1, -1};
    FaceBc bc = FaceBc::Dirichlet;
};

/// Uniform simplicial mesh of (0,1)^d. In 2D every grid square is split into
/// two triangles along the same (+1,+1) diagonal, so red refinement of a
/// level coincides with regenerating the pattern at doubled resolution.
class Mesh {
public:
    static Mesh unitInterval(Index divisions, const BoundarySpec& bc);
    static Mesh unitSquare(Index divisions, const BoundarySpec& bc);

    int dimension() const { return dim_; }
    double meshSize() const { return h_; }
    Index divisions() const { return divisions_; }

    Index vertexCount() const { return static_cast<Index>(coords_.size()); }
    Index cellCount() const { return static_cast<Index>(cells_.size()); }
    Index verticesPerCell() const { return dim_ + 1; }

    const std::array<double, 2>& vertex(Index v) const { return coords_[static_cast<size_t>(v)]; }
    const std::vector<Index>& cell(Index c) const { return cells_[static_cast<size_t>(c)]; }
    VertexTag vertexTag(Index v) const { return tags_[static_cast<size_t>(v)]; }
    const std::vector<BoundaryFacet>& boundaryFacets() const { return boundary_; }

    /// Free dofs are interior plus Neumann-boundary vertices.
    Index freeCount() const { return n_free_; }
    Index freeIndex(Index vertex) const { return free_index_[static_cast<size_t>(vertex)]; }
    Index freeToVertex(Index dof) const { return free_to_vertex_[static_cast<size_t>(dof)]; }
    bool isFree(Index vertex) const { return freeIndex(vertex) >= 0; }

    /// Max number of mesh edges meeting at a vertex (n_i in the prolongation
    /// sparsity bound).
    Index maxVertexDegree() const;

    /// Deterministic copy with the cell list permuted; dof numbering is
    /// untouched, so assembly must be invariant.
    Mesh withPermutedCells(const std::vector<Index>& permutation) const;

private:
    void buildFreeMaps();

    int dim_ = 0;
    double h_ = 0.0;
    Index divisions_ = 0;
    std::vector<std::array<double, 2>> coords_;
    std::vector<std::vector<Index>> cells_;
    std::vector<VertexTag> tags_;
    std::vector<BoundaryFacet> boundary_;
    std::vector<Index> free_index_;
    std::vector<Index> free_to_vertex_;
    Index n_free_ = 0;
};

/// Nested hierarchy T_0 ⊂ ... ⊂ T_J with h_j = h_0 / 2^j.
struct MeshHierarchy {
    int dimension = 0;
    std::vector<Mesh> levels;
    BoundarySpec bc;

    Index finestLevel() const { return static_cast<Index>(levels.size()) - 1; }
    const Mesh& finest() const { return levels.back(); }
    double meshSize(Index j) const { return levels[static_cast<size_t>(j)].meshSize(); }
};

/// Builds J+1 nested meshes of (0,1)^d from `initial_divisions` subdivisions
/// per axis; each level doubles the resolution (red refinement).
MeshHierarchy buildHierarchy(int d, Index initial_divisions, Index level_count,
                             const BoundarySpec& bc);

} // namespace schrobpx::fem
