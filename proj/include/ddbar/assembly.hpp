#pragma once

#include <string>
#include <vector>

#include "ddbar/bicomplex.hpp"

namespace ddbar {

/// Indecomposable building blocks for bounded double complexes. The zigzag
/// words: `up` and `right` are the one-arrow zigzags; `out` and `in` are the
/// three-space staircases with both arrows leaving (resp. entering) a corner.
enum class ShapeKind { dot, square, zigzag_up, zigzag_right, zigzag_out, zigzag_in };

ShapeKind shape_from_word(const std::string& word);
std::string shape_word(ShapeKind kind);

struct Placement {
    ShapeKind kind = ShapeKind::dot;
    int p = 0;
    int q = 0;

    friend bool operator==(const Placement& a, const Placement& b) {
        return a.kind == b.kind && a.p == b.p && a.q == b.q;
    }
};

/// The (q,p)-mirror of a placement: up <-> right, dot/square/out/in map to
/// themselves at the mirrored anchor.
Placement mirror(const Placement& piece);

/// True when the multiset of pieces is closed under mirroring.
bool is_mirror_symmetric(const std::vector<Placement>& pieces);

/// Smallest mirror-symmetric superset (appends missing mirrors).
std::vector<Placement> mirror_closure(const std::vector<Placement>& pieces);

/// Direct sum of the placed shapes, with signs chosen so validate() passes.
/// With `with_conjugation`, a conjugation structure is attached by pairing
/// each piece with a mirror partner; throws ModelError when the piece
/// multiset is not mirror-symmetric. Throws DimensionError on negative
/// anchors.
Bicomplex zigzag_assemble(const std::vector<Placement>& pieces, bool with_conjugation = false);

}  // namespace ddbar
