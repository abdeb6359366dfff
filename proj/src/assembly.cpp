#include "ddbar/assembly.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

namespace ddbar {

ShapeKind shape_from_word(const std::string& word) {
    if (word == "dot") return ShapeKind::dot;
    if (word == "square") return ShapeKind::square;
    if (word == "up") return ShapeKind::zigzag_up;
    if (word == "right") return ShapeKind::zigzag_right;
    if (word == "out") return ShapeKind::zigzag_out;
    if (word == "in") return ShapeKind::zigzag_in;
    throw ParseError("unknown shape word '" + word + "'");
}

std::string shape_word(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::dot: return "dot";
        case ShapeKind::square: return "square";
        case ShapeKind::zigzag_up: return "up";
        case ShapeKind::zigzag_right: return "right";
        case ShapeKind::zigzag_out: return "out";
        case ShapeKind::zigzag_in: return "in";
    }
    return "?";
}

Placement mirror(const Placement& piece) {
    Placement m{piece.kind, piece.q, piece.p};
    if (piece.kind == ShapeKind::zigzag_up) m.kind = ShapeKind::zigzag_right;
    if (piece.kind == ShapeKind::zigzag_right) m.kind = ShapeKind::zigzag_up;
    return m;
}

namespace {

// Slots of a shape: (cell p, cell q, local slot id).
struct Slot {
    int p, q, id;
};

std::vector<Slot> slots_of(const Placement& pl) {
    int p = pl.p, q = pl.q;
    switch (pl.kind) {
        case ShapeKind::dot: return {{p, q, 0}};
        case ShapeKind::square: return {{p, q, 0}, {p + 1, q, 1}, {p, q + 1, 2}, {p + 1, q + 1, 3}};
        case ShapeKind::zigzag_up: return {{p, q, 0}, {p, q + 1, 1}};
        case ShapeKind::zigzag_right: return {{p, q, 0}, {p + 1, q, 1}};
        case ShapeKind::zigzag_out: return {{p, q, 0}, {p, q + 1, 1}, {p + 1, q, 2}};
        case ShapeKind::zigzag_in: return {{p, q + 1, 0}, {p + 1, q, 1}, {p + 1, q + 1, 2}};
    }
    return {};
}

struct Arrow {
    int from_slot, to_slot;
    bool is_del;  // otherwise delbar
    int coeff;    // +1 or -1
};

std::vector<Arrow> arrows_of(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::dot: return {};
        case ShapeKind::square:
            // del on the q+1 row gets the sign that makes del.delbar + delbar.del = 0.
            return {{0, 1, true, 1}, {2, 3, true, -1}, {0, 2, false, 1}, {1, 3, false, 1}};
        case ShapeKind::zigzag_up: return {{0, 1, false, 1}};
        case ShapeKind::zigzag_right: return {{0, 1, true, 1}};
        case ShapeKind::zigzag_out: return {{0, 1, false, 1}, {0, 2, true, 1}};
        case ShapeKind::zigzag_in: return {{0, 2, true, 1}, {1, 2, false, 1}};
    }
    return {};
}

// Conjugation slot map within a mirror pair: slot -> (partner slot, coeff).
// The -1 on the square's top corner keeps sigma intertwining the signed del.
std::vector<std::pair<int, int>> sigma_slot_map(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::dot: return {{0, 1}};
        case ShapeKind::square: return {{0, 1}, {2, 1}, {1, 1}, {3, -1}};
        case ShapeKind::zigzag_up: return {{0, 1}, {1, 1}};
        case ShapeKind::zigzag_right: return {{0, 1}, {1, 1}};
        case ShapeKind::zigzag_out: return {{0, 1}, {2, 1}, {1, 1}};
        case ShapeKind::zigzag_in: return {{1, 1}, {0, 1}, {2, 1}};
    }
    return {};
}

}  // namespace

bool is_mirror_symmetric(const std::vector<Placement>& pieces) {
    std::map<std::tuple<int, int, int>, int> count;
    auto key = [](const Placement& pl) {
        return std::make_tuple(static_cast<int>(pl.kind), pl.p, pl.q);
    };
    for (const auto& pl : pieces) ++count[key(pl)];
    for (const auto& pl : pieces)
        if (count[key(pl)] != count[key(mirror(pl))]) return false;
    return true;
}

std::vector<Placement> mirror_closure(const std::vector<Placement>& pieces) {
    std::vector<Placement> out = pieces;
    // Pair off mirrors; append one partner per unmatched piece.
    std::vector<bool> used(pieces.size(), false);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (used[i]) continue;
        Placement m = mirror(pieces[i]);
        if (m == pieces[i]) continue;
        bool matched = false;
        for (std::size_t j = i + 1; j < pieces.size(); ++j)
            if (!used[j] && pieces[j] == m) {
                used[i] = used[j] = true;
                matched = true;
                break;
            }
        if (!matched) out.push_back(m);
    }
    return out;
}

Bicomplex zigzag_assemble(const std::vector<Placement>& pieces, bool with_conjugation) {
    for (const auto& pl : pieces)
        if (pl.p < 0 || pl.q < 0) throw DimensionError("placement outside the first quadrant");

    int p_max = -1, q_max = -1;
    for (const auto& pl : pieces)
        for (const auto& s : slots_of(pl)) {
            p_max = std::max(p_max, s.p);
            q_max = std::max(q_max, s.q);
        }
    if (p_max < 0) {
        // Empty assembly: the zero complex.
        return Bicomplex(-1, -1, {}, {}, {});
    }

    auto idx = [q_max](int p, int q) {
        return static_cast<std::size_t>(p) * static_cast<std::size_t>(q_max + 1) +
               static_cast<std::size_t>(q);
    };
    std::size_t cells = static_cast<std::size_t>(p_max + 1) * static_cast<std::size_t>(q_max + 1);

    // Assign each slot an index within its cell.
    std::vector<int> dims(cells, 0);
    std::vector<std::vector<int>> slot_index(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        auto slots = slots_of(pieces[i]);
        slot_index[i].resize(slots.size());
        for (const auto& s : slots) slot_index[i][static_cast<std::size_t>(s.id)] = dims[idx(s.p, s.q)]++;
    }

    std::vector<Matrix> del(cells), delbar(cells);
    auto dim_at = [&](int p, int q) {
        return (p >= 0 && p <= p_max && q >= 0 && q <= q_max) ? dims[idx(p, q)] : 0;
    };
    for (int p = 0; p <= p_max; ++p)
        for (int q = 0; q <= q_max; ++q) {
            del[idx(p, q)] = Matrix(static_cast<std::size_t>(dim_at(p + 1, q)),
                                    static_cast<std::size_t>(dim_at(p, q)));
            delbar[idx(p, q)] = Matrix(static_cast<std::size_t>(dim_at(p, q + 1)),
                                       static_cast<std::size_t>(dim_at(p, q)));
        }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        auto slots = slots_of(pieces[i]);
        for (const auto& ar : arrows_of(pieces[i].kind)) {
            const Slot& from = slots[static_cast<std::size_t>(ar.from_slot)];
            const Slot& to = slots[static_cast<std::size_t>(ar.to_slot)];
            Matrix& m = ar.is_del ? del[idx(from.p, from.q)] : delbar[idx(from.p, from.q)];
            m.at(static_cast<std::size_t>(slot_index[i][static_cast<std::size_t>(to.id)]),
                 static_cast<std::size_t>(slot_index[i][static_cast<std::size_t>(from.id)])) =
                GaussianRational(ar.coeff);
        }
    }

    std::optional<std::vector<Matrix>> conj;
    if (with_conjugation) {
        // Pair each piece with a mirror partner.
        std::vector<std::size_t> partner(pieces.size(), pieces.size());
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (partner[i] != pieces.size()) continue;
            Placement m = mirror(pieces[i]);
            if (m == pieces[i]) {
                partner[i] = i;
                continue;
            }
            bool found = false;
            for (std::size_t j = i + 1; j < pieces.size(); ++j)
                if (partner[j] == pieces.size() && pieces[j] == m) {
                    partner[i] = j;
                    partner[j] = i;
                    found = true;
                    break;
                }
            if (!found) throw ModelError("conjugation requested for a non-mirror-symmetric assembly");
        }
        std::vector<Matrix> c(cells);
        for (int p = 0; p <= p_max; ++p)
            for (int q = 0; q <= q_max; ++q)
                c[idx(p, q)] = Matrix(static_cast<std::size_t>(dim_at(q, p)),
                                      static_cast<std::size_t>(dim_at(p, q)));
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            auto slots = slots_of(pieces[i]);
            auto partner_slots = slots_of(pieces[partner[i]]);
            auto smap = sigma_slot_map(pieces[i].kind);
            for (const auto& s : slots) {
                auto [target, coeff] = smap[static_cast<std::size_t>(s.id)];
                const Slot& ts = partner_slots[static_cast<std::size_t>(target)];
                c[idx(s.p, s.q)].at(
                    static_cast<std::size_t>(slot_index[partner[i]][static_cast<std::size_t>(ts.id)]),
                    static_cast<std::size_t>(slot_index[i][static_cast<std::size_t>(s.id)])) =
                    GaussianRational(coeff);
            }
        }
        conj = std::move(c);
    }

    std::vector<int> dims_vec(dims.begin(), dims.end());
    return Bicomplex(p_max, q_max, std::move(dims_vec), std::move(del), std::move(delbar),
                     std::move(conj));
}

}  // namespace ddbar
