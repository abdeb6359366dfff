#include "ddbar/lie_model.hpp"

#include <bit>
#include <map>
#include <sstream>

namespace ddbar {

namespace {

using exterior::binomial;
using exterior::merge_sign;
using exterior::subset_index;
using exterior::subsets;
using exterior::wedge_generator;

// Generators 0..n-1 are phi^1..phi^n, n..2n-1 are phibar^1..phibar^n.
// d of each generator as a list of (a, b, coeff) meaning coeff * e_a ^ e_b, a < b.
struct TwoFormTerm {
    int a, b;
    GaussianRational coeff;
};

std::vector<std::vector<TwoFormTerm>> generator_differentials(const StructureEquations& s) {
    std::vector<std::vector<TwoFormTerm>> d(2 * static_cast<std::size_t>(s.n));
    for (int i = 1; i <= s.n; ++i) {
        for (const auto& t : s.dphi[static_cast<std::size_t>(i - 1)]) {
            if (t.coeff.is_zero()) continue;
            if (t.kind == StructureTerm::Kind::phi_phi) {
                d[static_cast<std::size_t>(i - 1)].push_back({t.j - 1, t.k - 1, t.coeff});
                // Conjugate: conj(c) phibar^j ^ phibar^k.
                d[static_cast<std::size_t>(s.n + i - 1)].push_back(
                    {s.n + t.j - 1, s.n + t.k - 1, t.coeff.conj()});
            } else if (t.kind == StructureTerm::Kind::phi_phibar) {
                d[static_cast<std::size_t>(i - 1)].push_back({t.j - 1, s.n + t.k - 1, t.coeff});
                // conj(c) phibar^j ^ phi^k = -conj(c) phi^k ^ phibar^j.
                d[static_cast<std::size_t>(s.n + i - 1)].push_back(
                    {t.k - 1, s.n + t.j - 1, -t.coeff.conj()});
            } else {
                d[static_cast<std::size_t>(i - 1)].push_back(
                    {s.n + t.j - 1, s.n + t.k - 1, t.coeff});
                d[static_cast<std::size_t>(s.n + i - 1)].push_back(
                    {t.j - 1, t.k - 1, t.coeff.conj()});
            }
        }
    }
    return d;
}

// d of the monomial `mask` by the graded Leibniz rule; accumulates
// coeff * result into `out` (a map monomial -> coefficient).
void d_monomial(const std::vector<std::vector<TwoFormTerm>>& dgen, std::uint32_t mask,
                const GaussianRational& coeff, std::map<std::uint32_t, GaussianRational>& out) {
    int pos = 0;
    std::uint32_t rest_iter = mask;
    while (rest_iter) {
        int g = std::countr_zero(rest_iter);
        rest_iter &= rest_iter - 1;
        int leibniz = (pos % 2 == 0) ? 1 : -1;
        std::uint32_t without = mask & ~(1u << g);
        for (const auto& term : dgen[static_cast<std::size_t>(g)]) {
            auto wb = wedge_generator(term.b, without);
            if (wb.sign == 0) continue;
            auto wa = wedge_generator(term.a, wb.mask);
            if (wa.sign == 0) continue;
            GaussianRational c = coeff * term.coeff * GaussianRational(leibniz * wb.sign * wa.sign);
            out[wa.mask] += c;
        }
        ++pos;
    }
}

}  // namespace

std::vector<std::pair<std::uint32_t, std::uint32_t>> ExteriorModel::basis(int p, int q) const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t I : subsets(n, p))
        for (std::uint32_t J : subsets(n, q)) out.emplace_back(I, J);
    return out;
}

int ExteriorModel::basis_index(int /*p*/, int q, std::uint32_t I, std::uint32_t J) const {
    return subset_index(n, I) * binomial(n, q) + subset_index(n, J);
}

std::string ExteriorModel::label(int p, int q, int index) const {
    auto b = basis(p, q)[static_cast<std::size_t>(index)];
    std::ostringstream os;
    if (b.first == 0 && b.second == 0) return "1";
    if (b.first) {
        os << "phi";
        for (int v = 0; v < n; ++v)
            if (b.first & (1u << v)) os << (v + 1);
    }
    if (b.second) {
        if (b.first) os << "^";
        os << "phibar";
        for (int v = 0; v < n; ++v)
            if (b.second & (1u << v)) os << (v + 1);
    }
    return os.str();
}

std::vector<std::string> validate_model(const StructureEquations& s) {
    std::vector<std::string> out;
    if (s.n < 1) {
        out.push_back("n must be at least 1");
        return out;
    }
    if (s.dphi.size() != static_cast<std::size_t>(s.n)) {
        out.push_back("dphi must list exactly n entries");
        return out;
    }
    for (int i = 1; i <= s.n; ++i)
        for (const auto& t : s.dphi[static_cast<std::size_t>(i - 1)]) {
            if (t.j < 1 || t.j > s.n || t.k < 1 || t.k > s.n)
                out.push_back("dphi^" + std::to_string(i) + ": generator index out of range");
            else if (t.kind != StructureTerm::Kind::phi_phibar && t.j >= t.k)
                out.push_back("dphi^" + std::to_string(i) + ": term needs j < k");
            else if (t.kind == StructureTerm::Kind::phibar_phibar && !t.coeff.is_zero())
                out.push_back("dphi^" + std::to_string(i) +
                              ": phibar^phibar term violates integrability");
        }
    if (!out.empty()) return out;

    auto dgen = generator_differentials(s);
    for (int g = 0; g < 2 * s.n; ++g) {
        // d(d e_g): apply d to each 2-form monomial of d e_g.
        std::map<std::uint32_t, GaussianRational> dd;
        for (const auto& term : dgen[static_cast<std::size_t>(g)]) {
            std::uint32_t mono = (1u << term.a) | (1u << term.b);
            d_monomial(dgen, mono, term.coeff, dd);
        }
        for (const auto& [mono, c] : dd)
            if (!c.is_zero()) {
                std::string gen = g < s.n ? ("phi^" + std::to_string(g + 1))
                                          : ("phibar^" + std::to_string(g - s.n + 1));
                out.push_back("d^2 " + gen + " != 0");
                break;
            }
    }
    return out;
}

ExteriorModel compile(const StructureEquations& s) {
    auto violations = validate_model(s);
    if (!violations.empty()) throw ModelError("invalid structure equations: " + violations.front());

    ExteriorModel m;
    m.n = s.n;
    m.name = s.name;
    int n = s.n;
    auto dgen = generator_differentials(s);

    auto cells = static_cast<std::size_t>((n + 1) * (n + 1));
    std::vector<int> dims(cells);
    auto idx = [n](int p, int q) {
        return static_cast<std::size_t>(p) * static_cast<std::size_t>(n + 1) +
               static_cast<std::size_t>(q);
    };
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) dims[idx(p, q)] = binomial(n, p) * binomial(n, q);

    std::vector<Matrix> del(cells), delbar(cells), conj(cells);
    auto dim_at = [&dims, idx, n](int p, int q) {
        return (p >= 0 && p <= n && q >= 0 && q <= n) ? dims[idx(p, q)] : 0;
    };
    std::uint32_t phibar_mask_all = ((1u << n) - 1u) << n;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            Matrix dl(static_cast<std::size_t>(dim_at(p + 1, q)), static_cast<std::size_t>(dim_at(p, q)));
            Matrix db(static_cast<std::size_t>(dim_at(p, q + 1)), static_cast<std::size_t>(dim_at(p, q)));
            Matrix cj(static_cast<std::size_t>(dim_at(q, p)), static_cast<std::size_t>(dim_at(p, q)));
            int col = 0;
            for (std::uint32_t I : subsets(n, p))
                for (std::uint32_t J : subsets(n, q)) {
                    std::uint32_t mono = I | (J << n);
                    std::map<std::uint32_t, GaussianRational> image;
                    d_monomial(dgen, mono, GaussianRational(1), image);
                    for (const auto& [res, c] : image) {
                        if (c.is_zero()) continue;
                        std::uint32_t resI = res & ((1u << n) - 1u);
                        std::uint32_t resJ = (res & phibar_mask_all) >> n;
                        int rp = std::popcount(resI), rq = std::popcount(resJ);
                        int row = subset_index(n, resI) * binomial(n, rq) + subset_index(n, resJ);
                        if (rp == p + 1 && rq == q) {
                            dl.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = c;
                        } else if (rp == p && rq == q + 1) {
                            db.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = c;
                        } else {
                            throw ModelError("differential escaped the adjacent bidegrees");
                        }
                    }
                    // sigma(phi^I phibar^J) = (-1)^{pq} phi^J phibar^I.
                    int row = subset_index(n, J) * binomial(n, p) + subset_index(n, I);
                    cj.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
                        GaussianRational((p * q) % 2 == 0 ? 1 : -1);
                    ++col;
                }
            del[idx(p, q)] = std::move(dl);
            delbar[idx(p, q)] = std::move(db);
            conj[idx(p, q)] = std::move(cj);
        }

    m.complex = Bicomplex(n, n, std::move(dims), std::move(del), std::move(delbar),
                          std::move(conj), n);
    return m;
}

StructureEquations builtin(const std::string& name) {
    if (name == "iwasawa") {
        StructureEquations s;
        s.name = "iwasawa";
        s.n = 3;
        s.dphi.resize(3);
        s.dphi[2].push_back({StructureTerm::Kind::phi_phi, 1, 2, GaussianRational(-1)});
        return s;
    }
    if (name.rfind("torus", 0) == 0 && name.size() == 6 && name[5] >= '1' && name[5] <= '6') {
        StructureEquations s;
        s.name = name;
        s.n = name[5] - '0';
        s.dphi.resize(static_cast<std::size_t>(s.n));
        return s;
    }
    throw ModelError("unknown builtin model '" + name + "'");
}

std::vector<std::string> builtin_names() {
    return {"iwasawa", "torus1", "torus2", "torus3", "torus4", "torus5", "torus6"};
}

}  // namespace ddbar
