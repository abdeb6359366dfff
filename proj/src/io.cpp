#include "ddbar/io.hpp"

#include <fstream>
#include <set>

namespace ddbar::io {

namespace {

void expect_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) throw ParseError(where + ": unknown field '" + key + "'");
}

Rational rational_field(const json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": rational must be a string like \"a/b\"");
    return parse_rational(j.get<std::string>());
}

int int_field(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(where + ": missing integer field '" + key + "'");
    return j[key].get<int>();
}

}  // namespace

GaussianRational scalar_from_json(const json& j) {
    expect_keys(j, {"re", "im"}, "scalar");
    Rational re(0), im(0);
    if (j.contains("re")) re = rational_field(j["re"], "scalar.re");
    if (j.contains("im")) im = rational_field(j["im"], "scalar.im");
    return GaussianRational(re, im);
}

json scalar_to_json(const GaussianRational& z) {
    json j = json::object();
    j["re"] = rational_to_string(z.re());
    if (z.im() != 0) j["im"] = rational_to_string(z.im());
    return j;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array()) throw ParseError("matrix: expected an array of rows");
    if (j.size() != rows && !(rows == 0 && j.empty()))
        throw ParseError("matrix: expected " + std::to_string(rows) + " rows, got " +
                         std::to_string(j.size()));
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < j.size(); ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != cols)
            throw ParseError("matrix: row " + std::to_string(r) + " must have " +
                             std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(row[c]);
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Bicomplex bicomplex_from_json(const json& j) {
    expect_keys(j, {"p_max", "q_max", "dims", "del", "delbar", "conj", "n"}, "bicomplex");
    int p_max = int_field(j, "p_max", "bicomplex");
    int q_max = int_field(j, "q_max", "bicomplex");
    if (p_max < 0 || q_max < 0) throw ParseError("bicomplex: bounds must be nonnegative");

    auto cells = static_cast<std::size_t>((p_max + 1) * (q_max + 1));
    auto idx = [q_max](int p, int q) {
        return static_cast<std::size_t>(p) * static_cast<std::size_t>(q_max + 1) +
               static_cast<std::size_t>(q);
    };
    std::vector<int> dims(cells, 0);
    if (!j.contains("dims") || !j["dims"].is_array())
        throw ParseError("bicomplex: missing 'dims' array");
    for (const json& e : j["dims"]) {
        expect_keys(e, {"p", "q", "dim"}, "dims entry");
        int p = int_field(e, "p", "dims entry");
        int q = int_field(e, "q", "dims entry");
        int d = int_field(e, "dim", "dims entry");
        if (p < 0 || p > p_max || q < 0 || q > q_max)
            throw ParseError("dims entry: bidegree out of bounds");
        if (d < 0) throw ParseError("dims entry: negative dimension");
        dims[idx(p, q)] = d;
    }
    auto dim_at = [&](int p, int q) {
        return (p >= 0 && p <= p_max && q >= 0 && q <= q_max) ? dims[idx(p, q)] : 0;
    };

    auto read_blocks = [&](const char* key, bool is_del) {
        std::vector<Matrix> out(cells);
        for (int p = 0; p <= p_max; ++p)
            for (int q = 0; q <= q_max; ++q)
                out[idx(p, q)] =
                    Matrix(static_cast<std::size_t>(is_del ? dim_at(p + 1, q) : dim_at(p, q + 1)),
                           static_cast<std::size_t>(dim_at(p, q)));
        if (j.contains(key)) {
            if (!j[key].is_array()) throw ParseError(std::string("bicomplex: '") + key + "' must be an array");
            for (const json& e : j[key]) {
                expect_keys(e, {"p", "q", "matrix"}, key);
                int p = int_field(e, "p", key);
                int q = int_field(e, "q", key);
                if (p < 0 || p > p_max || q < 0 || q > q_max)
                    throw ParseError(std::string(key) + " block: bidegree out of bounds");
                if (!e.contains("matrix")) throw ParseError(std::string(key) + " block: missing matrix");
                out[idx(p, q)] = matrix_from_json(
                    e["matrix"], static_cast<std::size_t>(is_del ? dim_at(p + 1, q) : dim_at(p, q + 1)),
                    static_cast<std::size_t>(dim_at(p, q)));
            }
        }
        return out;
    };
    std::vector<Matrix> del = read_blocks("del", true);
    std::vector<Matrix> delbar = read_blocks("delbar", false);

    std::optional<std::vector<Matrix>> conj;
    if (j.contains("conj")) {
        std::vector<Matrix> c(cells);
        for (int p = 0; p <= p_max; ++p)
            for (int q = 0; q <= q_max; ++q)
                c[idx(p, q)] = Matrix(static_cast<std::size_t>(dim_at(q, p)),
                                      static_cast<std::size_t>(dim_at(p, q)));
        if (!j["conj"].is_array()) throw ParseError("bicomplex: 'conj' must be an array");
        for (const json& e : j["conj"]) {
            expect_keys(e, {"p", "q", "matrix"}, "conj");
            int p = int_field(e, "p", "conj");
            int q = int_field(e, "q", "conj");
            if (p < 0 || p > p_max || q < 0 || q > q_max)
                throw ParseError("conj block: bidegree out of bounds");
            if (!e.contains("matrix")) throw ParseError("conj block: missing matrix");
            c[idx(p, q)] = matrix_from_json(e["matrix"], static_cast<std::size_t>(dim_at(q, p)),
                                            static_cast<std::size_t>(dim_at(p, q)));
        }
        conj = std::move(c);
    }

    std::optional<int> n;
    if (j.contains("n")) {
        if (!j["n"].is_number_integer() || j["n"].get<int>() < 0)
            throw ParseError("bicomplex: 'n' must be a nonnegative integer");
        n = j["n"].get<int>();
    }
    return Bicomplex(p_max, q_max, std::move(dims), std::move(del), std::move(delbar),
                     std::move(conj), n);
}

json bicomplex_to_json(const Bicomplex& x) {
    json j = json::object();
    j["p_max"] = x.p_max();
    j["q_max"] = x.q_max();
    json dims = json::array();
    json del = json::array();
    json delbar = json::array();
    json conj = json::array();
    for (int p = 0; p <= x.p_max(); ++p)
        for (int q = 0; q <= x.q_max(); ++q) {
            if (x.dim(p, q) > 0) dims.push_back({{"p", p}, {"q", q}, {"dim", x.dim(p, q)}});
            if (!x.del(p, q).is_zero())
                del.push_back({{"p", p}, {"q", q}, {"matrix", matrix_to_json(x.del(p, q))}});
            if (!x.delbar(p, q).is_zero())
                delbar.push_back({{"p", p}, {"q", q}, {"matrix", matrix_to_json(x.delbar(p, q))}});
            if (x.has_conjugation() && !x.conj_matrix(p, q).is_zero())
                conj.push_back({{"p", p}, {"q", q}, {"matrix", matrix_to_json(x.conj_matrix(p, q))}});
        }
    j["dims"] = std::move(dims);
    j["del"] = std::move(del);
    j["delbar"] = std::move(delbar);
    if (x.has_conjugation()) j["conj"] = std::move(conj);
    if (x.n()) j["n"] = *x.n();
    return j;
}

ModelFile model_from_json(const json& j) {
    expect_keys(j, {"name", "n", "dphi", "gram"}, "model");
    ModelFile out;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("model: 'name' must be a string");
        out.equations.name = j["name"].get<std::string>();
    }
    out.equations.n = int_field(j, "n", "model");
    if (out.equations.n < 1 || out.equations.n > 16)
        throw ParseError("model: n out of supported range [1,16]");
    if (!j.contains("dphi") || !j["dphi"].is_array() ||
        j["dphi"].size() != static_cast<std::size_t>(out.equations.n))
        throw ParseError("model: 'dphi' must be an array of n term lists");
    out.equations.dphi.resize(static_cast<std::size_t>(out.equations.n));
    for (int i = 0; i < out.equations.n; ++i) {
        const json& terms = j["dphi"][static_cast<std::size_t>(i)];
        if (!terms.is_array())
            throw ParseError("model: dphi[" + std::to_string(i) + "] must be a term list");
        for (const json& t : terms) {
            expect_keys(t, {"type", "j", "k", "coeff"}, "dphi term");
            if (!t.contains("type") || !t["type"].is_string())
                throw ParseError("dphi term: missing 'type'");
            std::string type = t["type"].get<std::string>();
            StructureTerm term;
            if (type == "20") {
                term.kind = StructureTerm::Kind::phi_phi;
            } else if (type == "11") {
                term.kind = StructureTerm::Kind::phi_phibar;
            } else if (type == "02") {
                term.kind = StructureTerm::Kind::phibar_phibar;
            } else {
                throw ParseError("dphi term: unknown type '" + type + "'");
            }
            term.j = int_field(t, "j", "dphi term");
            term.k = int_field(t, "k", "dphi term");
            if (!t.contains("coeff")) throw ParseError("dphi term: missing 'coeff'");
            term.coeff = scalar_from_json(t["coeff"]);
            out.equations.dphi[static_cast<std::size_t>(i)].push_back(std::move(term));
        }
    }
    if (j.contains("gram")) {
        if (!j["gram"].is_array()) throw ParseError("model: 'gram' must be an array");
        int n = out.equations.n;
        for (const json& e : j["gram"]) {
            expect_keys(e, {"p", "q", "matrix"}, "gram block");
            int p = int_field(e, "p", "gram block");
            int q = int_field(e, "q", "gram block");
            if (p < 0 || p > n || q < 0 || q > n)
                throw ParseError("gram block: bidegree out of bounds");
            std::size_t d = static_cast<std::size_t>(exterior::binomial(n, p)) *
                            static_cast<std::size_t>(exterior::binomial(n, q));
            if (!e.contains("matrix")) throw ParseError("gram block: missing matrix");
            out.metric.set_gram(p, q, matrix_from_json(e["matrix"], d, d));
        }
    }
    return out;
}

json model_to_json(const StructureEquations& s) {
    json j = json::object();
    if (!s.name.empty()) j["name"] = s.name;
    j["n"] = s.n;
    json dphi = json::array();
    for (const auto& terms : s.dphi) {
        json list = json::array();
        for (const auto& t : terms) {
            json e = json::object();
            e["type"] = t.kind == StructureTerm::Kind::phi_phi      ? "20"
                        : t.kind == StructureTerm::Kind::phi_phibar ? "11"
                                                                    : "02";
            e["j"] = t.j;
            e["k"] = t.k;
            e["coeff"] = scalar_to_json(t.coeff);
            list.push_back(std::move(e));
        }
        dphi.push_back(std::move(list));
    }
    j["dphi"] = std::move(dphi);
    return j;
}

namespace {

json grid_to_json(const Grid& g) {
    json rows = json::array();
    for (int p = 0; p <= g.p_max(); ++p) {
        json row = json::array();
        for (int q = 0; q <= g.q_max(); ++q) row.push_back(g.at(p, q));
        rows.push_back(std::move(row));
    }
    return rows;
}

json totals_to_json(const Grid& g, int k_max) {
    json out = json::array();
    for (int k = 0; k <= k_max; ++k) out.push_back(g.total(k));
    return out;
}

}  // namespace

json report_to_json(const CohomologyReport& rep) {
    json j = json::object();
    j["p_max"] = rep.p_max;
    j["q_max"] = rep.q_max;
    if (rep.n) j["n"] = *rep.n;
    j["has_conjugation"] = rep.has_conjugation;
    int km = rep.k_max();

    json hpq = json::object(), hk = json::object();
    for (Flavor f : {Flavor::dolbeault, Flavor::del, Flavor::bott_chern, Flavor::aeppli}) {
        hpq[flavor_name(f)] = grid_to_json(rep.h(f));
        hk[flavor_name(f)] = totals_to_json(rep.h(f), km);
    }
    j["hpq"] = std::move(hpq);
    j["hk"] = std::move(hk);
    j["betti"] = rep.betti;

    json var = json::object();
    var["a"] = grid_to_json(rep.var.a);
    var["b"] = grid_to_json(rep.var.b);
    var["c"] = grid_to_json(rep.var.c);
    var["d"] = grid_to_json(rep.var.d);
    var["e"] = grid_to_json(rep.var.e);
    var["f"] = grid_to_json(rep.var.f);
    json var_tot = json::object();
    var_tot["a"] = totals_to_json(rep.var.a, km);
    var_tot["b"] = totals_to_json(rep.var.b, km);
    var_tot["c"] = totals_to_json(rep.var.c, km);
    var_tot["d"] = totals_to_json(rep.var.d, km);
    var_tot["e"] = totals_to_json(rep.var.e, km);
    var_tot["f"] = totals_to_json(rep.var.f, km);
    var["totals"] = std::move(var_tot);
    j["varouchas"] = std::move(var);

    if (!rep.pages.empty()) {
        json spectral = json::object();
        spectral["r_max"] = rep.r_max;
        json pages = json::array();
        for (std::size_t i = 0; i < rep.pages.size(); ++i)
            pages.push_back({{"r", static_cast<int>(i) + 1}, {"dims", grid_to_json(rep.pages[i])}});
        spectral["pages"] = std::move(pages);
        j["spectral"] = std::move(spectral);
    }

    if (!rep.maps.empty()) {
        json maps = json::array();
        for (const auto& e : rep.maps) {
            json m = json::object();
            m["map"] = e.map;
            if (e.p >= 0) m["p"] = e.p;
            if (e.q >= 0) m["q"] = e.q;
            m["k"] = e.k;
            m["domain_dim"] = e.domain_dim;
            m["codomain_dim"] = e.codomain_dim;
            m["rank"] = e.rank;
            m["injective"] = e.injective;
            m["surjective"] = e.surjective;
            maps.push_back(std::move(m));
        }
        j["natural_maps"] = std::move(maps);
    }

    json verdicts = json::object();
    verdicts["sequences_ok"] = rep.sequences_ok;
    verdicts["structural_ok"] = rep.structural_ok;
    verdicts["ek_recursion_ok"] = rep.ek_recursion_ok;
    verdicts["symmetry_ok"] = rep.symmetry_ok ? json(*rep.symmetry_ok) : json(nullptr);
    verdicts["excess_identity_ok"] =
        rep.excess_identity_ok ? json(*rep.excess_identity_ok) : json(nullptr);
    verdicts["frolicher_all_k"] = rep.inequalities.frolicher_all_k;
    verdicts["bc_inequality_all_k"] = rep.inequalities.bc_total_all_k;
    verdicts["bc_inequality_pointwise_strict_somewhere"] =
        !rep.inequalities.pointwise_strict_at.empty();
    verdicts["pointwise_inequality_all"] =
        rep.inequalities.pointwise_all ? json(*rep.inequalities.pointwise_all) : json(nullptr);
    verdicts["bc_equality_all_k"] = rep.bc_equality_all_k;
    verdicts["frolicher_equality_all_k"] = rep.frolicher_equality_all_k;
    verdicts["lemma_direct"] = rep.lemma ? json(*rep.lemma) : json(nullptr);
    verdicts["bc_surjectivity_ok"] = rep.bc_surjectivity_ok ? json(*rep.bc_surjectivity_ok) : json(nullptr);
    verdicts["e1_equals_einf"] = rep.e1_equals_einf ? json(*rep.e1_equals_einf) : json(nullptr);
    j["verdicts"] = std::move(verdicts);

    json strict = json::object();
    strict["frolicher_strict_at"] = rep.inequalities.frolicher_strict_at;
    strict["bc_total_strict_at"] = rep.inequalities.bc_total_strict_at;
    json pw = json::array();
    for (auto [p, q] : rep.inequalities.pointwise_strict_at) pw.push_back({p, q});
    strict["pointwise_strict_at"] = std::move(pw);
    j["strictness"] = std::move(strict);
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << j.dump(1) << "\n";
}

bool is_model_document(const json& j) { return j.is_object() && j.contains("dphi"); }

}  // namespace ddbar::io
