#pragma once

#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "lsa/approx.hpp"
#include "lsa/lld.hpp"
#include "lsa/tiling.hpp"

namespace lsa {

using json = nlohmann::ordered_json;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- matrix text format: "field rows cols" then row-major entries ----

template <class F>
void write_matrix_text(std::ostream& os, const Matrix<F>& m) {
    const F& f = m.field();
    os << f.spec().str() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << f.to_string(m.at(i, j));
        }
        os << '\n';
    }
}

template <class F>
std::string matrix_text(const Matrix<F>& m) {
    std::ostringstream os;
    write_matrix_text(os, m);
    return os.str();
}

// Field of a serialized matrix without consuming the stream position past
// the header.
FieldSpec read_matrix_header(std::istream& is, size_t& rows, size_t& cols);

template <class F>
Matrix<F> read_matrix_text(std::istream& is, const F& field) {
    size_t rows, cols;
    FieldSpec fs = read_matrix_header(is, rows, cols);
    if (!(fs == field.spec()))
        throw parse_error("matrix field " + fs.str() + " does not match " + field.spec().str());
    Matrix<F> m(field, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            std::string tok;
            if (!(is >> tok)) throw parse_error("truncated matrix body");
            m.at(i, j) = field.from_string(tok);
        }
    return m;
}

template <class F>
Matrix<F> parse_matrix_text(const std::string& s, const F& field) {
    std::istringstream is(s);
    return read_matrix_text(is, field);
}

// ---- JSON ----

json word_to_json(const Word& w);
Word word_from_json(const json& j);

json algebra_to_json(const AlgebraSpec& a);
AlgebraSpec algebra_from_json(const json& j);

json window_to_json(const FolnerWindow& w);
FolnerWindow window_from_json(const json& j);

json invariance_to_json(const InvarianceReport& r);
json sweep_to_json(const SweepReport& r);

inline json rat_to_json(const Rat& r) { return json(rat_str(r)); }

template <class F>
json approx_to_json(const ApproxMap<F>& phi) {
    json j;
    j["algebra"] = algebra_to_json(phi.algebra());
    j["field"] = phi.field().spec().str();
    j["n"] = phi.dim();
    j["degree_cap"] = phi.degree_cap();
    json prov;
    prov["kind"] = phi.provenance_name();
    if (const auto* fp = std::get_if<typename ApproxMap<F>::FolnerProv>(&phi.provenance())) {
        prov["window"] = window_to_json(fp->window);
        prov["d"] = fp->d;
        prov["invariance"] = invariance_to_json(fp->invariance);
    } else if (const auto* qp =
                   std::get_if<typename ApproxMap<F>::QuotientProv>(&phi.provenance())) {
        prov["m"] = qp->m;
    } else if (const auto* ap =
                   std::get_if<typename ApproxMap<F>::AmplifiedProv>(&phi.provenance())) {
        prov["copies"] = ap->copies;
        prov["pad"] = ap->pad;
        prov["source"] = approx_to_json(*ap->source);
    }
    j["provenance"] = std::move(prov);
    json table = json::array();
    for (const Word& w : phi.ball().words) {
        json entry;
        entry["word"] = word_to_json(w);
        entry["matrix"] = matrix_text(phi.matrix(w));
        table.push_back(std::move(entry));
    }
    j["table"] = std::move(table);
    return j;
}

template <class F>
ApproxMap<F> approx_from_json(const json& j, const F& field) {
    AlgebraSpec alg = algebra_from_json(j.at("algebra"));
    FieldSpec fs = FieldSpec::parse(j.at("field").get<std::string>());
    if (!(fs == field.spec())) throw parse_error("approx map over a different field");
    size_t n = j.at("n").get<size_t>();
    int cap = j.at("degree_cap").get<int>();
    typename ApproxMap<F>::TableProv prov;
    for (const auto& entry : j.at("table")) {
        Word w = word_from_json(entry.at("word"));
        Matrix<F> m = parse_matrix_text(entry.at("matrix").get<std::string>(), field);
        if (m.rows() != n || m.cols() != n) throw parse_error("table entry shape mismatch");
        prov.entries.emplace(std::move(w), std::move(m));
    }
    return ApproxMap<F>(std::move(alg), field, n, cap, std::move(prov));
}

template <class F>
json cert_to_json(const CertReport<F>& r) {
    json j;
    j["d"] = r.d;
    j["n"] = r.n;
    j["dim_U"] = r.dim_U;
    j["mult_ok"] = r.mult_ok;
    j["dim_ok"] = r.dim_ok;
    j["rank_policy"] = r.rank_policy;
    j["min_rank_seen"] = r.min_rank_seen;
    j["rank_ok"] = r.rank_ok;
    j["certified"] = r.certified;
    return j;
}

template <class F>
json tiling_to_json(const Tiling<F>& t) {
    const F& f = t.translates.field();
    json j;
    j["window"] = window_to_json(t.window);
    j["n"] = t.n;
    j["tiles"] = t.tile_count();
    j["covered_dim"] = t.covered_dim();
    json roots = json::array();
    for (const auto& v : t.roots) {
        json rv = json::array();
        for (const auto& x : v) rv.push_back(f.to_string(x));
        roots.push_back(std::move(rv));
    }
    j["roots"] = std::move(roots);
    return j;
}

template <class F>
json conjugacy_to_json(const ConjugacyResult<F>& r, bool include_matrix = true) {
    json j;
    if (include_matrix) j["conjugator"] = matrix_text(r.conjugator);
    j["window"] = window_to_json(r.window);
    j["tiles"] = r.tiles;
    json dist;
    for (const auto& [name, d] : r.generator_dist) dist[name] = rat_to_json(d);
    j["generator_dist"] = std::move(dist);
    j["achieved"] = rat_to_json(r.achieved);
    j["predicted"] = rat_to_json(r.predicted);
    j["epsilon"] = rat_to_json(r.epsilon);
    j["holds"] = r.holds;
    j["proof_bound"] = rat_to_json(r.proof_bound);
    j["proof_bound_applies"] = r.proof_bound_applies;
    return j;
}

template <class F>
json hyperfinite_to_json(const HyperfiniteDecomposition<F>& h) {
    json j;
    j["blocks"] = h.blocks;
    j["block_dim"] = h.block_dim;
    json defect;
    for (const auto& [name, d] : h.generator_defect) defect[name] = rat_to_json(d);
    j["generator_defect"] = std::move(defect);
    j["max_defect"] = rat_to_json(h.max_defect);
    return j;
}

}  // namespace lsa
