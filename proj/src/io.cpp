#include "lsa/io.hpp"

namespace lsa {

FieldSpec read_matrix_header(std::istream& is, size_t& rows, size_t& cols) {
    std::string field;
    if (!(is >> field >> rows >> cols)) throw parse_error("bad matrix header");
    return FieldSpec::parse(field);
}

json word_to_json(const Word& w) {
    json j = json::array();
    for (long long x : w.e) j.push_back(x);
    return j;
}

Word word_from_json(const json& j) {
    Word w;
    for (const auto& x : j) w.e.push_back(x.get<long long>());
    return w;
}

json algebra_to_json(const AlgebraSpec& a) {
    json j;
    switch (a.kind) {
        case AlgebraSpec::Kind::Polynomial:
            j["kind"] = "polynomial";
            j["vars"] = a.rank;
            break;
        case AlgebraSpec::Kind::Laurent:
            j["kind"] = "laurent";
            j["rank"] = a.rank;
            break;
        case AlgebraSpec::Kind::Heisenberg:
            j["kind"] = "heisenberg";
            break;
        case AlgebraSpec::Kind::Custom: {
            j["kind"] = "custom";
            j["generators"] = a.gen_names;
            json rules = json::array();
            for (const auto& r : a.rules) rules.push_back(json{{"lhs", r.lhs}, {"rhs", r.rhs}});
            j["rules"] = std::move(rules);
            break;
        }
    }
    return j;
}

AlgebraSpec algebra_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "polynomial") return AlgebraSpec::polynomial(j.value("vars", 1));
    if (kind == "laurent") return AlgebraSpec::laurent(j.value("rank", 1));
    if (kind == "heisenberg") return AlgebraSpec::heisenberg();
    if (kind == "custom") {
        std::vector<std::string> names = j.at("generators").get<std::vector<std::string>>();
        std::vector<RewriteRule> rules;
        for (const auto& r : j.at("rules"))
            rules.push_back(RewriteRule{r.at("lhs").get<std::vector<int>>(),
                                        r.at("rhs").get<std::vector<int>>()});
        return AlgebraSpec::custom(std::move(names), std::move(rules));
    }
    throw parse_error("unknown algebra kind: " + kind);
}

json window_to_json(const FolnerWindow& w) {
    json j;
    j["algebra"] = algebra_to_json(w.algebra);
    j["params"] = json{{"n", w.size_param}};
    json words = json::array();
    for (const Word& x : w.words) words.push_back(word_to_json(x));
    j["words"] = std::move(words);
    return j;
}

FolnerWindow window_from_json(const json& j) {
    AlgebraSpec alg = algebra_from_json(j.at("algebra"));
    std::vector<Word> words;
    for (const auto& x : j.at("words")) words.push_back(word_from_json(x));
    FolnerWindow w = window_from_words(alg, std::move(words));
    if (j.contains("params") && j.at("params").contains("n"))
        w.size_param = j.at("params").at("n").get<long long>();
    return w;
}

json invariance_to_json(const InvarianceReport& r) {
    json j;
    j["dim_W"] = r.dim_W;
    j["dim_VW"] = r.dim_VW;
    j["epsilon"] = rat_str(r.epsilon);
    j["holds"] = r.holds;
    return j;
}

json sweep_to_json(const SweepReport& r) {
    json j;
    j["a"] = r.a;
    j["b"] = r.b;
    j["d"] = r.d;
    j["field"] = r.field.str();
    j["families"] = r.families;
    j["lld_families"] = r.lld_families;
    j["bms_bound"] = r.bms_bound;
    j["amitsur_bound"] = r.amitsur_bound;
    j["max_min_rank"] = r.max_min_rank;
    j["all_within_bms"] = r.all_within_bms;
    j["all_within_amitsur"] = r.all_within_amitsur;
    if (!r.first_violation.empty()) j["first_violation"] = r.first_violation;
    return j;
}

}  // namespace lsa
