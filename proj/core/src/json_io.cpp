#include "padcell/json_io.hpp"

#include "padcell/parser.hpp"
#include "padcell/printer.hpp"

namespace padcell {

namespace {

const char* kind_name(CosetKind k) {
    switch (k) {
    case CosetKind::Pn: return "Pn";
    case CosetKind::Qnm: return "Qnm";
    case CosetKind::Trivial: return "Trivial";
    default: return "Zero";
    }
}

CosetKind kind_from_name(const std::string& s) {
    if (s == "Pn") return CosetKind::Pn;
    if (s == "Qnm") return CosetKind::Qnm;
    if (s == "Trivial") return CosetKind::Trivial;
    if (s == "Zero") return CosetKind::Zero;
    throw std::invalid_argument("unknown coset kind " + s);
}

nlohmann::json bound_to_json(const std::optional<CellBound>& b) {
    if (!b) return nullptr;
    return nlohmann::json{{"term", print(b->term)}, {"strict", b->strict}};
}

std::optional<CellBound> bound_from_json(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return CellBound{parse_term(j.at("term").get<std::string>()), j.at("strict").get<bool>()};
}

std::string ext_text(const ExtInt& e) {
    if (e.is_pos_inf()) return "+inf";
    if (e.is_neg_inf()) return "-inf";
    return std::to_string(e.value());
}

} // namespace

nlohmann::json cell_to_json(const Cell& c) {
    nlohmann::json j;
    j["var"] = c.variable;
    j["center"] = print(c.center);
    j["lower"] = bound_to_json(c.lower);
    j["upper"] = bound_to_json(c.upper);
    j["coset"] = {{"lambda", to_string(c.coset.lambda)},
                  {"kind", kind_name(c.coset.spec.kind)},
                  {"n", c.coset.spec.n},
                  {"m", c.coset.spec.m}};
    return j;
}

Cell cell_from_json(const nlohmann::json& j) {
    Cell c;
    c.variable = j.at("var").get<std::string>();
    c.center = parse_term(j.at("center").get<std::string>());
    c.lower = bound_from_json(j.at("lower"));
    c.upper = bound_from_json(j.at("upper"));
    const auto& co = j.at("coset");
    c.coset.lambda = rat_from_string(co.at("lambda").get<std::string>());
    CosetSpec spec = CosetSpec::trivial();
    spec.kind = kind_from_name(co.at("kind").get<std::string>());
    spec.n = co.at("n").get<long>();
    spec.m = co.at("m").get<int>();
    c.coset.spec = spec;
    return c;
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
    nlohmann::json cells = nlohmann::json::array();
    for (const Cell& c : d.cells) cells.push_back(cell_to_json(c));
    return nlohmann::json{{"input", print(d.input)},
                          {"var", d.variable},
                          {"cells", std::move(cells)},
                          {"stats",
                           {{"depth_cap", d.undecided_budget},
                            {"ball_splits", d.ball_splits},
                            {"recenterings", d.recenterings}}}};
}

nlohmann::json qe_condition_to_json(const QECondition& q) {
    nlohmann::json j;
    if (q.value) j["value"] = *q.value;
    else j["value"] = nullptr;
    if (!q.residue_cases.empty()) j["residue_cases"] = q.residue_cases;
    return j;
}

nlohmann::json equiv_report_to_json(const EquivReport& r, long prime) {
    nlohmann::json dis = nlohmann::json::array();
    for (const Disagreement& d : r.disagreements)
        dis.push_back({{"point", d.point.text(prime)},
                       {"lhs", tri_str(d.lhs)},
                       {"rhs", tri_str(d.rhs)}});
    nlohmann::json und = nlohmann::json::array();
    for (const GridPoint& gp : r.undecided) und.push_back(gp.text(prime));
    return nlohmann::json{{"agree_count", r.agree_count},
                          {"equivalent", r.equivalent()},
                          {"disagreements", std::move(dis)},
                          {"undecided", std::move(und)}};
}

nlohmann::json coset_table_to_json(long n, int m, long prime) {
    nlohmann::json reps = nlohmann::json::array();
    for (const Int& r : coset_reps(n, m, prime)) reps.push_back(r.convert_to<long long>());
    return nlohmann::json{
        {"prime", prime}, {"n", n}, {"m", m}, {"count", reps.size()}, {"reps", std::move(reps)}};
}

nlohmann::json normal_forms_to_json(const std::vector<NormalForm>& nfs,
                                    const std::string& var) {
    nlohmann::json out = nlohmann::json::array();
    for (const NormalForm& nf : nfs) {
        nlohmann::json j;
        auto text = region_text(nf.region, var);
        j["region"] = text ? *text : "false";
        j["q"] = to_string(nf.linear_q);
        j["c"] = to_string(nf.linear_c);
        j["tail_bound"] = ext_text(nf.tail_bound);
        if (nf.expansion) {
            nlohmann::json coeffs = nlohmann::json::array();
            for (const Rat& a : nf.expansion->coeffs) coeffs.push_back(to_string(a));
            j["expansion"] = {{"center", to_string(nf.expansion->center)},
                              {"coeffs", std::move(coeffs)}};
        } else {
            j["expansion"] = nullptr;
        }
        out.push_back(std::move(j));
    }
    return out;
}

} // namespace padcell
