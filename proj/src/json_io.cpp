#include "partrec/json_io.hpp"

#include <stdexcept>

namespace partrec {

using nlohmann::json;

json series_to_json(const TruncSeries& s) {
    json coeffs = json::array();
    for (std::size_t n = 0; n <= s.order(); ++n) coeffs.push_back(to_string(s[n]));
    return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

TruncSeries series_from_json(const json& j) {
    const std::size_t order = j.at("order").get<std::size_t>();
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != order + 1)
        throw std::invalid_argument("series_from_json: coefficient count != order+1");
    std::vector<Rat> c;
    c.reserve(order + 1);
    for (const auto& e : coeffs) c.push_back(rat_from_string(e.get<std::string>()));
    return TruncSeries(order, std::move(c));
}

namespace {

const char* kind_name(PartitionKind k) {
    switch (k) {
        case PartitionKind::ordinary: return "ordinary";
        case PartitionKind::colored: return "colored";
        case PartitionKind::regular: return "regular";
    }
    throw std::logic_error("kind_name: bad enum");
}

PartitionKind kind_from_name(const std::string& s) {
    if (s == "ordinary") return PartitionKind::ordinary;
    if (s == "colored") return PartitionKind::colored;
    if (s == "regular") return PartitionKind::regular;
    throw std::invalid_argument("unknown partition kind: " + s);
}

}  // namespace

json table_to_json(const PartitionTable& t) {
    json values = json::array();
    for (const auto& v : t.values()) values.push_back(v.get_str());
    return json{{"kind", kind_name(t.kind())}, {"t", t.t()}, {"values", std::move(values)}};
}

PartitionTable table_from_json(const json& j) {
    std::vector<Int> values;
    for (const auto& e : j.at("values")) values.emplace_back(e.get<std::string>());
    return PartitionTable(kind_from_name(j.at("kind").get<std::string>()),
                          j.at("t").get<unsigned>(), std::move(values));
}

json eigentable_to_json(const EigenformTable& t) {
    json forms = json::array();
    for (const auto& f : t.forms) {
        json coeffs = json::array();
        if (f.is_exact()) {
            for (const auto& c : f.exact) coeffs.push_back(c.get_str());
            forms.push_back(json{{"exact", true}, {"coeffs", std::move(coeffs)}});
        } else {
            for (const auto& c : f.numeric) coeffs.push_back(c.to_string());
            forms.push_back(json{{"exact", false}, {"coeffs", std::move(coeffs)}});
        }
    }
    return json{{"weight", t.weight},
                {"dim", t.dim},
                {"prec", t.prec_digits},
                {"forms", std::move(forms)}};
}

EigenformTable eigentable_from_json(const json& j) {
    EigenformTable t;
    t.weight = j.at("weight").get<unsigned>();
    t.dim = j.at("dim").get<unsigned>();
    t.prec_digits = j.at("prec").get<long>();
    for (const auto& jf : j.at("forms")) {
        Eigenform f;
        if (jf.at("exact").get<bool>()) {
            for (const auto& e : jf.at("coeffs")) f.exact.emplace_back(e.get<std::string>());
        } else {
            for (const auto& e : jf.at("coeffs"))
                f.numeric.push_back(RealHP::from_string(e.get<std::string>(), t.prec_digits));
        }
        t.forms.push_back(std::move(f));
    }
    return t;
}

json theorem2_report_to_json(const Theorem2Report& r) {
    json j{{"v", r.v},
           {"N", r.N},
           {"status", r.ok ? "pass" : "fail"},
           {"alpha", to_string(r.alpha)}};
    j["first_mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
    j["beta"] = r.beta ? json(to_string(*r.beta)) : json(nullptr);
    return j;
}

json theorem3_report_to_json(const Theorem3Report& r) {
    return json{{"v", r.v},
                {"n_max", r.n_max},
                {"M", r.params.M},
                {"N", r.params.N},
                {"prec", r.params.prec},
                {"max_residual", r.max_residual},
                {"tail_bound", r.tail_bound},
                {"status", r.status}};
}

}  // namespace partrec
