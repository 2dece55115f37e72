#include "latticehom/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace latticehom {

using nlohmann::json;

std::string poset_to_json(const GradedPoset& P) {
    json j;
    j["elements"] = P.labels;
    j["rank"] = P.rank_of;
    json covers = json::array();
    for (auto [lo, hi] : P.covers) covers.push_back({lo, hi});
    j["covers"] = covers;
    return j.dump(2);
}

GradedPoset poset_from_json(const std::string& text) {
    json j = json::parse(text);
    GradedPoset P;
    for (auto& e : j.at("elements")) P.labels.push_back(e.get<std::string>());
    for (auto& r : j.at("rank")) P.rank_of.push_back(r.get<int>());
    if (P.labels.size() != P.rank_of.size())
        throw std::invalid_argument("poset json: rank table size mismatch");
    for (auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2)
            throw std::invalid_argument("poset json: bad cover pair");
        P.covers.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    P.finalize();
    return P;
}

static uint32_t parse_ground_subset(const json& arr,
                                    const std::vector<std::string>& labels) {
    uint32_t mask = 0;
    for (auto& e : arr) {
        int idx = -1;
        if (e.is_number_integer()) {
            idx = e.get<int>();
        } else {
            std::string s = e.get<std::string>();
            for (size_t i = 0; i < labels.size(); ++i)
                if (labels[i] == s) idx = (int)i;
        }
        if (idx < 0 || idx >= (int)labels.size())
            throw std::invalid_argument("matroid json: unknown ground element");
        mask |= 1u << idx;
    }
    return mask;
}

Matroid matroid_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.contains("vertices")) {
        int nvert = j.at("vertices").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (auto& e : j.at("edges"))
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        return Matroid::graphic(nvert, edges);
    }
    std::vector<std::string> labels;
    for (auto& g : j.at("ground")) {
        if (g.is_number_integer())
            labels.push_back(std::to_string(g.get<int>()));
        else
            labels.push_back(g.get<std::string>());
    }
    int m = (int)labels.size();
    if (j.contains("bases")) {
        std::vector<uint32_t> bases;
        for (auto& b : j.at("bases")) bases.push_back(parse_ground_subset(b, labels));
        return Matroid::from_bases(m, std::move(bases), std::move(labels));
    }
    if (j.contains("circuits")) {
        std::vector<uint32_t> circuits;
        for (auto& c : j.at("circuits"))
            circuits.push_back(parse_ground_subset(c, labels));
        return Matroid::from_circuits(m, std::move(circuits), std::move(labels));
    }
    throw std::invalid_argument("matroid json: need bases or circuits");
}

static json filling_json(const Lattice& L, const RibbonFilling& F) {
    json j;
    j["shape"] = F.shape.rows;
    json rows = json::array();
    int acc = 0;
    for (int len : F.shape.rows) {
        json row = json::array();
        for (int k = 0; k < len; ++k) row.push_back(L.atom_name(F.word[acc + k]));
        acc += len;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

std::string filling_to_json(const Lattice& L, const RibbonFilling& F) {
    return filling_json(L, F).dump(2);
}

std::string basis_to_json(const Lattice& L, const std::vector<BasisElement>& basis) {
    json arr = json::array();
    for (auto& e : basis) {
        json item;
        item["filling"] = filling_json(L, e.filling);
        json terms = json::array();
        for (auto& [chain, coeff] : e.chain_vec.terms) {
            json t;
            json c = json::array();
            for (int x : chain) c.push_back(L.P.labels[x]);
            t["chain"] = c;
            t["coeff"] = to_string(coeff);
            terms.push_back(t);
        }
        item["chain_terms"] = terms;
        arr.push_back(item);
    }
    return arr.dump(2);
}

std::string decomposition_to_csv(const IrrepDecomposition& dec) {
    std::ostringstream os;
    os << "n,lambda,mult\n";
    for (auto& [lam, m] : dec.mult)
        os << dec.n << ",\"" << partition_to_string(lam) << "\"," << m << "\n";
    return os.str();
}

std::string decomposition_to_json(const IrrepDecomposition& dec) {
    json j;
    j["n"] = dec.n;
    json mults = json::array();
    for (auto& [lam, m] : dec.mult) {
        json item;
        item["lambda"] = lam;
        item["mult"] = m;
        mults.push_back(item);
    }
    j["mults"] = mults;
    return j.dump(2);
}

std::string class_function_to_csv(const ClassFunction& chi) {
    std::ostringstream os;
    os << "n,cycle_type,value\n";
    for (auto& [mu, v] : chi.values)
        os << chi.n << ",\"" << partition_to_string(mu) << "\"," << to_string(v) << "\n";
    return os.str();
}

std::string class_function_to_json(const ClassFunction& chi) {
    json j;
    j["n"] = chi.n;
    json vals = json::array();
    for (auto& [mu, v] : chi.values) {
        json item;
        item["cycle_type"] = mu;
        item["value"] = to_string(v);
        vals.push_back(item);
    }
    j["values"] = vals;
    return j.dump(2);
}

std::string stability_report_to_json(const StabilityReport& rep) {
    json j;
    j["bound"] = rep.predicted_bound;
    if (rep.stable_at)
        j["stable_at"] = *rep.stable_at;
    else
        j["stable_at"] = nullptr;
    j["sharp"] = rep.sharp;
    j["inconclusive"] = rep.inconclusive;
    j["witness"] = rep.witness;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    return j.dump(2);
}

}  // namespace latticehom
