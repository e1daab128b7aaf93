#include "posetcoho/poset.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace posetcoho {

std::string ValidationReport::summary() const {
    if (ok()) return "valid";
    std::ostringstream os;
    for (const auto& i : issues) os << i.rule << ": " << i.detail << "\n";
    return os.str();
}

GradedPoset::GradedPoset(std::vector<std::string> ids, std::vector<int> degrees,
                         const std::vector<std::pair<std::string, std::string>>& relations) {
    std::vector<std::size_t> order(ids.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });
    for (std::size_t k : order) {
        if (index_.count(ids[k])) throw std::invalid_argument("duplicate object id: " + ids[k]);
        index_[ids[k]] = static_cast<int>(ids_.size());
        ids_.push_back(ids[k]);
        degree_.push_back(degrees[k]);
    }
    const std::size_t n = ids_.size();
    closure_.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) closure_[i][i] = 1;
    for (const auto& [a, b] : relations) closure_[index(a)][index(b)] = 1;
    // Warshall closure over the generating relations
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (closure_[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (closure_[k][j]) closure_[i][j] = 1;
    finish_construction();
}

void GradedPoset::finish_construction() {
    const std::size_t n = ids_.size();
    hasse_.assign(n, {});
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (p == q || !closure_[p][q] || closure_[q][p]) continue;
            bool covering = true;
            for (std::size_t r = 0; r < n && covering; ++r)
                if (r != p && r != q && closure_[p][r] && closure_[r][q] && !closure_[r][p] && !closure_[q][r])
                    covering = false;
            if (covering) hasse_[p].push_back(static_cast<int>(q));
        }
}

int GradedPoset::index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownIdError(id);
    return it->second;
}

int GradedPoset::max_degree() const {
    int m = 0;
    for (int d : degree_) m = std::max(m, d);
    return m;
}

bool GradedPoset::precedes(int p, int q) const {
    if (!lt(p, q)) return false;
    for (std::size_t r = 0; r < size(); ++r)
        if (static_cast<int>(r) != p && static_cast<int>(r) != q && lt(p, static_cast<int>(r)) &&
            lt(static_cast<int>(r), q))
            return false;
    return true;
}

UnderCategoryView GradedPoset::under(int p0, UnderVariant variant, int n, const std::vector<int>& degree_set) const {
    if (p0 < 0 || p0 >= static_cast<int>(size())) throw UnknownIdError(std::to_string(p0));
    UnderCategoryView v{p0, variant, {}};
    for (std::size_t q = 0; q < size(); ++q) {
        int qi = static_cast<int>(q);
        if (!leq(p0, qi)) continue;
        switch (variant) {
            case UnderVariant::All: break;
            case UnderVariant::Strict:
                if (qi == p0) continue;
                break;
            case UnderVariant::FixedDegree:
                if (degree(qi) != n) continue;
                break;
            case UnderVariant::DegreeSet:
                if (std::find(degree_set.begin(), degree_set.end(), degree(qi)) == degree_set.end()) continue;
                break;
        }
        v.members.push_back(qi);
    }
    return v;
}

std::vector<int> GradedPoset::under_all(int p0) const { return under(p0, UnderVariant::All).members; }
std::vector<int> GradedPoset::under_strict(int p0) const { return under(p0, UnderVariant::Strict).members; }
std::vector<int> GradedPoset::under_fixed(int p0, int n) const {
    return under(p0, UnderVariant::FixedDegree, n).members;
}

std::vector<int> GradedPoset::objects_of_degree(int n) const {
    std::vector<int> out;
    for (std::size_t p = 0; p < size(); ++p)
        if (degree_[p] == n) out.push_back(static_cast<int>(p));
    return out;
}

GradedPoset GradedPoset::opposite() const {
    GradedPoset op;
    op.ids_ = ids_;
    op.index_ = index_;
    // reversing the arrows flips the grading top-to-bottom
    const int top = max_degree();
    op.degree_.resize(degree_.size());
    for (std::size_t p = 0; p < degree_.size(); ++p) op.degree_[p] = top - degree_[p];
    const std::size_t n = size();
    op.closure_.assign(n, std::vector<char>(n, 0));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) op.closure_[p][q] = closure_[q][p];
    op.finish_construction();
    return op;
}

ValidationReport GradedPoset::validate() const {
    ValidationReport rep;
    const std::size_t n = size();
    for (std::size_t p = 0; p < n; ++p)
        if (degree_[p] < 0) rep.add("negative-degree", id(static_cast<int>(p)));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            if (closure_[p][q] && closure_[q][p])
                rep.add("antisymmetry", id(static_cast<int>(p)) + " <= " + id(static_cast<int>(q)) +
                                            " and conversely, but they differ");
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (closure_[p][q])
                for (std::size_t r = 0; r < n; ++r)
                    if (closure_[q][r] && !closure_[p][r])
                        rep.add("transitivity", id(static_cast<int>(p)) + " <= " + id(static_cast<int>(q)) + " <= " +
                                                    id(static_cast<int>(r)));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            int pi = static_cast<int>(p), qi = static_cast<int>(q);
            if (pi == qi || !closure_[p][q] || closure_[q][p]) continue;
            if (degree_[p] < degree_[q])
                rep.add("degree-order-reversing",
                        id(pi) + " <= " + id(qi) + " but deg " + std::to_string(degree_[p]) + " < " +
                            std::to_string(degree_[q]));
            if (precedes(pi, qi) && degree_[p] != degree_[q] + 1)
                rep.add("preceding-step",
                        id(pi) + " precedes " + id(qi) + " but deg " + std::to_string(degree_[p]) +
                            " != " + std::to_string(degree_[q]) + " + 1");
        }
    return rep;
}

GradedPoset GradedPoset::from_json(const nlohmann::json& j, bool shift_degrees) {
    std::vector<std::string> ids;
    std::vector<int> degrees;
    for (const auto& o : j.at("objects")) {
        ids.push_back(o.at("id").get<std::string>());
        degrees.push_back(o.at("degree").get<int>());
    }
    if (shift_degrees && !degrees.empty()) {
        int lo = *std::min_element(degrees.begin(), degrees.end());
        for (int& d : degrees) d -= lo;
    }
    std::vector<std::pair<std::string, std::string>> rels;
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) rels.emplace_back(r.at(0).get<std::string>(), r.at(1).get<std::string>());
    return GradedPoset(std::move(ids), std::move(degrees), rels);
}

nlohmann::json GradedPoset::to_json() const {
    nlohmann::json objects = nlohmann::json::array();
    for (std::size_t p = 0; p < size(); ++p)
        objects.push_back({{"id", ids_[p]}, {"degree", degree_[p]}});
    nlohmann::json rels = nlohmann::json::array();
    for (std::size_t p = 0; p < size(); ++p)
        for (int q : hasse_[p]) rels.push_back({ids_[p], ids_[q]});
    return {{"objects", objects}, {"relations", rels}};
}

}  // namespace posetcoho
