#ifndef POSETCOHO_POSET_HPP
#define POSETCOHO_POSET_HPP

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace posetcoho {

struct UnknownIdError : std::runtime_error {
    explicit UnknownIdError(const std::string& id) : std::runtime_error("unknown object id: " + id) {}
};

struct ValidationIssue {
    std::string rule;    // short machine-readable tag
    std::string detail;  // human-readable witness
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    void add(std::string rule, std::string detail) { issues.push_back({std::move(rule), std::move(detail)}); }
    std::string summary() const;
};

enum class UnderVariant { All, Strict, FixedDegree, DegreeSet };

struct UnderCategoryView {
    int base = -1;
    UnderVariant variant = UnderVariant::All;
    std::vector<int> members;  // sorted by id order (= index order)
};

/// Finite graded poset. Arrows run from high degree to low degree: leq(p, q)
/// means there is an arrow p -> q, and then degree(p) >= degree(q). Objects
/// are indexed in lexicographic id order; all derived bases inherit it.
class GradedPoset {
public:
    GradedPoset() = default;
    GradedPoset(std::vector<std::string> ids, std::vector<int> degrees,
                const std::vector<std::pair<std::string, std::string>>& relations);

    std::size_t size() const { return ids_.size(); }
    const std::string& id(int p) const { return ids_[p]; }
    int index(const std::string& id) const;
    int degree(int p) const { return degree_[p]; }
    int max_degree() const;

    bool leq(int p, int q) const { return closure_[p][q] != 0; }
    bool lt(int p, int q) const { return p != q && leq(p, q); }
    /// p precedes q: p < q with no strictly intermediate object.
    bool precedes(int p, int q) const;

    /// Covering successors: {q : p precedes q}.
    const std::vector<int>& hasse_succ(int p) const { return hasse_[p]; }

    UnderCategoryView under(int p0, UnderVariant variant, int n = 0, const std::vector<int>& degree_set = {}) const;
    std::vector<int> under_all(int p0) const;
    std::vector<int> under_strict(int p0) const;
    std::vector<int> under_fixed(int p0, int n) const;

    std::vector<int> objects_of_degree(int n) const;

    GradedPoset opposite() const;

    ValidationReport validate() const;

    static GradedPoset from_json(const nlohmann::json& j, bool shift_degrees = false);
    nlohmann::json to_json() const;

private:
    std::vector<std::string> ids_;
    std::vector<int> degree_;
    std::vector<std::vector<char>> closure_;  // reflexive-transitive closure
    std::vector<std::vector<int>> hasse_;
    std::map<std::string, int> index_;

    void finish_construction();
};

}  // namespace posetcoho

#endif
