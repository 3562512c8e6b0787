#include "knapmoea/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace knapmoea {

bool KnapsackInstance::operator==(const KnapsackInstance& other) const {
    if (name != other.name || n != other.n || items.size() != other.items.size())
        return false;
    // bit-exact comparison on purpose: round-trips must be lossless
    if (std::memcmp(&capacity, &other.capacity, sizeof(double)) != 0) return false;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (std::memcmp(&items[i].value, &other.items[i].value, sizeof(double)) != 0 ||
            std::memcmp(&items[i].weight, &other.items[i].weight, sizeof(double)) != 0)
            return false;
    }
    return family_params == other.family_params;
}

int Solution::ones() const {
    return static_cast<int>(std::count(bits.begin(), bits.end(), 1));
}

std::string Solution::to_string() const {
    std::string s(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) s[i] = '1';
    return s;
}

Solution Solution::from_string(const std::string& s) {
    Solution sol(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            sol.bits[i] = 1;
        else if (s[i] != '0')
            throw ContractViolation("solution string must contain only '0'/'1'");
    }
    return sol;
}

double solution_weight(const KnapsackInstance& instance, const Solution& solution) {
    if (solution.length() != instance.n)
        throw ContractViolation("solution length " + std::to_string(solution.length()) +
                                " does not match instance n " + std::to_string(instance.n));
    double weight = 0.0;
    for (int i = 0; i < instance.n; ++i)
        if (solution.bits[i]) weight += instance.items[i].weight;
    return weight;
}

Evaluation evaluate(const KnapsackInstance& instance, const Solution& solution) {
    if (solution.length() != instance.n)
        throw ContractViolation("solution length " + std::to_string(solution.length()) +
                                " does not match instance n " + std::to_string(instance.n));
    double objective = 0.0;
    double weight = 0.0;
    for (int i = 0; i < instance.n; ++i) {
        if (solution.bits[i]) {
            objective += instance.items[i].value;
            weight += instance.items[i].weight;
        }
    }
    Evaluation eval;
    eval.objective = objective;
    eval.feasible = weight <= instance.capacity;
    eval.violation = eval.feasible ? 0.0 : weight - instance.capacity;
    return eval;
}

bool dominates(const Evaluation& a, const Evaluation& b) {
    const bool no_worse = a.objective >= b.objective && a.violation <= b.violation;
    const bool strictly_better = a.objective > b.objective || a.violation < b.violation;
    return no_worse && strictly_better;
}

std::vector<EvaluatedSolution> nondominated_filter(
    const std::vector<EvaluatedSolution>& points) {
    std::vector<EvaluatedSolution> kept;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j != i && dominates(points[j].evaluation, points[i].evaluation)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(points[i]);
    }
    return kept;
}

Solution bitwise_mutate(const Solution& solution, double rate, RandomStream& rng) {
    if (rate < 0.0 || rate > 1.0)
        throw ContractViolation("mutation rate must lie in [0, 1]");
    Solution child = solution;
    for (std::size_t i = 0; i < child.bits.size(); ++i) {
        if (rng.uniform01() < rate) child.bits[i] ^= 1;
    }
    return child;
}

double approximation_ratio(double objective, double optimum) {
    if (!(optimum > 0.0))
        throw ContractViolation("approximation ratio requires optimum > 0");
    return objective / optimum;
}

}  // namespace knapmoea
