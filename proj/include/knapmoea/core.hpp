#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "knapmoea/rng.hpp"

namespace knapmoea {

/// Raised when a caller breaks a documented precondition (wrong solution
/// length, non-positive optimum, ...).
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Raised when instance parameters or configuration fail validation.
/// `failures` lists every precondition that did not hold.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg,
                             std::vector<std::string> failed = {})
        : std::runtime_error(msg), failures(std::move(failed)) {}
    std::vector<std::string> failures;
};

/// Raised when an exact-oracle request exceeds its size budget.
struct OracleCapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Item {
    double value;   // > 0, finite
    double weight;  // > 0, finite
};

struct KnapsackInstance {
    std::string name;
    int n = 0;
    std::vector<Item> items;  // index 0 holds item 1
    double capacity = 0.0;
    nlohmann::json family_params;  // empty object when not family-generated

    bool operator==(const KnapsackInstance& other) const;
};

/// Selection bitstring; bits[i] == 1 means item i+1 is in the knapsack.
struct Solution {
    std::vector<std::uint8_t> bits;

    Solution() = default;
    explicit Solution(int n) : bits(static_cast<std::size_t>(n), 0) {}

    int length() const { return static_cast<int>(bits.size()); }
    int ones() const;
    std::string to_string() const;  // leftmost char = item 1
    static Solution from_string(const std::string& s);

    bool operator==(const Solution& other) const { return bits == other.bits; }
};

struct Evaluation {
    double objective = 0.0;
    double violation = 0.0;
    bool feasible = true;
};

struct EvaluatedSolution {
    Solution solution;
    Evaluation evaluation;
};

/// Objective and constraint violation of a solution.
///
/// objective = sum of selected values, violation = max(0, weight - W),
/// both summed in ascending item order so equal item multisets produce
/// bit-identical doubles. feasible iff weight <= W, compared exactly.
Evaluation evaluate(const KnapsackInstance& instance, const Solution& solution);

/// Total weight of the selected items, summed in ascending item order.
double solution_weight(const KnapsackInstance& instance, const Solution& solution);

/// Strict Pareto dominance for (maximize objective, minimize violation):
/// no worse in both, strictly better in at least one. Equal points never
/// dominate each other.
bool dominates(const Evaluation& a, const Evaluation& b);

/// Members of `points` not dominated by any other member, in input order.
/// Duplicates of a non-dominated point are all kept.
std::vector<EvaluatedSolution> nondominated_filter(
    const std::vector<EvaluatedSolution>& points);

/// Flip each bit independently with probability `rate`. Consumes exactly
/// one uniform draw per bit, in ascending index order, regardless of
/// whether the bit flips; this keeps downstream draws aligned across
/// configurations.
Solution bitwise_mutate(const Solution& solution, double rate, RandomStream& rng);

/// objective / optimum for a feasible solution's objective value.
double approximation_ratio(double objective, double optimum);

}  // namespace knapmoea
