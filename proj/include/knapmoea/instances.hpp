#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "knapmoea/core.hpp"

namespace knapmoea {

// ---------------------------------------------------------------------------
// Adversarial instance families
// ---------------------------------------------------------------------------

/// Instance 1: one heavy optimum item, a block I of medium items whose
/// any-(alpha*n/2)-subset is exactly capacity-tight, and a block J of tiny
/// items that turn tight solutions infeasible.
struct Instance1Params {
    double alpha;  // in (0,1)
    int n;         // even; alpha*n/2 integral; n > 2/alpha; 2/alpha > n*alpha^(2 ln n)/2
};

/// Instance 2: two optimum items H, near-heavy items I, dust items J and
/// quarter-weight items K.
struct Instance2Params {
    int n;  // n/4 integral, n >= 12
};

std::vector<std::string> validate_instance1(const Instance1Params& params);
std::vector<std::string> validate_instance2(const Instance2Params& params);

KnapsackInstance make_instance1(const Instance1Params& params);
KnapsackInstance make_instance2(const Instance2Params& params);

// ---------------------------------------------------------------------------
// Solution catalogs
// ---------------------------------------------------------------------------

/// 1-based item index blocks of a family instance. K is empty for Instance 1.
struct IndexSets {
    std::vector<int> H, I, J, K;
};

/// Bounds claimed for the x_vioc class: f in (f_lo, f_hi], v in (v_lo, v_hi).
struct XviocClaim {
    double f_lo, f_hi;
    double v_lo, v_hi;
};

/// Closed-form objective/violation values the construction claims for each
/// solution class. Stored verbatim; verify_catalog checks them against
/// evaluate() instead of trusting them.
struct CatalogClaims {
    double f_xmax;
    double f_xloc;
    double f_xvioa, v_xvioa;
    double f_xviob, v_xviob;
    std::optional<XviocClaim> xvioc;
};

struct SolutionCatalog {
    std::string family;  // "instance1" | "instance2"
    int n = 0;
    IndexSets index_sets;
    /// Instance 1: number of I bits in an x_loc (= alpha*n/2).
    /// Instance 2: number of K bits in an x_loc (= n/4 - 2).
    int loc_select_count = 0;
    Solution x_max;
    Solution sample_x_loc;
    Solution sample_x_vioa;
    Solution sample_x_viob;
    std::optional<Solution> sample_x_vioc;
    CatalogClaims claimed_values{};
};

SolutionCatalog catalog_instance1(const Instance1Params& params, RandomStream& rng);
SolutionCatalog catalog_instance2(const Instance2Params& params, RandomStream& rng);

/// Uniform draw from the x_loc solution class described by `catalog`.
Solution sample_xloc_class(const SolutionCatalog& catalog, RandomStream& rng);
/// Uniform draw from the x_vioa class: a fresh x_loc base plus one extra
/// J item (Instance 1) or K item (Instance 2).
Solution sample_xvioa_class(const SolutionCatalog& catalog, RandomStream& rng);

// ---------------------------------------------------------------------------
// Catalog verification
// ---------------------------------------------------------------------------

struct ClaimCheck {
    std::string label;
    double claimed;
    double evaluated;
    double abs_diff;
    bool matches;  // relative error <= 1e-12
};

struct IntervalCheck {
    std::string label;
    double value;
    double lo, hi;  // value claimed to lie in (lo, hi]
    bool hi_open;   // true -> (lo, hi)
    bool inside;
};

struct DiscrepancyReport {
    std::vector<ClaimCheck> point_checks;
    std::vector<IntervalCheck> interval_checks;
    std::vector<std::string> notes;
    double xloc_weight = 0.0;
    double capacity = 0.0;
    bool xloc_weight_tight = false;  // weight(sample_x_loc) == capacity exactly
    std::optional<double> oracle_second_best;
    std::optional<bool> xloc_claim_is_second_best;

    bool any_discrepancy() const;
    std::string to_text() const;
};

/// Checks every claimed value against evaluate(); when instance.n <= 24 also
/// checks the "f(x_loc) is the second largest feasible value" claim against
/// the brute-force oracle. Discrepancies are report content, never errors.
DiscrepancyReport verify_catalog(const KnapsackInstance& instance,
                                 const SolutionCatalog& catalog);

// ---------------------------------------------------------------------------
// Class counting
// ---------------------------------------------------------------------------

struct Instance1ClassCounts {
    boost::multiprecision::cpp_int count_xloc;   // C(n/2, alpha*n/2)
    boost::multiprecision::cpp_int count_xvioa;  // count_xloc * |J|
    int j_size;
    double paper_lower_bound;  // (1/alpha)^(alpha*n/2)
    bool lower_bound_holds;
};

Instance1ClassCounts count_instance1_classes(const Instance1Params& params);

boost::multiprecision::cpp_int binomial(int n, int k);

// ---------------------------------------------------------------------------
// Random instances and file I/O
// ---------------------------------------------------------------------------

struct RealInterval {
    double lo, hi;
};

KnapsackInstance make_random_instance(int n, RealInterval value_range,
                                      RealInterval weight_range,
                                      double capacity_fraction, RandomStream& rng);

/// JSON schema: one object {name, n, capacity, items: [{value, weight}...],
/// family_params?}. Numbers are written with 17 significant digits so a
/// write-then-read round trip is bit-exact.
void write_instance(const KnapsackInstance& instance, const std::string& path);
KnapsackInstance read_instance(const std::string& path);

KnapsackInstance parse_instance_json(const std::string& text);
std::string instance_to_json(const KnapsackInstance& instance);

}  // namespace knapmoea
