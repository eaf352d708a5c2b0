#pragma once

#include <map>
#include <memory>
#include <vector>

#include <json.hpp>

#include "weylmod/exact.hpp"
#include "weylmod/exact_linalg.hpp"
#include "weylmod/formulas.hpp"
#include "weylmod/partition.hpp"
#include "weylmod/weight_table.hpp"

namespace weylmod {

struct DegreeStats {
    long ambient = 0;
    long rows = 0;
    long rank = 0;
};

struct GradedReport {
    AlgebraPresentation algebra;
    int n = 0;
    std::map<int, ExactInt> dims;  // total degree -> quotient dimension
    ExactInt total = 0;
    bool converged = false;
    std::map<std::vector<int>, ExactInt> multigraded;  // per-variable degrees
    std::map<int, DegreeStats> stats;
    std::map<Partition, ExactInt> traces;  // filled on demand
    long wall_ms = 0;

    nlohmann::json to_json(bool include_multigraded = false) const;
};

struct NonConvergenceError : std::runtime_error {
    explicit NonConvergenceError(GradedReport partial_report)
        : std::runtime_error("coinvariant computation did not converge by the degree cap"),
          partial(std::move(partial_report)) {}
    GradedReport partial;
};

// Exact computation of the graded quotient of the n-fold tensor power of A
// by the ideal generated by the polarized power sums of the augmentation
// ideal (sum over tensor slots of each nonconstant monomial). Dimensions
// come from exact sparse ranks, block by multidegree; the quotient algebra
// is generated in degree one, so a zero degree certifies that all higher
// degrees vanish, and the configured stall window is reported on that
// basis. A degree cap guards runaway scans and raises a non-convergence
// error carrying partial data.
class DhComputation {
public:
    DhComputation(const AlgebraPresentation& alg, int n, int stall = -1, int cap = -1,
                  int jobs = 0);

    const GradedReport& report() const { return report_; }

    // Trace of any permutation of the given cycle type on the quotient:
    // per block, fixed ambient monomials minus the trace on the ideal,
    // the latter read off the diagonal of the change of basis expressing
    // permuted pivot rows in the echelon basis.
    ExactInt trace(const Partition& cycle_type);
    const std::map<Partition, ExactInt>& all_traces();

    // Weight table of the rank-r module attached to the quotient character.
    WeightTable weight_table(int r);

    static int default_stall(const AlgebraPresentation& alg, int n);
    static int default_cap(const AlgebraPresentation& alg, int n, int stall);

private:
    struct Block {
        std::vector<int> multidegree;
        std::vector<std::vector<int>> cols;       // ambient monomials, flattened exponents
        std::map<std::vector<int>, int> colindex;
        SparseEchelon ech;
        long rows_fed = 0;
        Block() : ech(0) {}
    };

    void run(int stall, int cap, int jobs);
    Block build_block(int degree, const std::vector<int>& multidegree) const;
    ExactInt block_trace(const Block& b, const std::vector<int>& perm) const;

    AlgebraPresentation alg_;
    int n_;
    int top_ = 0;  // first degree with zero quotient
    std::map<int, std::vector<Block>> blocks_;
    GradedReport report_;
};

GradedReport dh_graded_dims(const AlgebraPresentation& alg, int n, int stall = -1, int cap = -1,
                            int jobs = 0);
ExactInt dh_trace(const AlgebraPresentation& alg, int n, const Partition& cycle_type,
                  int jobs = 0);
WeightTable weyl_weight_oracle(const AlgebraPresentation& alg, int r, int n, int jobs = 0);

// Process-wide cache (default stall/cap only), so dimension scans, traces
// and weight extractions reuse one elimination.
std::shared_ptr<DhComputation> dh_shared(const AlgebraPresentation& alg, int n, int jobs = 0);

} // namespace weylmod
