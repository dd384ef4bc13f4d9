#pragma once

#include <cstdint>
#include <vector>

#include "recjoint/distributions.hpp"
#include "recjoint/records_exact.hpp"
#include "recjoint/records_limits.hpp"
#include "recjoint/rng.hpp"

namespace recjoint {

/// Immutable batch of d-dimensional draws stored row-major.
struct SampleBatch {
    int dim = 0;
    std::vector<double> data; // rows() x dim
    std::uint64_t n_proposed = 0;
    std::uint64_t n_accepted = 0;
    RngStreamSpec rng;             // stream_base of the producing run
    std::uint64_t stream_count = 0; // chunks consumed

    std::size_t rows() const { return dim == 0 ? 0 : data.size() / dim; }
    double at(std::size_t row, int col) const { return data[row * dim + col]; }
    std::vector<double> column(int col) const;
    double acceptance_rate() const {
        return n_proposed == 0 ? 0.0
                               : static_cast<double>(n_accepted) /
                                     static_cast<double>(n_proposed);
    }
};

/// Record positions and values of one observed sequence (1-based indices).
struct RecordScan {
    std::vector<long> record_indices;
    std::vector<double> record_values;
    std::vector<long> arrival_times; // T(n); identical to record_indices
};

/// Scans a sequence for records: position m is a record iff its value
/// strictly exceeds every earlier value; position 1 always is.
RecordScan scan_records(const std::vector<double>& sequence);

struct SamplerOptions {
    std::uint64_t seed = 0;
    std::uint64_t stream_base = 0;
    int workers = 0;                       // 0 = hardware concurrency
    std::uint64_t proposal_budget = 1000000000; // rejection cap per run
};

/// Rejection oracle: draws iid sequences of length max(idx) and keeps the
/// values at the idx positions whenever all of them are records.  Acceptance
/// frequency estimates prod 1/j_m.
SampleBatch simulate_conditional_records_bruteforce(const UnivariateLaw& law,
                                                    const RecordIndexSet& idx,
                                                    std::uint64_t n_target,
                                                    const SamplerOptions& opt);

/// Exact sampler via block maxima: the conditional law equals that of
/// independent block maxima M_1 < ... < M_d (block sizes j_m - j_{m-1})
/// where M_1, the value at position j_1, must additionally beat the maximum
/// of the j_1 - 1 earlier observations.  Proposals draw the block maxima
/// (plus that predecessor maximum) and accept on the full ordering, giving
/// acceptance rate (1/j_1) prod_{m>=2} (j_m - j_{m-1})/j_m.
SampleBatch sample_conditional_records_exact(const UnivariateLaw& law,
                                             const RecordIndexSet& idx,
                                             std::uint64_t n_target,
                                             const SamplerOptions& opt);

/// Exact sampler of the d-variate limit law: Y_d = -E_d/lambda_d and
/// Y_i = Y_{i+1} - E_i/lambda_i with independent standard exponentials, so
/// the increments Y_{i+1} - Y_i are Exp(lambda_i).
SampleBatch sample_limit_chain(const LambdaVector& lv, std::uint64_t n_target,
                               const SamplerOptions& opt);

/// Draws of the n-th record value on the standard-exponential scale: sums of
/// n iid standard exponentials.
SampleBatch sample_numbered_record(long n, std::uint64_t n_target,
                                   const SamplerOptions& opt);

} // namespace recjoint
