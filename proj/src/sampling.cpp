#include "recjoint/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "recjoint/errors.hpp"

namespace recjoint {
namespace {

std::uint64_t chunk_count_for(std::uint64_t n_target) {
    return (n_target + kChunkTrials - 1) / kChunkTrials;
}

std::uint64_t chunk_target(std::uint64_t chunk, std::uint64_t n_target) {
    const std::uint64_t start = chunk * kChunkTrials;
    return std::min(kChunkTrials, n_target - start);
}

// Shared scaffolding for rejection samplers: each chunk produces a fixed
// number of accepted rows at a fixed offset, so merged output is identical
// for any worker count.
template <typename ProposeFn>
SampleBatch run_rejection(int dim, std::uint64_t n_target, const SamplerOptions& opt,
                          const ProposeFn& propose) {
    if (n_target < 1) {
        throw DomainError("sampler: n_target must be at least 1");
    }
    SampleBatch batch;
    batch.dim = dim;
    batch.data.assign(n_target * static_cast<std::size_t>(dim), 0.0);
    const std::uint64_t chunks = chunk_count_for(n_target);
    std::vector<std::uint64_t> proposed(chunks, 0);
    run_chunked(opt.seed, opt.stream_base, chunks, opt.workers,
                [&](std::uint64_t c, RngStream& stream) {
                    const std::uint64_t want = chunk_target(c, n_target);
                    const std::uint64_t budget =
                        (opt.proposal_budget * want + n_target - 1) / n_target;
                    double* out = batch.data.data() +
                                  c * kChunkTrials * static_cast<std::size_t>(dim);
                    std::uint64_t got = 0;
                    std::uint64_t used = 0;
                    while (got < want) {
                        if (used >= budget) {
                            throw BudgetExceededError(
                                "sampler: proposal budget exhausted (" +
                                std::to_string(opt.proposal_budget) + " total)");
                        }
                        ++used;
                        if (propose(stream, out + got * dim)) {
                            ++got;
                        }
                    }
                    proposed[c] = used;
                });
    batch.n_accepted = n_target;
    for (std::uint64_t p : proposed) {
        batch.n_proposed += p;
    }
    batch.rng = {opt.seed, opt.stream_base, kRngAlgorithmTag};
    batch.stream_count = chunks;
    return batch;
}

} // namespace

std::vector<double> SampleBatch::column(int col) const {
    std::vector<double> out(rows());
    for (std::size_t r = 0; r < out.size(); ++r) {
        out[r] = at(r, col);
    }
    return out;
}

RecordScan scan_records(const std::vector<double>& sequence) {
    if (sequence.empty()) {
        throw EmptyInputError("scan_records: sequence must be nonempty");
    }
    RecordScan scan;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < sequence.size(); ++m) {
        if (sequence[m] > best) {
            best = sequence[m];
            scan.record_indices.push_back(static_cast<long>(m + 1));
            scan.record_values.push_back(sequence[m]);
        }
    }
    scan.arrival_times = scan.record_indices;
    return scan;
}

SampleBatch simulate_conditional_records_bruteforce(const UnivariateLaw& law,
                                                    const RecordIndexSet& idx,
                                                    std::uint64_t n_target,
                                                    const SamplerOptions& opt) {
    const std::vector<long>& positions = idx.indices();
    const long length = idx.max_index();
    const int d = idx.dim();
    // Records are invariant under the strictly increasing quantile transform,
    // so proposals stay on the uniform scale and only accepted tuples are
    // mapped through the law.
    auto propose = [&](RngStream& stream, double* out) -> bool {
        double best = 0.0;
        int hit = 0;
        for (long m = 1; m <= length; ++m) {
            const double u = stream.uniform01();
            const bool is_record = u > best;
            if (is_record) {
                best = u;
            }
            if (hit < d && positions[hit] == m) {
                if (!is_record) {
                    return false;
                }
                out[hit] = u;
                ++hit;
            }
        }
        for (int i = 0; i < d; ++i) {
            out[i] = law.quantile(out[i]);
        }
        return true;
    };
    return run_rejection(d, n_target, opt, propose);
}

SampleBatch sample_conditional_records_exact(const UnivariateLaw& law,
                                             const RecordIndexSet& idx,
                                             std::uint64_t n_target,
                                             const SamplerOptions& opt) {
    const std::vector<long>& positions = idx.indices();
    const int d = idx.dim();
    std::vector<double> inv_block(d);
    long prev = 0;
    for (int m = 0; m < d; ++m) {
        inv_block[m] = 1.0 / static_cast<double>(positions[m] - prev);
        prev = positions[m];
    }
    const double head = static_cast<double>(positions[0] - 1);
    auto propose = [&](RngStream& stream, double* out) -> bool {
        // Predecessor maximum of the j_1 - 1 observations before the first
        // conditioned position; the value there must beat it.
        double floor_t = 0.0;
        if (head > 0.0) {
            floor_t = std::pow(stream.uniform01(), 1.0 / head);
        }
        double last = stream.uniform01(); // block size 1: the value at j_1
        if (!(last > floor_t)) {
            return false;
        }
        out[0] = last;
        for (int m = 1; m < d; ++m) {
            const double u = stream.uniform01();
            const double t = inv_block[m] == 1.0 ? u : std::pow(u, inv_block[m]);
            if (!(t > last)) {
                return false;
            }
            out[m] = t;
            last = t;
        }
        for (int i = 0; i < d; ++i) {
            out[i] = law.quantile(out[i]);
        }
        return true;
    };
    return run_rejection(d, n_target, opt, propose);
}

SampleBatch sample_limit_chain(const LambdaVector& lv, std::uint64_t n_target,
                               const SamplerOptions& opt) {
    const int d = lv.dim();
    auto propose = [&](RngStream& stream, double* out) -> bool {
        double y = 0.0;
        for (int i = d - 1; i >= 0; --i) {
            y -= stream.exponential() / lv[i];
            out[i] = y;
        }
        return true;
    };
    return run_rejection(d, n_target, opt, propose);
}

SampleBatch sample_numbered_record(long n, std::uint64_t n_target,
                                   const SamplerOptions& opt) {
    if (n < 1) {
        throw DomainError("sample_numbered_record: n must be positive");
    }
    auto propose = [&](RngStream& stream, double* out) -> bool {
        double sum = 0.0;
        for (long i = 0; i < n; ++i) {
            sum += stream.exponential();
        }
        out[0] = sum;
        return true;
    };
    return run_rejection(1, n_target, opt, propose);
}

} // namespace recjoint
