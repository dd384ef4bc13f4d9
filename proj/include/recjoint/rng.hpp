#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

namespace recjoint {

/// Identifies the generator algorithm compiled into this build; embedded in
/// every report for provenance.
extern const char* const kRngAlgorithmTag;

/// Addresses one reproducible draw sequence: (seed, stream_id) fully
/// determine the stream under the fixed algorithm tag.
struct RngStreamSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
    std::string algorithm_tag = kRngAlgorithmTag;
};

/// One independent generator stream.  Streams for distinct (seed, stream_id)
/// pairs are derived through seed_seq whitening of both words.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    /// Uniform draw strictly inside (0, 1).
    double uniform01();

    /// Standard exponential draw.
    double exponential();

    RngStreamSpec spec() const { return {seed_, stream_id_, kRngAlgorithmTag}; }

private:
    std::mt19937_64 gen_;
    std::uint64_t seed_;
    std::uint64_t stream_id_;
};

/// Fixed number of trials per stream chunk.  Work is partitioned into chunks
/// assigned to stream ids stream_base + chunk_index; merging chunk outputs in
/// stream-id order makes results identical for any worker count.
constexpr std::uint64_t kChunkTrials = 8192;

/// Runs body(chunk_index, stream) for chunk_count chunks on the given number
/// of worker threads (0 = hardware concurrency).  Bodies run concurrently and
/// must only touch their own chunk's state; exceptions are rethrown on the
/// caller thread.
void run_chunked(std::uint64_t seed, std::uint64_t stream_base,
                 std::uint64_t chunk_count, int workers,
                 const std::function<void(std::uint64_t, RngStream&)>& body);

} // namespace recjoint
