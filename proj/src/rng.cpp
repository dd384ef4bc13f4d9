#include "recjoint/rng.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace recjoint {

const char* const kRngAlgorithmTag = "mt19937_64/seedseq-v1";

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_id),
                      static_cast<std::uint32_t>(stream_id >> 32)};
    gen_.seed(seq);
}

double RngStream::uniform01() {
    // 53-bit mantissa centered in its cell: values lie strictly in (0, 1).
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::exponential() {
    return -std::log1p(-uniform01());
}

void run_chunked(std::uint64_t seed, std::uint64_t stream_base,
                 std::uint64_t chunk_count, int workers,
                 const std::function<void(std::uint64_t, RngStream&)>& body) {
    if (chunk_count == 0) {
        return;
    }
    unsigned n = workers > 0 ? static_cast<unsigned>(workers)
                             : std::max(1u, std::thread::hardware_concurrency());
    if (n > chunk_count) {
        n = static_cast<unsigned>(chunk_count);
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= chunk_count) {
                return;
            }
            try {
                RngStream stream(seed, stream_base + c);
                body(c, stream);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(chunk_count);
                return;
            }
        }
    };
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (unsigned i = 0; i < n; ++i) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace recjoint
