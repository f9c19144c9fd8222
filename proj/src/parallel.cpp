#include "sylv/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace sylv {

void run_chunked(std::size_t count, unsigned workers,
                 const std::function<void(std::size_t, std::size_t, unsigned)>& fn) {
    if (count == 0) return;
    std::size_t w = std::max(1u, workers);
    w = std::min<std::size_t>(w, count);
    if (w == 1) {
        fn(0, count, 0);
        return;
    }
    std::size_t chunk = (count + w - 1) / w;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(w);
    for (std::size_t t = 0; t < w; ++t) {
        std::size_t begin = t * chunk;
        std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end, t] {
            try {
                fn(begin, end, static_cast<unsigned>(t));
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace sylv
