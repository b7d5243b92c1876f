#include "wgreedy/parallel.hpp"

namespace wgreedy {

namespace {
std::atomic<unsigned> g_workers{0};
}

void set_default_workers(unsigned workers) { g_workers = workers; }

unsigned default_workers() {
    const unsigned w = g_workers.load();
    if (w != 0) return w;
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace wgreedy
