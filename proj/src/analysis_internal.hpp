#pragma once

#include "ssu/analysis.hpp"
#include "ssu/notation.hpp"

#include <functional>
#include <thread>
#include <vector>

namespace ssu::detail {

// Edges whose range lies in a, restricted to indices in [-w, w] for indexed
// families.
inline std::vector<Edge> windowed_edges_into(const Ultragraph& U, const VertexSet& a, std::int64_t w) {
    if (!U.indexed()) return U.edges_into_list(a);
    EdgeSet es = U.edges_into(a);
    for (auto& part : es.parts()) part = part.intersect(IntervalSet::closed(-w, w));
    return es.to_list();
}

// Runs fn(i) for i in [0, n) on up to `threads` workers. Callers store results
// by index so the merged output does not depend on scheduling.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    std::size_t workers = std::min<std::size_t>(n, threads < 1 ? 1 : static_cast<std::size_t>(threads));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) fn(i);
            } catch (...) {
                errs[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

inline std::string set_text(const SelfSimilarSystem& sys, const VertexSet& a) {
    return format_set(sys.graph().universe(), a);
}
inline std::string path_text(const SelfSimilarSystem& sys, const Path& p) { return format_path(sys.graph(), p); }
inline std::string lasso_text(const SelfSimilarSystem& sys, const Lasso& x) { return format_lasso(sys.graph(), x); }
inline std::string elem_text(const SelfSimilarSystem& sys, GroupElem g) { return sys.group().name(g); }

}  // namespace ssu::detail
