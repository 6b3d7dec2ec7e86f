#pragma once
// Shared table plumbing for the two dynamic programs.

#include <algorithm>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace ptw::detail {

struct Entry {
    int l = 0;
    int a = -1;  // left child index, or leaf option
    int b = -1;  // right child index
};

using Table = std::vector<std::pair<std::string, Entry>>;
using Acc = std::map<std::string, Entry>;

// keep the larger value; on ties the first one seen
inline void offer(Acc& acc, std::string key, const Entry& e) {
    auto it = acc.find(key);
    if (it == acc.end())
        acc.emplace(std::move(key), e);
    else if (e.l > it->second.l)
        it->second = e;
}

// Runs body(i, acc) for i in [0, n), split into contiguous chunks over
// workers. Chunks are folded in index order, so the result does not
// depend on the worker count.
template <class Body>
Table product_table(int n, int workers, Body body) {
    workers = std::max(1, std::min(workers, n / 64 + 1));
    std::vector<Acc> parts(workers);
    auto run = [&](int w) {
        int lo = static_cast<int>(static_cast<long long>(n) * w / workers);
        int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
        for (int i = lo; i < hi; ++i) body(i, parts[w]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> th;
        for (int w = 0; w < workers; ++w) th.emplace_back(run, w);
        for (auto& t : th) t.join();
    }
    Acc& acc = parts[0];
    for (int w = 1; w < workers; ++w)
        for (auto& [k, e] : parts[w]) offer(acc, k, e);
    return Table(acc.begin(), acc.end());
}

inline int find_key(const Table& t, const std::string& key) {
    auto it = std::lower_bound(t.begin(), t.end(), key,
                               [](const std::pair<std::string, Entry>& p, const std::string& k) { return p.first < k; });
    if (it == t.end() || it->first != key) return -1;
    return static_cast<int>(it - t.begin());
}

}  // namespace ptw::detail
