#include "ptw/noncross.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ptw {

namespace {

bool interleave(int a, int b, int c, int d) {
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

}  // namespace

bool is_noncrossing_matching(const Matching& m, const OrderedGround& ground) {
    std::map<int, int> pos;
    for (size_t i = 0; i < ground.size(); ++i) pos[ground[i]] = static_cast<int>(i) + 1;
    std::vector<Edge> p;
    std::map<int, int> used;
    for (auto [a, b] : m) {
        if (!pos.count(a) || !pos.count(b)) throw std::invalid_argument("pair member outside the ground set");
        if (a == b || used[a]++ || used[b]++) throw std::invalid_argument("not a matching");
        p.emplace_back(pos[a], pos[b]);
    }
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (interleave(p[i].first, p[i].second, p[j].first, p[j].second)) return false;
    return true;
}

bool is_noncrossing_partition(const Partition& p) {
    for (size_t x = 0; x < p.size(); ++x)
        for (size_t y = 0; y < p.size(); ++y) {
            if (x == y) continue;
            for (int a : p[x])
                for (int c : p[x])
                    for (int b : p[y])
                        for (int d : p[y])
                            if (a < b && b < c && c < d) return false;
        }
    return true;
}

std::vector<Matching> enumerate_noncrossing_perfect_matchings(const OrderedGround& ground) {
    std::vector<Matching> out;
    int k = static_cast<int>(ground.size());
    if (k % 2) return out;
    // position i pairs with j only if the stretch between them is even
    std::vector<int> partner(k, -1);
    Matching cur;
    auto rec = [&](auto&& self, int i) -> void {
        while (i < k && partner[i] >= 0) ++i;
        if (i == k) {
            Matching m;
            for (int a = 0; a < k; ++a)
                if (partner[a] > a) m.emplace_back(ground[a], ground[partner[a]]);
            out.push_back(std::move(m));
            return;
        }
        for (int j = i + 1; j < k; j += 2) {
            if (partner[j] >= 0) break;
            partner[i] = j;
            partner[j] = i;
            self(self, i + 1);
            partner[i] = partner[j] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Partition> enumerate_noncrossing_partitions(int k) {
    std::vector<Partition> out;
    if (k < 0) return out;
    std::vector<int> rgs(k);
    auto crosses_at = [&](int d) {
        // any a<b<c<d with a,c in one block and b,d in another
        for (int b = 0; b < d; ++b) {
            if (rgs[b] != rgs[d]) continue;
            for (int c = b + 1; c < d; ++c) {
                if (rgs[c] == rgs[d]) continue;
                for (int a = 0; a < b; ++a)
                    if (rgs[a] == rgs[c]) return true;
            }
        }
        return false;
    };
    auto rec = [&](auto&& self, int i, int blocks) -> void {
        if (i == k) {
            Partition p(blocks);
            for (int x = 0; x < k; ++x) p[rgs[x]].push_back(x + 1);
            out.push_back(std::move(p));
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            rgs[i] = b;
            if (b < blocks && crosses_at(i)) continue;
            self(self, i + 1, std::max(blocks, b + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::uint64_t catalan(int n) {
    std::uint64_t c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace ptw
