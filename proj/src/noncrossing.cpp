#include "fpk/noncrossing.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>

namespace fpk {

namespace {

bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
    // a<b<c<d with a,c in one block and b,d in the other
    for (int x : a)
        for (int y : a) {
            if (x >= y) continue;
            for (int u : b)
                for (int v : b) {
                    if (u >= v) continue;
                    if ((x < u && u < y && y < v) || (u < x && x < v && v < y)) return true;
                }
        }
    return false;
}

} // namespace

size_t nc_cap() {
    static size_t cap = [] {
        if (const char* env = std::getenv("FPK_NC_CAP")) {
            long v = std::strtol(env, nullptr, 10);
            if (v > 0) return size_t(v);
        }
        return size_t(14);
    }();
    return cap;
}

bool NCPartition::is_valid() const {
    std::vector<bool> seen(n + 1, false);
    for (const auto& b : blocks) {
        if (b.empty()) return false;
        for (size_t i = 0; i < b.size(); ++i) {
            if (b[i] < 1 || size_t(b[i]) > n || seen[size_t(b[i])]) return false;
            if (i > 0 && b[i] <= b[i - 1]) return false;
            seen[size_t(b[i])] = true;
        }
    }
    for (size_t i = 1; i <= n; ++i)
        if (!seen[i]) return false;
    for (size_t i = 1; i < blocks.size(); ++i)
        if (blocks[i].front() <= blocks[i - 1].front()) return false;
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j)
            if (blocks_cross(blocks[i], blocks[j])) return false;
    return true;
}

namespace {

// Recursive first-block placement on a contiguous segment [lo, hi] of points.
// The block of `lo` is {lo = b_0 < b_1 < ... < b_k}; the open gaps
// (b_t, b_{t+1}) and (b_k, hi] are partitioned independently.
void enumerate_segment(int lo, int hi, std::vector<std::vector<int>>& acc,
                       const std::function<void()>& emit);

void gaps_after_block(const std::vector<int>& block, int hi, size_t gap_index,
                      std::vector<std::vector<int>>& acc, const std::function<void()>& emit) {
    // gap gap_index is (block[gap_index], block[gap_index+1]); the last gap is (block.back(), hi]
    if (gap_index + 1 < block.size()) {
        int glo = block[gap_index] + 1, ghi = block[gap_index + 1] - 1;
        if (glo > ghi) {
            gaps_after_block(block, hi, gap_index + 1, acc, emit);
        } else {
            enumerate_segment(glo, ghi, acc,
                              [&] { gaps_after_block(block, hi, gap_index + 1, acc, emit); });
        }
    } else {
        int glo = block.back() + 1;
        if (glo > hi) {
            emit();
        } else {
            enumerate_segment(glo, hi, acc, emit);
        }
    }
}

void choose_block(int lo, int hi, std::vector<int>& block, int next,
                  std::vector<std::vector<int>>& acc, const std::function<void()>& emit) {
    // current block is complete as chosen; handle its gaps
    acc.push_back(block);
    gaps_after_block(block, hi, 0, acc, emit);
    acc.pop_back();
    for (int j = next; j <= hi; ++j) {
        block.push_back(j);
        choose_block(lo, hi, block, j + 1, acc, emit);
        block.pop_back();
    }
}

void enumerate_segment(int lo, int hi, std::vector<std::vector<int>>& acc,
                       const std::function<void()>& emit) {
    std::vector<int> block{lo};
    choose_block(lo, hi, block, lo + 1, acc, emit);
}

} // namespace

const std::vector<NCPartition>& enumerate_nc(size_t n) {
    detail::check_cap(n);
    static std::map<size_t, std::vector<NCPartition>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<NCPartition> out;
    std::vector<std::vector<int>> acc;
    enumerate_segment(1, int(n), acc, [&] {
        NCPartition p;
        p.n = n;
        p.blocks = acc;
        std::sort(p.blocks.begin(), p.blocks.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        out.push_back(std::move(p));
    });
    return cache.emplace(n, std::move(out)).first->second;
}

NCPartition kreweras(const NCPartition& p) {
    size_t n = p.n;
    // sigma_pi: each block as an increasing cycle
    std::vector<int> sigma(n + 1), sigma_inv(n + 1);
    for (const auto& b : p.blocks)
        for (size_t i = 0; i < b.size(); ++i) sigma[size_t(b[i])] = b[(i + 1) % b.size()];
    for (size_t i = 1; i <= n; ++i) sigma_inv[size_t(sigma[i])] = int(i);
    // tau = sigma^{-1} . (1 2 ... n); cycles of tau are the complement blocks
    auto tau = [&](int i) { return sigma_inv[size_t(i % int(n) + 1)]; };
    std::vector<bool> seen(n + 1, false);
    NCPartition k;
    k.n = n;
    for (size_t i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int j = int(i);
        while (!seen[size_t(j)]) {
            seen[size_t(j)] = true;
            cyc.push_back(j);
            j = tau(j);
        }
        std::sort(cyc.begin(), cyc.end());
        k.blocks.push_back(std::move(cyc));
    }
    std::sort(k.blocks.begin(), k.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return k;
}

std::vector<NCPartition> all_set_partitions(size_t n) {
    // restricted growth strings
    std::vector<NCPartition> out;
    std::vector<size_t> rgs(n, 0);
    auto emit = [&] {
        size_t nb = *std::max_element(rgs.begin(), rgs.end()) + 1;
        NCPartition p;
        p.n = n;
        p.blocks.assign(nb, {});
        for (size_t i = 0; i < n; ++i) p.blocks[rgs[i]].push_back(int(i) + 1);
        out.push_back(std::move(p));
    };
    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t maxb) {
        if (i == n) {
            emit();
            return;
        }
        for (size_t b = 0; b <= maxb + 1 && b <= i; ++b) {
            rgs[i] = b;
            rec(i + 1, std::max(maxb, b));
        }
    };
    if (n == 0) return out;
    rgs[0] = 0;
    rec(1, 0);
    return out;
}

Seq<Rational> moeb_vector(size_t n) {
    detail::check_cap(n);
    // solve Zeta boxtimes_NS y = (1,0,...,0) degree by degree; the
    // n-th kernel component is y_n + (terms in y_1..y_{n-1}) since Zeta = 1
    Seq<Rational> zeta(std::vector<Rational>(n, Rational(1)));
    Seq<Rational> y(n);
    for (size_t m = 1; m <= n; ++m) {
        // kernel(zeta, y-with-y_m-zeroed, m): coefficient of y_m is
        // zeta_1^m = 1 via the 0-hat partition
        Seq<Rational> partial = y.truncated(m);
        partial.at(m) = Rational(0);
        Rational rest = boxtimes_ns_kernel(zeta, partial, m);
        Rational target = (m == 1) ? Rational(1) : Rational(0);
        y.at(m) = target - rest;
    }
    return y;
}

} // namespace fpk
