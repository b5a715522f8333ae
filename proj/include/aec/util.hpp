#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace aec {

// Precondition or contract violation; what() carries the offending detail.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration budget exhausted (CLI exit code 3).
struct budget_error : error {
    explicit budget_error(const std::string& what) : error(what) {}
};

// Input could not be parsed or resolved (CLI exit code 2).
struct parse_error : error {
    parse_error(int line, int col, const std::string& what)
        : error("line " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
          line(line), col(col) {}
    int line;
    int col;
};

class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        // lower root wins so class ids stay the minimal member
        if (a == b) return;
        if (a < b) parent_[b] = a; else parent_[a] = b;
    }

    bool same(int a, int b) { return find(a) == find(b); }

  private:
    std::vector<int> parent_;
};

// Deterministic across platforms: splitmix64 stream, bounds by modulo.
// Statistical quality is irrelevant here; reproducibility is not.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    // uniform in [lo, hi]
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }

    bool chance(int num, int den) { return below(den) < num; }

    // fork a named substream so insertion of new draw sites upstream
    // does not shift unrelated downstream draws
    Rng fork(std::uint64_t salt) { return Rng(next() ^ (salt * 0x2545f4914f6cdd1dULL)); }

  private:
    std::uint64_t state_;
};

}  // namespace aec
