#include "atx/mad.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>

namespace atx {

ExactRational::ExactRational(const Int& num, const Int& den) {
    if (den == 0) fail(ErrorCode::InvalidParameter, "zero denominator");
    value_ = boost::multiprecision::cpp_rational(num, den);
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.value_ == 0) fail(ErrorCode::InvalidParameter, "division by zero");
    return ExactRational(a.value_ / b.value_);
}

std::string ExactRational::str() const { return numerator().str() + "/" + denominator().str(); }

ExactRational ExactRational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return ExactRational(Int(text), Int(1));
        return ExactRational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw ParseError(0, "invalid rational '" + text + "'");
    }
}

namespace {

class Dinic {
public:
    explicit Dinic(int nodes) : head_(nodes, -1), level_(nodes), it_(nodes) {}

    void add_edge(int from, int to, std::int64_t cap) {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    std::int64_t max_flow(int s, int t) {
        std::int64_t flow = 0;
        while (bfs(s, t)) {
            it_ = head_;
            while (std::int64_t pushed = dfs(s, t, std::numeric_limits<std::int64_t>::max())) flow += pushed;
        }
        return flow;
    }

private:
    struct Arc {
        int to;
        int next;
        std::int64_t cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a = head_[v]; a >= 0; a = arcs_[a].next)
                if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[v] + 1;
                    q.push(arcs_[a].to);
                }
        }
        return level_[t] >= 0;
    }

    std::int64_t dfs(int v, int t, std::int64_t limit) {
        if (v == t) return limit;
        for (int& a = it_[v]; a >= 0; a = arcs_[a].next) {
            Arc& arc = arcs_[a];
            if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
            if (std::int64_t got = dfs(arc.to, t, std::min(limit, arc.cap))) {
                arc.cap -= got;
                arcs_[a ^ 1].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<int> head_, level_, it_;
};

// True iff some vertex subset S has |E(S)| / |S| > p / q.
bool denser_than(const Graph& g, std::int64_t p, std::int64_t q) {
    const int n = g.n();
    const std::int64_t m = g.m();
    const int s = n, t = n + 1;
    Dinic net(n + 2);
    for (VertexId v = 0; v < n; ++v) {
        net.add_edge(s, v, m * q);
        net.add_edge(v, t, m * q + 2 * p - q * g.degree(v));
    }
    for (auto [u, v] : g.edges()) {
        net.add_edge(u, v, q);
        net.add_edge(v, u, q);
    }
    return net.max_flow(s, t) < m * static_cast<std::int64_t>(n) * q;
}

} // namespace

ExactRational max_average_degree(const Graph& g) {
    if (g.n() == 0) fail(ErrorCode::InvalidParameter, "mad of the empty graph is undefined");
    if (g.m() == 0) return ExactRational(0);

    // The densest subgraph's density is e/v with 1 <= v <= n and 0 <= e <= m.
    struct Frac {
        std::int64_t p, q;
    };
    std::vector<Frac> candidates;
    for (std::int64_t v = 1; v <= g.n(); ++v)
        for (std::int64_t e = 0; e <= g.m() && e <= v * (v - 1) / 2; ++e) {
            const std::int64_t d = std::gcd(e, v);
            candidates.push_back({e / d, v / d});
        }
    std::sort(candidates.begin(), candidates.end(), [](Frac a, Frac b) { return a.p * b.q < b.p * a.q; });
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](Frac a, Frac b) { return a.p == b.p && a.q == b.q; }),
                     candidates.end());

    std::size_t lo = 0, hi = candidates.size() - 1;  // the answer is in [lo, hi]
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (denser_than(g, candidates[mid].p, candidates[mid].q)) lo = mid + 1;
        else hi = mid;
    }
    return ExactRational(2 * candidates[lo].p, candidates[lo].q);
}

} // namespace atx
