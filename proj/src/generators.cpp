#include "lhc/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

namespace lhc {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

// Bounded draw with plain modulo; bias is irrelevant at these ranges and
// the result does not depend on the standard library's distributions.
int draw(std::mt19937_64& rng, int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

Edge draw_vertex_set(std::mt19937_64& rng, std::vector<int>& scratch, int k) {
    const int n = static_cast<int>(scratch.size());
    std::iota(scratch.begin(), scratch.end(), 0);
    Edge picked(k);
    for (int i = 0; i < k; ++i) {
        const int j = i + draw(rng, n - i);
        std::swap(scratch[i], scratch[j]);
        picked[i] = scratch[i];
    }
    return picked;
}

}  // namespace

Hypergraph projective_plane(int q) {
    if (!is_prime(q)) {
        throw std::invalid_argument("projective plane order must be prime (got " +
                                    std::to_string(q) + ")");
    }
    if (q > 13) {
        throw std::invalid_argument("projective plane order capped at 13");
    }
    // Points and lines are normalized homogeneous triples over Z_q;
    // incidence is a zero inner product mod q.
    std::vector<std::array<int, 3>> points;
    for (int b = 0; b < q; ++b) {
        for (int c = 0; c < q; ++c) points.push_back({1, b, c});
    }
    for (int c = 0; c < q; ++c) points.push_back({0, 1, c});
    points.push_back({0, 0, 1});

    std::vector<Edge> lines;
    for (const auto& ell : points) {  // self-dual: same triples index the lines
        Edge line;
        for (std::size_t p = 0; p < points.size(); ++p) {
            const auto& pt = points[p];
            const int dot = pt[0] * ell[0] + pt[1] * ell[1] + pt[2] * ell[2];
            if (dot % q == 0) line.push_back(static_cast<int>(p));
        }
        lines.push_back(std::move(line));
    }
    return Hypergraph(static_cast<int>(points.size()), std::move(lines));
}

Hypergraph complete_graph_hypergraph(int n) {
    if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
    if (n > 1000) throw std::invalid_argument("complete graph capped at n = 1000");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph near_pencil(int n) {
    if (n < 3) throw std::invalid_argument("near-pencil needs n >= 3");
    if (n > 1000) throw std::invalid_argument("near-pencil capped at n = 1000");
    std::vector<Edge> edges;
    Edge big(n - 1);
    std::iota(big.begin(), big.end(), 0);
    edges.push_back(std::move(big));
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, n - 1});
    return Hypergraph(n, std::move(edges));
}

Hypergraph steiner_triple(int n) {
    if (n % 6 != 3 || n < 3) {
        throw std::invalid_argument("Steiner triple system needs n == 3 (mod 6), got " +
                                    std::to_string(n));
    }
    if (n > 99) throw std::invalid_argument("Steiner triple order capped at 99");
    // Bose construction on Z_t x {0,1,2} with t = n/3 odd.
    const int t = n / 3;
    const int half = (t + 1) / 2;  // inverse of 2 mod t
    auto id = [t](int i, int layer) { return layer * t + i; };
    std::vector<Edge> triples;
    for (int i = 0; i < t; ++i) {
        triples.push_back({id(i, 0), id(i, 1), id(i, 2)});
    }
    for (int layer = 0; layer < 3; ++layer) {
        for (int i = 0; i < t; ++i) {
            for (int j = i + 1; j < t; ++j) {
                const int mid = static_cast<int>((static_cast<long long>(i + j) * half) % t);
                triples.push_back({id(i, layer), id(j, layer), id(mid, (layer + 1) % 3)});
            }
        }
    }
    return Hypergraph(n, std::move(triples));
}

RandomLinearResult random_linear(int n, int m_target, int rank_min, int rank_max,
                                 std::uint64_t seed) {
    if (rank_min < 2 || rank_min > rank_max || rank_max > n) {
        throw std::invalid_argument("need 2 <= rank_min <= rank_max <= n");
    }
    if (m_target < 0) throw std::invalid_argument("m_target must be non-negative");

    std::mt19937_64 rng(seed);
    std::vector<int> scratch(n);
    std::vector<Edge> accepted;
    const long long reject_cap = 1000LL * std::max(m_target, 1);
    long long rejections = 0;
    while (static_cast<int>(accepted.size()) < m_target && rejections < reject_cap) {
        const int rank = rank_min + draw(rng, rank_max - rank_min + 1);
        Edge candidate = draw_vertex_set(rng, scratch, rank);
        std::sort(candidate.begin(), candidate.end());
        bool ok = true;
        for (const Edge& e : accepted) {
            if (intersection_size(e, candidate) > 1 || e == candidate) {
                ok = false;
                break;
            }
        }
        if (ok) {
            accepted.push_back(std::move(candidate));
        } else {
            ++rejections;
        }
    }
    RandomLinearResult result;
    result.truncated = static_cast<int>(accepted.size()) < m_target;
    result.rejections = rejections;
    result.hypergraph = Hypergraph(n, std::move(accepted));
    return result;
}

const char* gen_kind_name(GenKind kind) {
    switch (kind) {
        case GenKind::projective_plane: return "projective_plane";
        case GenKind::complete_graph: return "complete_graph";
        case GenKind::near_pencil: return "near_pencil";
        case GenKind::steiner_triple: return "steiner_triple";
        case GenKind::random_linear: return "random_linear";
    }
    return "unknown";
}

GeneratedInstance make_instance(const GenSpec& spec) {
    switch (spec.kind) {
        case GenKind::projective_plane:
            return {projective_plane(spec.q), false};
        case GenKind::complete_graph:
            return {complete_graph_hypergraph(spec.n), false};
        case GenKind::near_pencil:
            return {near_pencil(spec.n), false};
        case GenKind::steiner_triple:
            return {steiner_triple(spec.n), false};
        case GenKind::random_linear: {
            auto r = random_linear(spec.n, spec.m_target, spec.rank_min, spec.rank_max, spec.seed);
            return {std::move(r.hypergraph), r.truncated};
        }
    }
    throw std::invalid_argument("unknown generator kind");
}

}  // namespace lhc
