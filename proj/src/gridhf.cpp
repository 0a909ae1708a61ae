#include "veer/gridhf.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <unordered_map>

namespace veer {

namespace {

using Packed = std::uint64_t;

inline int get(Packed s, int c) { return static_cast<int>((s >> (4 * c)) & 15u); }

inline Packed swap_entries(Packed s, int i, int j)
{
    const Packed a = (s >> (4 * i)) & 15u, b = (s >> (4 * j)) & 15u;
    s &= ~((Packed{15} << (4 * i)) | (Packed{15} << (4 * j)));
    return s | (b << (4 * i)) | (a << (4 * j));
}

Packed pack(const std::vector<int>& p)
{
    Packed s = 0;
    for (std::size_t c = 0; c < p.size(); ++c) s |= static_cast<Packed>(p[c]) << (4 * c);
    return s;
}

GridState unpack(Packed s, int n)
{
    GridState x;
    x.points.resize(n);
    for (int c = 0; c < n; ++c) x.points[c] = get(s, c);
    return x;
}

// Precomputed per-grid data shared by the grading formulas and the rectangle tests.
class Tables {
public:
    explicit Tables(const GridDiagram& g) : n(g.n), X(g.X), O(g.O)
    {
        validate(g);
        const int N = 2 * n + 1;
        pre.assign(static_cast<std::size_t>(N) * N, 0);
        std::vector<char> cell(static_cast<std::size_t>(n) * n, 0);
        for (int c = 0; c < n; ++c) {
            cell[c * n + X[c]] = 1;
            cell[c * n + O[c]] = 1;
        }
        for (int a = 1; a < N; ++a)
            for (int b = 1; b < N; ++b)
                pre[a * N + b] = pre[(a - 1) * N + b] + pre[a * N + b - 1] - pre[(a - 1) * N + b - 1] +
                                 cell[((a - 1) % n) * n + (b - 1) % n];

        cO.assign(static_cast<std::size_t>(n) * n, 0);
        cX.assign(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) {
            for (int y = 0; y < n; ++y) {
                int o = 0, x = 0;
                for (int j = 0; j < n; ++j) {
                    if (j >= i) {
                        o += O[j] >= y;
                        x += X[j] >= y;
                    } else {
                        o += O[j] < y;
                        x += X[j] < y;
                    }
                }
                cO[i * n + y] = o;
                cX[i * n + y] = x;
            }
        }
        ioo = increasing_pairs(O);
        ixx = increasing_pairs(X);
        ell = grid_components(g);
    }

    int markings(int c0, int w, int r0, int h) const
    {
        const int N = 2 * n + 1;
        return pre[(c0 + w) * N + r0 + h] - pre[c0 * N + r0 + h] - pre[(c0 + w) * N + r0] + pre[c0 * N + r0];
    }

    // Rectangle with lower-left lattice corner (c0, r0), width w, height h; empty when it
    // holds no marking and no state point strictly inside.
    template <class Rows>
    bool empty(const Rows& rows, int c0, int w, int r0, int h) const
    {
        if (markings(c0, w, r0, h)) return false;
        for (int t = 1; t < w; ++t) {
            int c = c0 + t;
            if (c >= n) c -= n;
            int dy = rows(c) - r0;
            if (dy < 0) dy += n;
            if (dy > 0 && dy < h) return false;
        }
        return true;
    }

    // Calls f(i, j) once per empty rectangle leaving the state (lower-left at column i).
    template <class Rows, class F>
    void outgoing(const Rows& rows, F&& f) const
    {
        for (int i = 0; i < n; ++i) {
            const int yi = rows(i);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const int w = j > i ? j - i : j - i + n;
                int h = rows(j) - yi;
                if (h < 0) h += n;
                if (empty(rows, i, w, yi, h)) f(i, j);
            }
        }
    }

    // Calls f(i, j) once per empty rectangle arriving at the state: the source has the
    // entries of columns i and j exchanged.
    template <class Rows, class F>
    void incoming(const Rows& rows, F&& f) const
    {
        for (int i = 0; i < n; ++i) {
            const int yi = rows(i);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const int w = j > i ? j - i : j - i + n;
                const int r0 = rows(j);
                int h = yi - r0;
                if (h < 0) h += n;
                if (empty(rows, i, w, r0, h)) f(i, j);
            }
        }
    }

    template <class Rows>
    Bigrading grading(const Rows& rows) const
    {
        int inc = 0, so = 0, sx = 0;
        for (int i = 0; i < n; ++i) {
            const int yi = rows(i);
            for (int j = i + 1; j < n; ++j) inc += yi < rows(j);
            so += cO[i * n + yi];
            sx += cX[i * n + yi];
        }
        Bigrading b;
        b.maslov = inc - so + ioo + 1;
        b.alexander2 = sx - so + ioo - ixx - (n - ell);
        return b;
    }

    static int increasing_pairs(const std::vector<int>& p)
    {
        int k = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) k += p[i] < p[j];
        return k;
    }

    int n;
    std::vector<int> X, O;
    std::vector<int> pre, cO, cX;
    int ioo = 0, ixx = 0, ell = 0;
};

void cancel_pairs(std::vector<Packed>& v)
{
    std::sort(v.begin(), v.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if ((j - i) % 2) v[out++] = v[i];
        i = j;
    }
    v.resize(out);
}

std::vector<Packed> packed_boundary(const Tables& t, Packed s)
{
    std::vector<Packed> out;
    t.outgoing([s](int c) { return get(s, c); }, [&](int i, int j) { out.push_back(swap_entries(s, i, j)); });
    cancel_pairs(out);
    return out;
}

std::vector<Packed> packed_incoming(const Tables& t, Packed s)
{
    std::vector<Packed> out;
    t.incoming([s](int c) { return get(s, c); }, [&](int i, int j) { out.push_back(swap_entries(s, i, j)); });
    cancel_pairs(out);
    return out;
}

class Enumerator {
public:
    Enumerator(const Tables& t, Bigrading target, const std::function<void(Packed)>& visit)
        : t_(t), n_(t.n), target_(target), visit_(visit)
    {
    }

    std::size_t run()
    {
        dfs(0, 0, 0, 0, 0, 0);
        return count_;
    }

private:
    void dfs(int col, Packed state, std::uint32_t used, int inc, int so, int sx)
    {
        const int a2_const = t_.ioo - t_.ixx - (n_ - t_.ell);
        if (col == n_) {
            if (inc - so + t_.ioo + 1 == target_.maslov && sx - so + a2_const == target_.alexander2) {
                ++count_;
                visit_(state);
            }
            return;
        }
        const int rem = n_ - col;
        int inc_known = inc;
        int o_min = 0, o_max = 0, d_min = 0, d_max = 0;
        for (int u = 0; u < n_; ++u)
            if (!(used >> u & 1u)) inc_known += std::popcount(used & ((1u << u) - 1u));
        for (int j = col; j < n_; ++j) {
            int omin = 1 << 20, omax = -(1 << 20), dmin = 1 << 20, dmax = -(1 << 20);
            for (int u = 0; u < n_; ++u) {
                if (used >> u & 1u) continue;
                const int o = t_.cO[j * n_ + u], d = t_.cX[j * n_ + u] - o;
                omin = std::min(omin, o);
                omax = std::max(omax, o);
                dmin = std::min(dmin, d);
                dmax = std::max(dmax, d);
            }
            o_min += omin;
            o_max += omax;
            d_min += dmin;
            d_max += dmax;
        }
        const int m_lo = inc_known - so - o_max + t_.ioo + 1;
        const int m_hi = inc_known + rem * (rem - 1) / 2 - so - o_min + t_.ioo + 1;
        const int a_lo = sx - so + d_min + a2_const;
        const int a_hi = sx - so + d_max + a2_const;
        if (target_.maslov < m_lo || target_.maslov > m_hi) return;
        if (target_.alexander2 < a_lo || target_.alexander2 > a_hi) return;
        for (int y = 0; y < n_; ++y) {
            if (used >> y & 1u) continue;
            dfs(col + 1, state | (static_cast<Packed>(y) << (4 * col)), used | (1u << y),
                inc + std::popcount(used & ((1u << y) - 1u)), so + t_.cO[col * n_ + y],
                sx + t_.cX[col * n_ + y]);
        }
    }

    const Tables& t_;
    int n_;
    Bigrading target_;
    const std::function<void(Packed)>& visit_;
    std::size_t count_ = 0;
};

using Sparse = std::vector<std::uint32_t>;

void xor_into(Sparse& a, const Sparse& b, Sparse& scratch)
{
    scratch.clear();
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(scratch));
    a.swap(scratch);
}

struct Aborted {
    std::string limit;
};

// Solves A v = c over F2 where column s of A is the boundary of source s. Columns are
// reduced left to right with pivot = largest row index; v is tracked alongside.
std::optional<Sparse> solve(const std::vector<Sparse>& columns, Sparse c, std::size_t rows,
                            std::size_t max_entries)
{
    std::vector<std::int64_t> pivot(rows, -1);
    std::vector<Sparse> R, V;
    std::size_t entries = 0;
    Sparse scratch;
    for (std::size_t s = 0; s < columns.size(); ++s) {
        Sparse r = columns[s], v{static_cast<std::uint32_t>(s)};
        while (!r.empty() && pivot[r.back()] >= 0) {
            const auto p = static_cast<std::size_t>(pivot[r.back()]);
            xor_into(r, R[p], scratch);
            xor_into(v, V[p], scratch);
        }
        if (r.empty()) continue;
        entries += r.size() + v.size();
        if (entries > max_entries) throw Aborted{"max_entries"};
        pivot[r.back()] = static_cast<std::int64_t>(R.size());
        R.push_back(std::move(r));
        V.push_back(std::move(v));
    }
    Sparse w;
    while (!c.empty()) {
        if (pivot[c.back()] < 0) return std::nullopt;
        const auto p = static_cast<std::size_t>(pivot[c.back()]);
        xor_into(c, R[p], scratch);
        xor_into(w, V[p], scratch);
    }
    return w;
}

Bigrading homogeneous_grading(const Tables& t, const ChainF2& c)
{
    const Bigrading b = t.grading([&](int col) { return c.front().points[col]; });
    for (const GridState& x : c)
        if (!(t.grading([&](int col) { return x.points[col]; }) == b))
            throw std::invalid_argument("chain is not homogeneous");
    return b;
}

}  // namespace

GridState theta_state(const GridDiagram& g)
{
    validate(g);
    GridState x;
    x.points.resize(g.n);
    for (int i = 0; i < g.n; ++i) x.points[(i + 1) % g.n] = (g.X[i] + 1) % g.n;
    return x;
}

Bigrading bigrading(const GridDiagram& g, const GridState& x)
{
    Tables t(g);
    return t.grading([&](int c) { return x.points[c]; });
}

int maslov(const GridDiagram& g, const GridState& x) { return bigrading(g, x).maslov; }

int alexander2(const GridDiagram& g, const GridState& x) { return bigrading(g, x).alexander2; }

ChainF2 normalize(ChainF2 c)
{
    std::sort(c.begin(), c.end());
    ChainF2 out;
    for (std::size_t i = 0; i < c.size();) {
        std::size_t j = i;
        while (j < c.size() && c[j] == c[i]) ++j;
        if ((j - i) % 2) out.push_back(c[i]);
        i = j;
    }
    return out;
}

ChainF2 boundary(const GridDiagram& g, const GridState& x)
{
    Tables t(g);
    ChainF2 out;
    t.outgoing([&](int c) { return x.points[c]; }, [&](int i, int j) {
        GridState y = x;
        std::swap(y.points[i], y.points[j]);
        out.push_back(std::move(y));
    });
    return normalize(std::move(out));
}

ChainF2 boundary(const GridDiagram& g, const ChainF2& c)
{
    ChainF2 out;
    for (const GridState& x : c) {
        ChainF2 d = boundary(g, x);
        out.insert(out.end(), d.begin(), d.end());
    }
    return normalize(std::move(out));
}

bool is_cycle(const GridDiagram& g, const ChainF2& c) { return boundary(g, c).empty(); }

bool has_incoming_rectangle(const GridDiagram& g, const GridState& x)
{
    Tables t(g);
    ChainF2 sources;
    t.incoming([&](int c) { return x.points[c]; }, [&](int i, int j) {
        GridState y = x;
        std::swap(y.points[i], y.points[j]);
        sources.push_back(std::move(y));
    });
    return !normalize(std::move(sources)).empty();
}

std::size_t enumerate_states(const GridDiagram& g, Bigrading target,
                             const std::function<void(const GridState&)>& visit, const EnumerateLimits& limits)
{
    if (g.n > limits.n_max || g.n > kPackedMaxN)
        throw SizeLimitExceeded("state enumeration limited to grid size " +
                                std::to_string(std::min(limits.n_max, kPackedMaxN)));
    Tables t(g);
    const std::function<void(Packed)> cb = [&](Packed s) { visit(unpack(s, g.n)); };
    return Enumerator(t, target, cb).run();
}

std::vector<GridState> states_with_grading(const GridDiagram& g, Bigrading target, const EnumerateLimits& limits)
{
    std::vector<GridState> out;
    enumerate_states(g, target, [&](const GridState& x) { out.push_back(x); }, limits);
    return out;
}

NonvanishingResult is_boundary(const GridDiagram& g, const ChainF2& chain, const SolverLimits& limits)
{
    NonvanishingResult res;
    const ChainF2 c = normalize(chain);
    if (c.empty()) {
        res.status = NonvanishingResult::Status::Zero;
        return res;
    }
    if (g.n > kPackedMaxN) {
        res.limit = "packed_size";
        return res;
    }
    if (limits.strategy == SolveStrategy::FullGrading && g.n > limits.n_max) {
        res.limit = "n_max";
        return res;
    }
    Tables t(g);
    res.grading = homogeneous_grading(t, c);
    const Bigrading src_grading{res.grading.maslov + 1, res.grading.alexander2};

    std::vector<Packed> sources, targets;
    try {
        if (limits.strategy == SolveStrategy::FullGrading) {
            const std::function<void(Packed)> cb = [&](Packed s) {
                sources.push_back(s);
                if (sources.size() > limits.max_states) throw Aborted{"max_states"};
            };
            Enumerator(t, src_grading, cb).run();
            for (Packed s : sources)
                for (Packed y : packed_boundary(t, s)) targets.push_back(y);
            for (const GridState& x : c) targets.push_back(pack(x.points));
        } else {
            std::unordered_map<Packed, char> seen_t, seen_s;
            std::vector<Packed> queue;
            for (const GridState& x : c) {
                const Packed p = pack(x.points);
                seen_t.emplace(p, 1);
                queue.push_back(p);
            }
            for (std::size_t head = 0; head < queue.size(); ++head) {
                for (Packed s : packed_incoming(t, queue[head])) {
                    if (!seen_s.emplace(s, 1).second) continue;
                    sources.push_back(s);
                    for (Packed y : packed_boundary(t, s))
                        if (seen_t.emplace(y, 1).second) queue.push_back(y);
                }
                if (seen_s.size() + seen_t.size() > limits.max_states) throw Aborted{"max_states"};
            }
            targets = std::move(queue);
        }
        std::sort(sources.begin(), sources.end());
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        res.sources = sources.size();
        res.targets = targets.size();

        auto index_of = [&targets](Packed y) {
            return static_cast<std::uint32_t>(std::lower_bound(targets.begin(), targets.end(), y) - targets.begin());
        };
        std::vector<Sparse> columns(sources.size());
        std::size_t entries = 0;
        for (std::size_t k = 0; k < sources.size(); ++k) {
            for (Packed y : packed_boundary(t, sources[k])) columns[k].push_back(index_of(y));
            std::sort(columns[k].begin(), columns[k].end());
            entries += columns[k].size();
            if (entries > limits.max_entries) throw Aborted{"max_entries"};
        }
        Sparse rhs;
        for (const GridState& x : c) rhs.push_back(index_of(pack(x.points)));
        std::sort(rhs.begin(), rhs.end());

        const auto w = solve(columns, rhs, targets.size(), limits.max_entries - entries);
        if (!w) {
            res.status = NonvanishingResult::Status::Nonzero;
            res.reason = NonvanishingResult::Reason::SolverNoSolution;
            return res;
        }
        res.status = NonvanishingResult::Status::Zero;
        for (std::uint32_t k : *w) res.witness.push_back(unpack(sources[k], g.n));
        res.witness = normalize(std::move(res.witness));
    } catch (const Aborted& a) {
        res.status = NonvanishingResult::Status::Aborted;
        res.limit = a.limit;
    }
    return res;
}

NonvanishingResult theta_nonvanishing(const GridDiagram& g, const SolverLimits& limits)
{
    const GridState theta = theta_state(g);
    if (limits.fast_path && !has_incoming_rectangle(g, theta)) {
        NonvanishingResult res;
        res.status = NonvanishingResult::Status::Nonzero;
        res.reason = NonvanishingResult::Reason::NoIncomingRectangle;
        res.grading = bigrading(g, theta);
        return res;
    }
    NonvanishingResult res = is_boundary(g, {theta}, limits);
    res.grading = bigrading(g, theta);
    return res;
}

const char* to_string(NonvanishingResult::Status s)
{
    switch (s) {
    case NonvanishingResult::Status::Nonzero: return "nonzero";
    case NonvanishingResult::Status::Zero: return "zero";
    default: return "aborted";
    }
}

const char* to_string(NonvanishingResult::Reason r)
{
    switch (r) {
    case NonvanishingResult::Reason::NoIncomingRectangle: return "no incoming rectangles";
    case NonvanishingResult::Reason::SolverNoSolution: return "solver: no solution";
    default: return "none";
    }
}

}  // namespace veer
