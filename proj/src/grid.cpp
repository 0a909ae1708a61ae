#include "veer/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace veer {

namespace {

int mod(int a, int n)
{
    a %= n;
    return a < 0 ? a + n : a;
}

bool is_perm(const std::vector<int>& p, int n)
{
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::vector<int> invert(const std::vector<int>& p)
{
    std::vector<int> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

struct Move {
    int from_rank;
    int to_rank;
};

std::vector<Move> split_moves(const std::vector<int>& letters, bool merge_runs)
{
    std::vector<Move> moves;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const int e = letters[i];
        const int k = std::abs(e) - 1;
        Move mv = e > 0 ? Move{k, k + 1} : Move{k + 1, k};
        if (merge_runs) {
            int last = e;
            while (i + 1 < letters.size() && letters[i + 1] == last + 1 && (last > 0) == (letters[i + 1] > 0)) {
                ++i;
                last = letters[i];
                mv.to_rank += e > 0 ? 1 : -1;
            }
        }
        moves.push_back(mv);
    }
    return moves;
}

// Columns live in a linked left-to-right order; each row records (leaving column, landing column).
GridDiagram layout_word(const BraidWord& w, bool compact)
{
    const int m = w.strands();
    const std::vector<Move> moves = split_moves(w.letters(), compact);
    const std::vector<int> final_rank = permutation(w).images;

    std::vector<int> last_move(m, -1);
    {
        std::vector<int> at(m);
        std::iota(at.begin(), at.end(), 0);
        for (std::size_t t = 0; t < moves.size(); ++t) {
            const int s = at[moves[t].from_rank];
            last_move[s] = static_cast<int>(t);
            if (moves[t].to_rank > moves[t].from_rank)
                std::rotate(at.begin() + moves[t].from_rank, at.begin() + moves[t].from_rank + 1,
                            at.begin() + moves[t].to_rank + 1);
            else
                std::rotate(at.begin() + moves[t].to_rank, at.begin() + moves[t].from_rank,
                            at.begin() + moves[t].from_rank + 1);
        }
    }

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    int next_col = m;
    auto where = [&order](int col) {
        return static_cast<int>(std::find(order.begin(), order.end(), col) - order.begin());
    };
    auto insert_fresh = [&](int index) {
        order.insert(order.begin() + index, next_col);
        return next_col++;
    };

    std::vector<int> at(m), col_of(m);
    std::iota(at.begin(), at.end(), 0);
    std::iota(col_of.begin(), col_of.end(), 0);
    std::vector<char> vacated(m, 0), landed(m, 0);
    std::vector<std::pair<int, int>> rows;

    for (int s = 0; s < m; ++s) {
        if (last_move[s] < 0 && final_rank[s] == s) {
            const int f = insert_fresh(where(s));
            rows.push_back({s, f});
            col_of[s] = f;
            vacated[s] = 1;
        }
    }

    for (std::size_t t = 0; t < moves.size(); ++t) {
        const int p = moves[t].from_rank, q = moves[t].to_rank;
        const int s = at[p];
        const int src = col_of[s];
        int lo_nb, hi_nb;  // neighbours of the landing gap, by rank; -1 or m when absent
        if (q > p) {
            lo_nb = q;
            hi_nb = q + 1 < m ? q + 1 : m;
        } else {
            lo_nb = q > 0 ? q - 1 : -1;
            hi_nb = q;
        }
        int dst = -1;
        const int home = final_rank[s];
        if (compact && last_move[s] == static_cast<int>(t) && vacated[home] && !landed[home]) {
            const int hp = where(home);
            const bool right_of_lo = lo_nb < 0 || where(col_of[at[lo_nb]]) < hp;
            const bool left_of_hi = hi_nb >= m || hp < where(col_of[at[hi_nb]]);
            if (right_of_lo && left_of_hi) {
                dst = home;
                landed[home] = 1;
            }
        }
        if (dst < 0) {
            if (q > p)
                dst = insert_fresh(where(col_of[at[q]]) + 1);
            else
                dst = insert_fresh(where(col_of[at[q]]));
        }
        rows.push_back({src, dst});
        if (src < m) vacated[src] = 1;
        col_of[s] = dst;
        if (q > p)
            std::rotate(at.begin() + p, at.begin() + p + 1, at.begin() + q + 1);
        else
            std::rotate(at.begin() + q, at.begin() + p, at.begin() + p + 1);
    }

    // Closing moves: left-movers by increasing rank, then right-movers by decreasing rank;
    // none of them crosses a vertical segment.
    std::vector<int> left, right;
    for (int r = 0; r < m; ++r) {
        const int s = at[r];
        if (col_of[s] == r) continue;
        (where(col_of[s]) > where(r) ? left : right).push_back(r);
    }
    std::reverse(right.begin(), right.end());
    for (const auto& group : {left, right}) {
        for (int r : group) {
            rows.push_back({col_of[at[r]], r});
            col_of[at[r]] = r;
        }
    }

    GridDiagram g;
    g.n = static_cast<int>(order.size());
    g.X.assign(g.n, -1);
    g.O.assign(g.n, -1);
    std::vector<int> x_of(g.n);
    for (int i = 0; i < g.n; ++i) x_of[order[i]] = i;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        g.O[x_of[rows[r].first]] = r;
        g.X[x_of[rows[r].second]] = r;
    }
    return g;
}

}  // namespace

void validate(const GridDiagram& g)
{
    if (g.n < 2) throw InvalidGrid("grid size must be at least 2");
    if (!is_perm(g.X, g.n)) throw InvalidGrid("X is not a permutation of size n");
    if (!is_perm(g.O, g.n)) throw InvalidGrid("O is not a permutation of size n");
    for (int c = 0; c < g.n; ++c)
        if (g.X[c] == g.O[c]) throw InvalidGrid("X and O share the cell in column " + std::to_string(c));
}

int wrapped_columns(const GridDiagram& g)
{
    int w = 0;
    for (int c = 0; c < g.n; ++c) w += g.X[c] > g.O[c];
    return w;
}

BraidWord grid_to_braid(const GridDiagram& g)
{
    validate(g);
    const std::vector<int> xcol = invert(g.X), ocol = invert(g.O);
    std::vector<int> active;
    for (int c = 0; c < g.n; ++c)
        if (g.X[c] > g.O[c]) active.push_back(c);
    const int m = static_cast<int>(active.size());
    std::vector<int> letters;
    for (int r = 0; r < g.n; ++r) {
        const int a = ocol[r], b = xcol[r];
        const auto ia = std::find(active.begin(), active.end(), a);
        const int p = static_cast<int>(ia - active.begin());
        active.erase(ia);
        const auto ib = std::lower_bound(active.begin(), active.end(), b);
        const int q = static_cast<int>(ib - active.begin());
        active.insert(ib, b);
        for (int k = p; k < q; ++k) letters.push_back(k + 1);
        for (int k = p; k > q; --k) letters.push_back(-k);
    }
    return BraidWord(m, std::move(letters));
}

bool is_model_word(const BraidWord& w, int* k)
{
    const int n = w.strands();
    if (n < 3) return false;
    const int len = static_cast<int>(w.length()) - 2 * (n - 1);
    if (len <= 0 || len % (n - 2) != 0) return false;
    if (w.letters() != model_braid(len / (n - 2), n).letters()) return false;
    if (k) *k = len / (n - 2);
    return true;
}

GridDiagram helix_grid(int k, int n)
{
    if (n < 3 || k < 1) throw std::invalid_argument("helix grid needs n >= 3 and k >= 1");
    const int B = n - 1;
    const int size = B * (k + B);
    std::vector<int> offs(B, 1);
    offs[0] = B;
    offs[B - 1] = B * B - B + 2;
    GridDiagram g;
    g.n = size;
    g.X.resize(size);
    g.O.resize(size);
    for (int c = 0; c < size; ++c) {
        const int j = c / B, t = c % B;
        g.X[c] = mod(-B * j + t, size);
        g.O[c] = mod(g.X[c] + offs[t], size);
    }
    const BraidWord target = model_braid(k, n);
    for (int dr = 0; dr < size; ++dr) {
        GridDiagram h = translate(g, 0, dr);
        if (grid_to_braid(h) == target) return h;
    }
    throw std::logic_error("helix layout does not read back as the model word");
}

GridDiagram braid_to_grid(const BraidWord& w, GridLayout layout)
{
    const BraidWord r = free_reduce(w);
    int k = 0;
    if (is_model_word(r, &k)) return helix_grid(k, r.strands());
    return layout_word(r, layout == GridLayout::Compact);
}

int grid_components(const GridDiagram& g)
{
    validate(g);
    const std::vector<int> xcol = invert(g.X);
    std::vector<char> seen(g.n, 0);
    int cycles = 0;
    for (int c = 0; c < g.n; ++c) {
        if (seen[c]) continue;
        ++cycles;
        for (int d = c; !seen[d]; d = xcol[g.O[d]]) seen[d] = 1;
    }
    return cycles;
}

int grid_writhe(const GridDiagram& g)
{
    validate(g);
    const std::vector<int> xcol = invert(g.X), ocol = invert(g.O);
    // Column c carries a vertical segment through the horizontal line of row r
    // when r lies strictly inside its upward run from X to O.
    auto covers = [&g](int c, int r) {
        const int lo = g.X[c], hi = g.O[c];
        return lo < hi ? (lo < r && r < hi) : (r > lo || r < hi);
    };
    int writhe = 0;
    for (int r = 0; r < g.n; ++r) {
        const int a = ocol[r], b = xcol[r];
        const int sign = b > a ? 1 : -1;
        for (int c = std::min(a, b) + 1; c < std::max(a, b); ++c)
            if (covers(c, r)) writhe += sign;
    }
    return writhe;
}

GridDiagram translate(const GridDiagram& g, int dc, int dr)
{
    GridDiagram h;
    h.n = g.n;
    h.X.resize(g.n);
    h.O.resize(g.n);
    for (int c = 0; c < g.n; ++c) {
        h.X[mod(c + dc, g.n)] = mod(g.X[c] + dr, g.n);
        h.O[mod(c + dc, g.n)] = mod(g.O[c] + dr, g.n);
    }
    return h;
}

std::string to_json(const GridDiagram& g)
{
    nlohmann::ordered_json j;
    j["n"] = g.n;
    j["X"] = g.X;
    j["O"] = g.O;
    return j.dump();
}

GridDiagram from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedJson(e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("X") || !j.contains("O"))
        throw MalformedJson("grid JSON needs fields n, X and O");
    auto integers = [](const nlohmann::json& v) {
        return v.is_array() && std::all_of(v.begin(), v.end(), [](const auto& e) { return e.is_number_integer(); });
    };
    if (!j["n"].is_number_integer() || !integers(j["X"]) || !integers(j["O"]))
        throw MalformedJson("grid JSON fields must be integers");
    GridDiagram g;
    try {
        g.n = j.at("n").get<int>();
        g.X = j.at("X").get<std::vector<int>>();
        g.O = j.at("O").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw MalformedJson(e.what());
    }
    validate(g);
    return g;
}

std::string render_ascii(const GridDiagram& g)
{
    std::ostringstream out;
    for (int r = g.n - 1; r >= 0; --r) {
        for (int c = 0; c < g.n; ++c) out << (g.X[c] == r ? 'X' : g.O[c] == r ? 'O' : '.');
        out << '\n';
    }
    return out.str();
}

}  // namespace veer
