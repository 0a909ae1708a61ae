#include "veer/shorten.hpp"

#include <cstdlib>
#include <map>
#include <queue>
#include <set>

#include "veer/dehornoy.hpp"
#include "veer/grid.hpp"

namespace veer {

namespace {

struct Rule {
    std::vector<int> lhs, rhs;
};

void words_over_pair(int len, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (int e : {1, -1, 2, -2}) {
        if (!cur.empty() && cur.back() == -e) continue;
        cur.push_back(e);
        words_over_pair(len, cur, out);
        cur.pop_back();
    }
}

// Every identity u = v between freely reduced words in two adjacent generators with
// |v| <= |u| <= 4, found by checking all candidates in B3.
const std::vector<Rule>& pair_rules()
{
    static const std::vector<Rule> rules = [] {
        std::vector<std::vector<int>> by_len[5];
        for (int len = 0; len <= 4; ++len) {
            std::vector<int> cur;
            words_over_pair(len, cur, by_len[len]);
        }
        std::vector<Rule> out;
        for (int lu = 3; lu <= 4; ++lu) {
            for (const auto& u : by_len[lu]) {
                const BraidWord bu(3, u);
                for (int lv = 0; lv <= lu; ++lv) {
                    for (const auto& v : by_len[lv]) {
                        if (v == u) continue;
                        if (equals(bu, BraidWord(3, v))) out.push_back({u, v});
                    }
                }
            }
        }
        return out;
    }();
    return rules;
}

int shift_letter(int x, int base) { return x > 0 ? x + base : x - base; }

struct Node {
    int cost;
    std::vector<int> w;
    std::vector<int> g;

    bool operator>(const Node& o) const
    {
        if (cost != o.cost) return cost > o.cost;
        if (w.size() != o.w.size()) return w.size() > o.w.size();
        return w > o.w;
    }
};

void free_cancel(std::vector<int>& w)
{
    std::vector<int> out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    w.swap(out);
}

void cyclic_cancel(Node& node)
{
    free_cancel(node.w);
    while (node.w.size() >= 2 && node.w.front() == -node.w.back()) {
        const int x = node.w.front();
        node.w.erase(node.w.begin());
        node.w.pop_back();
        node.g.insert(node.g.begin(), -x);
    }
    free_cancel(node.g);
}

}  // namespace

Shortened shorten_conjugate(const BraidWord& input, int max_expansions)
{
    const int m = input.strands();
    auto cost_of = [m](const std::vector<int>& w) {
        return braid_to_grid(BraidWord(m, w), GridLayout::Compact).n;
    };

    Node start{0, input.letters(), {}};
    cyclic_cancel(start);
    start.cost = cost_of(start.w);

    std::priority_queue<Node, std::vector<Node>, std::greater<Node>> open;
    std::set<std::vector<int>> seen;
    open.push(start);
    seen.insert(start.w);
    Node best = start;

    auto offer = [&](Node next) {
        cyclic_cancel(next);
        if (!seen.insert(next.w).second) return;
        next.cost = cost_of(next.w);
        open.push(std::move(next));
    };

    const auto& rules = pair_rules();
    // Lengthening moves are allowed up to this many letters, so the search can pass through
    // longer spellings whose grids behave better.
    const std::size_t max_length = start.w.size() + 2;
    std::vector<ConjugateWord> explored;
    for (int expanded = 0; expanded < max_expansions && !open.empty(); ++expanded) {
        Node cur = open.top();
        open.pop();
        if (best > cur) best = cur;
        explored.push_back({BraidWord(m, cur.w), BraidWord(m, cur.g), cur.cost});
        const std::vector<int>& w = cur.w;
        const std::size_t L = w.size();
        if (L >= 2) {
            Node a = cur;
            const int x = a.w.front();
            a.w.erase(a.w.begin());
            a.w.push_back(x);
            a.g.insert(a.g.begin(), -x);
            offer(std::move(a));
            Node b = cur;
            const int y = b.w.back();
            b.w.pop_back();
            b.w.insert(b.w.begin(), y);
            b.g.insert(b.g.begin(), y);
            offer(std::move(b));
        }
        for (std::size_t p = 0; p + 1 < L; ++p) {
            if (std::abs(std::abs(w[p]) - std::abs(w[p + 1])) >= 2) {
                Node c = cur;
                std::swap(c.w[p], c.w[p + 1]);
                offer(std::move(c));
            }
        }
        for (int base = 0; base + 2 < m; ++base) {
            for (const Rule& r : rules) {
                for (const bool forward : {true, false}) {
                    const std::vector<int>& from = forward ? r.lhs : r.rhs;
                    const std::vector<int>& to = forward ? r.rhs : r.lhs;
                    const std::size_t k = from.size();
                    if (L - k + to.size() > max_length) continue;
                    for (std::size_t p = 0; p + k <= L; ++p) {
                        bool match = true;
                        for (std::size_t t = 0; t < k && match; ++t) match = w[p + t] == shift_letter(from[t], base);
                        if (!match) continue;
                        Node c = cur;
                        std::vector<int> repl;
                        for (int x : to) repl.push_back(shift_letter(x, base));
                        c.w.erase(c.w.begin() + p, c.w.begin() + p + k);
                        c.w.insert(c.w.begin() + p, repl.begin(), repl.end());
                        offer(std::move(c));
                    }
                }
            }
        }
    }
    Shortened out;
    out.word = BraidWord(m, best.w);
    out.conjugator = BraidWord(m, best.g);
    out.grid_size = best.cost;
    out.explored = std::move(explored);
    return out;
}

}  // namespace veer
