#include "gsym/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace gsym {

int finite_group::mul(int x, int y) const {
    if (x < 0 || x >= order_ || y < 0 || y >= order_)
        throw group_error("element index out of range");
    return mul_table_[x * order_ + y];
}

int finite_group::inv(int x) const {
    if (x < 0 || x >= order_) throw group_error("element index out of range");
    return inv_table_[x];
}

int finite_group::element_order(int x) const {
    if (x < 0 || x >= order_) throw group_error("element index out of range");
    int p = x;
    int n = 1;
    while (p != identity()) {
        p = mul(p, x);
        ++n;
    }
    return n;
}

const std::string& finite_group::label(int x) const {
    if (x < 0 || x >= order_) throw group_error("element index out of range");
    return labels_[x];
}

int finite_group::named(char name) const {
    for (auto& [c, idx] : names_)
        if (c == name) return idx;
    throw group_error(std::string("unknown element name '") + name + "'");
}

int finite_group::eval_word(const gen_word& w, const std::vector<int>& slot_values) const {
    int acc = identity();
    for (int s : w) {
        int v = s >= 0 ? slot_values.at(s) : inv(slot_values.at(~s));
        acc = mul(acc, v);
    }
    return acc;
}

void finite_group::self_check() const {
    const int n = order_;
    for (int x = 0; x < n; ++x) {
        if (mul(0, x) != x || mul(x, 0) != x)
            throw std::logic_error("group self-check: identity law violated");
        if (mul(x, inv_table_[x]) != 0 || mul(inv_table_[x], x) != 0)
            throw std::logic_error("group self-check: inverse law violated");
    }
    if (n <= 64) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                        throw std::logic_error("group self-check: associativity violated");
    }
    // each row/column a permutation
    for (int x = 0; x < n; ++x) {
        std::vector<bool> row(n, false), col(n, false);
        for (int y = 0; y < n; ++y) {
            row[mul(x, y)] = true;
            col[mul(y, x)] = true;
        }
        if (std::count(row.begin(), row.end(), true) != n ||
            std::count(col.begin(), col.end(), true) != n)
            throw std::logic_error("group self-check: table row/column not a bijection");
    }
    for (const auto& rel : relations_)
        if (eval_word(rel, gens_) != identity())
            throw std::logic_error("group self-check: defining relation violated");
}

finite_group build_group(int order, std::vector<int> mul_table, std::vector<int> gens,
                         std::vector<gen_word> relations, std::vector<std::string> labels,
                         std::vector<std::pair<char, int>> names) {
    finite_group g;
    g.order_ = order;
    g.mul_table_ = std::move(mul_table);
    g.gens_ = std::move(gens);
    g.relations_ = std::move(relations);
    g.labels_ = std::move(labels);
    g.names_ = std::move(names);
    g.inv_table_.assign(order, -1);
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y)
            if (g.mul_table_[x * order + y] == 0) g.inv_table_[x] = y;
    g.self_check();
    return g;
}

namespace {

std::string power_label(const std::string& base, int exp) {
    if (exp == 0) return "";
    if (exp == 1) return base;
    return base + "^" + std::to_string(exp);
}

}  // namespace

finite_group finite_group::make_modular27() {
    // Conjugation constant: b a b^-1 = a^t with 4t = 1 (mod 9).
    int t = -1;
    for (int cand = 0; cand < 9; ++cand)
        if (4 * cand % 9 == 1) t = cand;
    if (t < 0) throw std::logic_error("modular-27: no conjugation constant");

    auto idx = [](int i, int j) { return 3 * i + j; };
    const int n = 27;
    std::vector<int> table(n * n);
    int tpow[3] = {1, t % 9, t * t % 9};
    for (int i1 = 0; i1 < 9; ++i1)
        for (int j1 = 0; j1 < 3; ++j1)
            for (int i2 = 0; i2 < 9; ++i2)
                for (int j2 = 0; j2 < 3; ++j2)
                    table[idx(i1, j1) * n + idx(i2, j2)] =
                        idx((i1 + tpow[j1] * i2) % 9, (j1 + j2) % 3);

    std::vector<std::string> labels(n);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 3; ++j) {
            std::string s = power_label("a", i);
            std::string bs = power_label("b", j);
            if (!bs.empty()) s += (s.empty() ? "" : " ") + bs;
            labels[idx(i, j)] = s.empty() ? "e" : s;
        }

    const int a = idx(1, 0), b = idx(0, 1);
    // a^9, b^3, b^-1 a b a^-4 as words over generator slots {0: a, 1: b}
    std::vector<gen_word> rels = {
        gen_word(9, 0),
        gen_word(3, 1),
        {~1, 0, 1, ~0, ~0, ~0, ~0},
    };
    finite_group g = build_group(n, std::move(table), {a, b}, std::move(rels),
                                 std::move(labels), {});
    const int c = g.mul(b, g.inv(a));
    g.names_ = {{'a', a}, {'b', b}, {'c', c}};
    return g;
}

finite_group finite_group::make_cyclic(int n) {
    if (n < 1 || n > 64) throw group_error("cyclic group order must be in [1, 64]");
    std::vector<int> table(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) table[x * n + y] = (x + y) % n;
    std::vector<std::string> labels(n);
    for (int k = 0; k < n; ++k) {
        std::string s = power_label("x", k);
        labels[k] = s.empty() ? "e" : s;
    }
    int x = n > 1 ? 1 : 0;
    return build_group(n, std::move(table), {x}, {gen_word(n, 0)}, std::move(labels),
                       {{'x', x}});
}

std::vector<int> generated_closure(const finite_group& g, const std::vector<int>& gens) {
    std::vector<bool> seen(g.order(), false);
    seen[g.identity()] = true;
    std::deque<int> queue = {g.identity()};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int s : gens) {
            int y = g.mul(x, s);
            if (!seen[y]) {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    std::vector<int> out;
    for (int x = 0; x < g.order(); ++x)
        if (seen[x]) out.push_back(x);
    return out;
}

std::vector<group_automorphism> enumerate_automorphisms(const finite_group& g,
                                                        const std::vector<int>& gens) {
    const int n = g.order();
    if ((int)generated_closure(g, gens).size() != n)
        throw non_generating_set("generators do not generate the group");

    const int k = (int)gens.size();
    std::vector<group_automorphism> out;
    std::vector<int> images(k, 0);

    auto try_images = [&]() {
        for (const auto& rel : g.relations())
            if (g.eval_word(rel, images) != g.identity()) return;
        if ((int)generated_closure(g, images).size() != n) return;

        // Extend to a full element map by closure from the identity; any
        // conflict means the images do not define a homomorphism.
        std::vector<int> map(n, -1);
        map[g.identity()] = g.identity();
        std::deque<int> queue = {g.identity()};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int s = 0; s < k; ++s) {
                int y = g.mul(x, gens[s]);
                int im = g.mul(map[x], images[s]);
                if (map[y] == -1) {
                    map[y] = im;
                    queue.push_back(y);
                } else if (map[y] != im) {
                    return;
                }
            }
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (map[g.mul(x, y)] != g.mul(map[x], map[y])) return;
        std::vector<bool> hit(n, false);
        for (int x = 0; x < n; ++x) hit[map[x]] = true;
        if (std::count(hit.begin(), hit.end(), true) != n) return;
        out.push_back({std::move(map)});
    };

    // odometer over all image tuples
    while (true) {
        try_images();
        int pos = k - 1;
        while (pos >= 0 && ++images[pos] == n) images[pos--] = 0;
        if (pos < 0) break;
    }
    return out;
}

int parse_element(const finite_group& g, const std::string& word) {
    if (word == "e") return g.identity();
    int acc = g.identity();
    for (char ch : word) {
        bool inverse = ch >= 'A' && ch <= 'Z';
        char name = inverse ? (char)(ch - 'A' + 'a') : ch;
        int el = g.named(name);
        acc = g.mul(acc, inverse ? g.inv(el) : el);
    }
    return acc;
}

}  // namespace gsym
