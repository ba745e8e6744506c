#include "cfree/trees.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace cfree {

namespace {

void append_key(const PlanarTree& t, std::vector<int>& key) {
    key.push_back(static_cast<int>(t.children.size()));
    for (const auto& c : t.children) append_key(c, key);
}

void append_key(const BicolorTree& t, std::vector<int>& key, std::vector<int>& colors) {
    key.push_back(static_cast<int>(t.children.size()));
    for (size_t i = 0; i < t.children.size(); ++i) {
        colors.push_back(t.colors[i]);
        append_key(t.children[i], key, colors);
    }
}

void check_limit(int n, int n_max) {
    if (n < 1 || n > n_max)
        throw SizeLimitError("vertex count " + std::to_string(n) + " outside 1.." + std::to_string(n_max));
}

}  // namespace

int PlanarTree::size() const {
    int s = 1;
    for (const auto& c : children) s += c.size();
    return s;
}

std::vector<int> PlanarTree::ldf_key() const {
    std::vector<int> key;
    append_key(*this, key);
    return key;
}

int BicolorTree::size() const {
    int s = 1;
    for (const auto& c : children) s += c.size();
    return s;
}

PlanarTree BicolorTree::shape() const {
    PlanarTree t;
    for (const auto& c : children) t.children.push_back(c.shape());
    return t;
}

std::pair<std::vector<int>, std::vector<int>> BicolorTree::key() const {
    std::vector<int> k, c;
    append_key(*this, k, c);
    return {k, c};
}

bool BicolorTree::colors_valid() const {
    if (colors.size() != children.size()) return false;
    for (size_t i = 0; i < colors.size(); ++i) {
        if (colors[i] != 0 && colors[i] != 1) return false;
        if (i > 0 && colors[i] > colors[i - 1]) return false;  // 1s precede 0s
    }
    for (const auto& c : children)
        if (!c.colors_valid()) return false;
    return true;
}

// --- enumeration ---------------------------------------------------------

namespace {

std::vector<PlanarTree> gen_trees(int n);

std::vector<std::vector<PlanarTree>> gen_forest(int total) {
    if (total == 0) return {{}};
    std::vector<std::vector<PlanarTree>> out;
    for (int s = 1; s <= total; ++s)
        for (const auto& first : gen_trees(s))
            for (const auto& rest : gen_forest(total - s)) {
                std::vector<PlanarTree> f;
                f.reserve(rest.size() + 1);
                f.push_back(first);
                for (const auto& t : rest) f.push_back(t);
                out.push_back(std::move(f));
            }
    return out;
}

std::vector<PlanarTree> gen_trees(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<PlanarTree>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<PlanarTree> out;
    for (auto& f : gen_forest(n - 1)) {
        PlanarTree t;
        t.children = std::move(f);
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(),
              [](const PlanarTree& a, const PlanarTree& b) { return a.ldf_key() < b.ldf_key(); });
    return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace

std::vector<PlanarTree> enumerate_trees(int n, int n_max) {
    check_limit(n, n_max);
    return gen_trees(n);
}

namespace {

std::vector<BicolorTree> colorings(const PlanarTree& shape) {
    // colorings of children subtrees, combined by odometer
    std::vector<std::vector<BicolorTree>> per_child;
    per_child.reserve(shape.children.size());
    for (const auto& c : shape.children) per_child.push_back(colorings(c));
    std::vector<BicolorTree> out;
    std::vector<size_t> odo(per_child.size(), 0);
    int deg = static_cast<int>(shape.children.size());
    while (true) {
        for (int k = deg; k >= 0; --k) {  // k color-1 branches, then color-0
            BicolorTree t;
            for (int i = 0; i < deg; ++i) {
                t.children.push_back(per_child[i][odo[i]]);
                t.colors.push_back(i < k ? 1 : 0);
            }
            out.push_back(std::move(t));
        }
        size_t pos = odo.size();
        bool rolled = true;
        while (pos > 0) {
            --pos;
            if (++odo[pos] < per_child[pos].size()) {
                rolled = false;
                break;
            }
            odo[pos] = 0;
        }
        if (rolled) break;
    }
    return out;
}

}  // namespace

std::vector<BicolorTree> enumerate_bicolor(int n, int n_max) {
    check_limit(n, n_max);
    std::vector<BicolorTree> out;
    for (const auto& shape : gen_trees(n))
        for (auto& t : colorings(shape)) out.push_back(std::move(t));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BicolorTree> enumerate_elementary_bicolor(int n, int n_max) {
    check_limit(n, n_max);
    std::vector<BicolorTree> out;
    for (int k = n - 1; k >= 0; --k) {
        BicolorTree t;
        for (int i = 0; i < n - 1; ++i) {
            t.children.emplace_back();
            t.colors.push_back(i < k ? 1 : 0);
        }
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- Theta -----------------------------------------------------------------

namespace {

// Block with minimal element e, or nullptr.
const Block* min_block_of(const NCLPartition& pi, int e) {
    for (const auto& b : pi.blocks)
        if (b.front() == e) return &b;
    return nullptr;
}

PlanarTree theta_build(const NCLPartition& pi, int x) {
    PlanarTree node;
    const Block* d = min_block_of(pi, x);
    if (d)
        for (size_t i = 1; i < d->size(); ++i) node.children.push_back(theta_build(pi, (*d)[i]));
    return node;
}

}  // namespace

PlanarTree theta(const NCLPartition& pi) {
    validate_ncl(pi);
    if (connect(pi) != nc_full(pi.n)) throw DomainError("theta: partition not connected");
    PlanarTree t = theta_build(pi, 1);
    if (t.size() != pi.n) throw DomainError("theta: malformed connected partition");
    return t;
}

namespace {

int theta_inv_build(const PlanarTree& t, int& counter, BlockList& blocks) {
    int me = counter++;
    if (!t.children.empty()) {
        Block b{me};
        size_t slot = blocks.size();
        blocks.push_back(b);
        for (const auto& c : t.children) blocks[slot].push_back(theta_inv_build(c, counter, blocks));
    }
    return me;
}

}  // namespace

NCLPartition theta_inv(const PlanarTree& tree) {
    BlockList blocks;
    int counter = 1;
    theta_inv_build(tree, counter, blocks);
    int n = counter - 1;
    if (n == 1) blocks.push_back({1});
    canonicalize(blocks);
    NCLPartition pi{n, blocks};
    validate_ncl(pi);
    return pi;
}

// --- Lambda ----------------------------------------------------------------

namespace {

struct LambdaBuilder {
    const NCLPartition& pi;

    const Block* min_block(int e) const { return min_block_of(pi, e); }

    // Maximal element connected to w through blocks other than `skip`.
    int extent(int w, const Block* skip) const {
        std::vector<char> seen(pi.n + 1, 0);
        std::vector<int> stack{w};
        seen[w] = 1;
        int best = w;
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            best = std::max(best, e);
            for (const auto& b : pi.blocks) {
                if (&b == skip) continue;
                if (!std::binary_search(b.begin(), b.end(), e)) continue;
                for (int f : b)
                    if (!seen[f]) {
                        seen[f] = 1;
                        stack.push_back(f);
                    }
            }
        }
        return best;
    }

    // Exterior blocks with >1 element of the restriction to [t1, t2].
    std::vector<const Block*> gap_blocks(int t1, int t2) const {
        std::vector<const Block*> inside;
        for (const auto& b : pi.blocks) {
            bool any = false, all = true;
            for (int e : b) {
                bool in = (t1 <= e && e <= t2);
                any = any || in;
                all = all && in;
            }
            if (any && !all)
                throw DomainError("lambda: exterior-block shape incompatible with the construction");
            if (all) inside.push_back(&b);
        }
        std::vector<const Block*> ext;
        for (const Block* b : inside) {
            if (b->size() < 2) continue;
            bool interior = false;
            for (const Block* d : inside) {
                if (d == b) continue;
                if (d->front() <= b->front() && b->front() <= d->back()) {
                    interior = true;
                    break;
                }
            }
            if (!interior) ext.push_back(b);
        }
        std::sort(ext.begin(), ext.end(),
                  [](const Block* a, const Block* b) { return a->front() < b->front(); });
        return ext;
    }

    BicolorTree build_vertex(int x, const Block* entry, int pred) const {
        BicolorTree node;
        std::vector<BicolorTree> same, opp;
        const Block* d = min_block(x);
        if (d == entry) d = nullptr;
        if (d)
            for (size_t i = 1; i < d->size(); ++i) same.push_back(build_vertex((*d)[i], d, (*d)[i - 1]));
        int t2 = x - 1;
        int t1 = pred + 1;
        const Block* hang = min_block(pred);
        if (hang && hang != entry) t1 = extent(pred, entry) + 1;
        if (t1 <= t2) {
            for (const Block* b : gap_blocks(t1, t2)) {
                if ((b->front() % 2) == (x % 2))
                    throw DomainError("lambda: exterior-block shape incompatible with the construction");
                for (size_t i = 1; i < b->size(); ++i)
                    opp.push_back(build_vertex((*b)[i], b, (*b)[i - 1]));
            }
        }
        auto put = [&node](std::vector<BicolorTree>& v, int color) {
            for (auto& c : v) {
                node.children.push_back(std::move(c));
                node.colors.push_back(color);
            }
        };
        if (x % 2 == 1) {
            put(same, 1);
            put(opp, 0);
        } else {
            put(opp, 1);
            put(same, 0);
        }
        return node;
    }
};

}  // namespace

bool lambda_defined(const NCLPartition& pi) {
    try {
        ParitySplit ps = parity_split(pi);
        NCPartition sigma = connect(pi);
        ParitySplit cs = parity_split(as_ncl(sigma));
        return kreweras(NCPartition{cs.minus.n, cs.minus.blocks}) ==
               NCPartition{cs.plus.n, cs.plus.blocks};
    } catch (const DomainError&) {
        return false;
    }
}

BicolorTree lambda(const NCLPartition& pi) {
    parity_split(pi);  // throws "not parity-separated" where applicable
    NCPartition sigma = connect(pi);
    ParitySplit cs = parity_split(as_ncl(sigma));
    if (kreweras(NCPartition{cs.minus.n, cs.minus.blocks}) != NCPartition{cs.plus.n, cs.plus.blocks})
        throw DomainError("lambda: exterior-block shape incompatible with the construction");

    LambdaBuilder lb{pi};
    const Block* odd_ext = min_block_of(pi, 1);
    // even exterior block: the block at the minimum of the component of 2n
    const Block* even_comp = nullptr;
    for (const auto& b : sigma.blocks)
        if (b.back() == pi.n) even_comp = &b;
    const Block* even_ext = min_block_of(pi, even_comp->front());

    BicolorTree root;
    std::vector<BicolorTree> c1, c0;
    for (size_t i = 1; i < odd_ext->size(); ++i)
        c1.push_back(lb.build_vertex((*odd_ext)[i], odd_ext, (*odd_ext)[i - 1]));
    for (size_t i = 1; i < even_ext->size(); ++i)
        c0.push_back(lb.build_vertex((*even_ext)[i], even_ext, (*even_ext)[i - 1]));
    for (auto& c : c1) {
        root.children.push_back(std::move(c));
        root.colors.push_back(1);
    }
    for (auto& c : c0) {
        root.children.push_back(std::move(c));
        root.colors.push_back(0);
    }
    if (2 * root.size() != pi.n)
        throw DomainError("lambda: exterior-block shape incompatible with the construction");
    return root;
}

namespace {

struct InvLayout {
    int pos = 1;
    BlockList blocks;

    int place(const BicolorTree& v, int color) {
        std::vector<std::pair<const BicolorTree*, int>> opp, same;
        for (size_t i = 0; i < v.children.size(); ++i)
            (v.colors[i] == color ? same : opp).emplace_back(&v.children[i], v.colors[i]);
        Block opp_block{pos++};
        for (auto& [w, c] : opp) opp_block.push_back(place(*w, c));
        blocks.push_back(opp_block);  // singleton filler when no opposite children
        int x = pos++;
        if (!same.empty()) {
            Block same_block{x};
            size_t slot = blocks.size();
            blocks.push_back(same_block);
            for (auto& [w, c] : same) blocks[slot].push_back(place(*w, c));
        }
        return x;
    }
};

}  // namespace

NCLPartition lambda_inv(const BicolorTree& tree) {
    if (!tree.colors_valid()) throw DomainError("lambda_inv: invalid bicolor tree");
    InvLayout L;
    Block odd_block{L.pos++};
    size_t odd_slot = L.blocks.size();
    L.blocks.push_back(odd_block);
    for (size_t i = 0; i < tree.children.size(); ++i)
        if (tree.colors[i] == 1) L.blocks[odd_slot].push_back(L.place(tree.children[i], 1));
    Block even_block{L.pos++};
    size_t even_slot = L.blocks.size();
    L.blocks.push_back(even_block);
    for (size_t i = 0; i < tree.children.size(); ++i)
        if (tree.colors[i] == 0) L.blocks[even_slot].push_back(L.place(tree.children[i], 0));
    int n2 = L.pos - 1;
    BlockList bl = L.blocks;
    canonicalize(bl);
    NCLPartition pi{n2, bl};
    validate_ncl(pi);
    return pi;
}

// --- debug views -------------------------------------------------------------

namespace {

void dump(const PlanarTree& t, std::string& out, const std::string& indent) {
    out += indent + "*\n";
    for (const auto& c : t.children) dump(c, out, indent + "  ");
}

void dump(const BicolorTree& t, std::string& out, const std::string& indent) {
    out += indent + "*\n";
    for (size_t i = 0; i < t.children.size(); ++i)
        dump(t.children[i], out, indent + (t.colors[i] == 1 ? " -" : " .") + " ");
}

}  // namespace

std::string ascii_tree(const PlanarTree& t) {
    std::string out;
    dump(t, out, "");
    return out;
}

std::string ascii_tree(const BicolorTree& t) {
    std::string out;
    dump(t, out, "");
    return out;
}

}  // namespace cfree
