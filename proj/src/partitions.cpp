#include "cfree/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace cfree {

namespace {

void check_limit(int n, int n_max) {
    if (n < 1 || n > n_max)
        throw SizeLimitError("ground-set size " + std::to_string(n) + " outside 1.." + std::to_string(n_max));
}

// Consecutive-element arcs of every block; two blocks cross iff two of their
// arcs interleave strictly.
std::vector<std::pair<int, int>> arcs_of(const BlockList& blocks) {
    std::vector<std::pair<int, int>> arcs;
    for (const auto& b : blocks)
        for (size_t i = 0; i + 1 < b.size(); ++i) arcs.emplace_back(b[i], b[i + 1]);
    return arcs;
}

bool arcs_cross(const std::pair<int, int>& x, const std::pair<int, int>& y) {
    return (x.first < y.first && y.first < x.second && x.second < y.second) ||
           (y.first < x.first && x.first < y.second && y.second < x.second);
}

}  // namespace

void canonicalize(BlockList& blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
}

bool is_noncrossing(const BlockList& blocks) {
    auto arcs = arcs_of(blocks);
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j)
            if (arcs_cross(arcs[i], arcs[j])) return false;
    return true;
}

namespace {

void validate_common(int n, const BlockList& blocks, bool allow_links) {
    if (n < 1) throw DomainError("ground-set size must be positive");
    std::vector<int> count(n + 1, 0);
    for (const auto& b : blocks) {
        if (b.empty()) throw DomainError("empty block");
        for (size_t i = 0; i < b.size(); ++i) {
            if (b[i] < 1 || b[i] > n) throw DomainError("element out of range");
            if (i > 0 && b[i] <= b[i - 1]) throw DomainError("block not strictly increasing");
            count[b[i]]++;
        }
    }
    for (int e = 1; e <= n; ++e) {
        if (count[e] == 0) throw DomainError("element " + std::to_string(e) + " not covered");
        if (!allow_links && count[e] > 1) throw DomainError("element repeated across blocks");
        if (count[e] > 2) throw DomainError("element in more than two blocks");
    }
    for (size_t i = 0; i + 1 < blocks.size(); ++i)
        if (blocks[i].front() >= blocks[i + 1].front())
            throw DomainError("blocks not sorted by minimal element");
    if (!is_noncrossing(blocks)) throw DomainError("blocks cross");
}

}  // namespace

void validate_nc(const NCPartition& p) {
    validate_common(p.n, p.blocks, false);
}

void validate_ncl(const NCLPartition& p) {
    validate_common(p.n, p.blocks, true);
    // Shared elements: both blocks have >= 2 elements and the element is the
    // minimum of exactly one of them.
    for (size_t i = 0; i < p.blocks.size(); ++i)
        for (size_t j = i + 1; j < p.blocks.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(p.blocks[i].begin(), p.blocks[i].end(), p.blocks[j].begin(),
                                  p.blocks[j].end(), std::back_inserter(common));
            if (common.empty()) continue;
            if (common.size() > 1) throw DomainError("blocks share more than one element");
            int e = common[0];
            if (p.blocks[i].size() < 2 || p.blocks[j].size() < 2)
                throw DomainError("linked block with fewer than two elements");
            bool mi = p.blocks[i].front() == e, mj = p.blocks[j].front() == e;
            if (mi == mj) throw DomainError("shared element must be minimal in exactly one block");
        }
}

NCPartition nc_full(int n) {
    Block b(n);
    std::iota(b.begin(), b.end(), 1);
    return NCPartition{n, {b}};
}

NCPartition nc_discrete(int n) {
    BlockList bl;
    for (int i = 1; i <= n; ++i) bl.push_back({i});
    return NCPartition{n, bl};
}

// --- NC enumeration (lexicographic stream) ----------------------------------

namespace {

// Recursive first-block placement. Blocks are built in canonical order, so a
// completed state can be emitted without sorting.
struct NCGen {
    int n;
    const std::function<bool(const NCPartition&)>& cb;
    BlockList blocks;
    bool stopped = false;

    explicit NCGen(int n, const std::function<bool(const NCPartition&)>& cb) : n(n), cb(cb) {}

    void emit() {
        if (!cb(NCPartition{n, blocks})) stopped = true;
    }

    void window(int l, int r, const std::function<void()>& cont) {
        if (stopped) return;
        if (l > r) {
            cont();
            return;
        }
        blocks.push_back({l});
        size_t idx = blocks.size() - 1;
        first_block(idx, r, cont);
        blocks.pop_back();
    }

    void first_block(size_t idx, int r, const std::function<void()>& cont) {
        if (stopped) return;
        fill_regions(idx, 0, r, cont);
        int last = blocks[idx].back();
        for (int e = last + 1; e <= r && !stopped; ++e) {
            blocks[idx].push_back(e);
            first_block(idx, r, cont);
            blocks[idx].pop_back();
        }
    }

    void fill_regions(size_t idx, size_t gap, int r, const std::function<void()>& cont) {
        if (stopped) return;
        if (gap + 1 < blocks[idx].size()) {
            int gl = blocks[idx][gap] + 1;
            int gr = blocks[idx][gap + 1] - 1;
            window(gl, gr, [this, idx, gap, r, &cont] { fill_regions(idx, gap + 1, r, cont); });
        } else {
            int tl = blocks[idx].back() + 1;
            window(tl, r, cont);
        }
    }
};

}  // namespace

void enumerate_nc(int n, const std::function<bool(const NCPartition&)>& cb, int n_max) {
    check_limit(n, n_max);
    NCGen gen(n, cb);
    gen.window(1, n, [&gen] { gen.emit(); });
}

std::vector<NCPartition> enumerate_nc(int n, int n_max) {
    std::vector<NCPartition> out;
    enumerate_nc(
        n,
        [&out](const NCPartition& p) {
            out.push_back(p);
            return true;
        },
        n_max);
    return out;
}

// --- connected NCL structures ------------------------------------------------

namespace {

// Connected NCL partitions of an interval, seen through their block trees:
// the block of l lists the starts of the child segments tiling [l+1, r].
struct ConnGen {
    BlockList blocks;

    void conn(int l, int r, const std::function<void()>& cont) {
        if (l == r) {
            cont();
            return;
        }
        blocks.push_back({l});
        size_t idx = blocks.size() - 1;
        segments(idx, l + 1, r, cont);
        blocks.pop_back();
    }

    void segments(size_t idx, int s, int r, const std::function<void()>& cont) {
        for (int e = s; e <= r; ++e) {
            blocks[idx].push_back(s);
            conn(s, e, [this, idx, e, r, &cont] {
                if (e == r)
                    cont();
                else
                    segments(idx, e + 1, r, cont);
            });
            blocks[idx].pop_back();
        }
    }
};

}  // namespace

const std::vector<NCLPartition>& connected_ncl(int k, int n_max) {
    check_limit(k, std::max(n_max, kDefaultNMax));
    static std::mutex mu;
    static std::map<int, std::vector<NCLPartition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<NCLPartition> out;
    if (k == 1) {
        out.push_back(NCLPartition{1, {{1}}});
    } else {
        ConnGen gen;
        gen.conn(1, k, [&gen, &out, k] {
            BlockList bl = gen.blocks;
            canonicalize(bl);
            out.push_back(NCLPartition{k, bl});
        });
    }
    return cache.emplace(k, std::move(out)).first->second;
}

std::vector<NCLPartition> class_members(const NCPartition& gamma, int n_max) {
    validate_nc(gamma);
    check_limit(gamma.n, n_max);
    std::vector<const std::vector<NCLPartition>*> opts;
    opts.reserve(gamma.blocks.size());
    for (const auto& b : gamma.blocks) opts.push_back(&connected_ncl(static_cast<int>(b.size()), n_max));
    std::vector<NCLPartition> out;
    std::vector<size_t> odo(gamma.blocks.size(), 0);
    while (true) {
        BlockList bl;
        for (size_t bi = 0; bi < gamma.blocks.size(); ++bi) {
            const auto& structure = (*opts[bi])[odo[bi]];
            for (const auto& sb : structure.blocks) {
                Block mapped;
                mapped.reserve(sb.size());
                for (int e : sb) mapped.push_back(gamma.blocks[bi][e - 1]);
                bl.push_back(std::move(mapped));
            }
        }
        canonicalize(bl);
        out.push_back(NCLPartition{gamma.n, bl});
        size_t pos = odo.size();
        bool rolled_over = true;
        while (pos > 0) {
            --pos;
            if (++odo[pos] < opts[pos]->size()) {
                rolled_over = false;
                break;
            }
            odo[pos] = 0;
        }
        if (rolled_over) break;
    }
    return out;
}

void enumerate_ncl(int n, const std::function<bool(const NCLPartition&)>& cb, int n_max) {
    check_limit(n, n_max);
    enumerate_nc(
        n,
        [&](const NCPartition& skel) {
            for (const auto& pi : class_members(skel, n_max))
                if (!cb(pi)) return false;
            return true;
        },
        n_max);
}

std::vector<NCLPartition> enumerate_ncl(int n, int n_max) {
    std::vector<NCLPartition> out;
    enumerate_ncl(
        n,
        [&out](const NCLPartition& p) {
            out.push_back(p);
            return true;
        },
        n_max);
    return out;
}

const std::vector<NCPartition>& nc_list(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<NCPartition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, enumerate_nc(n, std::max(n, kDefaultNMax))).first->second;
}

const std::vector<NCLPartition>& ncl_list(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<NCLPartition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, enumerate_ncl(n, std::max(n, kDefaultNMax))).first->second;
}

// --- Kreweras complement -----------------------------------------------------

NCPartition kreweras(const NCPartition& p) {
    validate_nc(p);
    int n = p.n;
    auto arcs = arcs_of(p.blocks);
    // Gap i sits between element i and i+1 (and after n for i = n). Two gaps
    // belong to the same complement block iff the same arcs cover them.
    std::map<std::vector<size_t>, Block> faces;
    for (int i = 1; i <= n; ++i) {
        std::vector<size_t> sig;
        for (size_t a = 0; a < arcs.size(); ++a)
            if (arcs[a].first <= i && i < arcs[a].second) sig.push_back(a);
        faces[sig].push_back(i);
    }
    BlockList bl;
    for (auto& [sig, blk] : faces) bl.push_back(blk);
    canonicalize(bl);
    return NCPartition{n, bl};
}

// --- block access / classification ------------------------------------------

namespace {

const Block* find_block(const BlockList& blocks, int elem, bool prefer_min) {
    const Block* found = nullptr;
    for (const auto& b : blocks) {
        if (!std::binary_search(b.begin(), b.end(), elem)) continue;
        if (prefer_min && b.front() == elem) return &b;
        if (!found) found = &b;
    }
    return found;
}

}  // namespace

const Block& block_of(const NCPartition& p, int elem) {
    if (elem < 1 || elem > p.n) throw DomainError("element out of range");
    const Block* b = find_block(p.blocks, elem, false);
    if (!b) throw DomainError("element not covered");
    return *b;
}

const Block& block_of(const NCLPartition& p, int elem) {
    if (elem < 1 || elem > p.n) throw DomainError("element out of range");
    const Block* b = find_block(p.blocks, elem, true);
    if (!b) throw DomainError("element not covered");
    return *b;
}

std::vector<const Block*> blocks_containing(const NCLPartition& p, int elem) {
    std::vector<const Block*> out;
    for (const auto& b : p.blocks)
        if (std::binary_search(b.begin(), b.end(), elem)) out.push_back(&b);
    return out;
}

namespace {

// A block is interior iff another block covers its minimum weakly: some other
// block D has front(D) <= min(B) <= back(D). On NC(n) this is the usual
// nesting test; on NCL(n) it marks exactly the non-root blocks of each
// component tree.
BlockSplit split_impl(const BlockList& blocks) {
    BlockSplit out;
    for (const auto& b : blocks) {
        bool interior = false;
        for (const auto& d : blocks) {
            if (&d == &b) continue;
            if (d.front() <= b.front() && b.front() <= d.back()) {
                interior = true;
                break;
            }
        }
        (interior ? out.interior : out.exterior).push_back(b);
    }
    return out;
}

}  // namespace

BlockSplit split_blocks(const NCPartition& p) {
    validate_nc(p);
    return split_impl(p.blocks);
}

BlockSplit split_blocks(const NCLPartition& p) {
    validate_ncl(p);
    BlockSplit out = split_impl(p.blocks);
    std::vector<bool> is_min(p.n + 1, false);
    for (const auto& b : p.blocks) is_min[b.front()] = true;
    for (int e = 1; e <= p.n; ++e)
        if (!is_min[e]) out.singles.push_back(e);
    return out;
}

NCPartition connect(const NCLPartition& p) {
    validate_ncl(p);
    std::vector<int> parent(p.n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& b : p.blocks)
        for (size_t i = 1; i < b.size(); ++i) parent[find(b[i])] = find(b[0]);
    std::map<int, Block> comps;
    for (int e = 1; e <= p.n; ++e) comps[find(e)].push_back(e);
    BlockList bl;
    for (auto& [root, blk] : comps) bl.push_back(blk);
    canonicalize(bl);
    return NCPartition{p.n, bl};
}

NCPartition nc_join(const NCPartition& a, const NCPartition& b) {
    if (a.n != b.n) throw DomainError("join: mismatched ground sets");
    std::vector<std::set<int>> blocks;
    for (const auto& blk : a.blocks) blocks.emplace_back(blk.begin(), blk.end());
    for (const auto& blk : b.blocks) blocks.emplace_back(blk.begin(), blk.end());
    auto overlap = [](const std::set<int>& x, const std::set<int>& y) {
        for (int e : x)
            if (y.count(e)) return true;
        return false;
    };
    auto cross = [](const std::set<int>& x, const std::set<int>& y) {
        // interleaving test on disjoint sets
        for (int i : x) {
            auto k = y.upper_bound(i);
            if (k == y.end()) continue;
            auto pp = x.upper_bound(*k);
            if (pp == x.end()) continue;
            auto q = y.upper_bound(*pp);
            if (q != y.end()) return true;
        }
        return false;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < blocks.size() && !changed; ++i)
            for (size_t j = i + 1; j < blocks.size() && !changed; ++j) {
                if (overlap(blocks[i], blocks[j]) || cross(blocks[i], blocks[j]) ||
                    cross(blocks[j], blocks[i])) {
                    blocks[i].insert(blocks[j].begin(), blocks[j].end());
                    blocks.erase(blocks.begin() + j);
                    changed = true;
                }
            }
    }
    BlockList bl;
    for (const auto& s : blocks) bl.emplace_back(s.begin(), s.end());
    canonicalize(bl);
    return NCPartition{a.n, bl};
}

namespace {

BlockList shift_blocks(const BlockList& blocks, int offset) {
    BlockList out = blocks;
    for (auto& b : out)
        for (int& e : b) e += offset;
    return out;
}

}  // namespace

NCPartition juxtapose(const NCPartition& a, const NCPartition& b) {
    BlockList bl = a.blocks;
    for (auto& blk : shift_blocks(b.blocks, a.n)) bl.push_back(blk);
    return NCPartition{a.n + b.n, bl};
}

NCLPartition juxtapose(const NCLPartition& a, const NCLPartition& b) {
    BlockList bl = a.blocks;
    for (auto& blk : shift_blocks(b.blocks, a.n)) bl.push_back(blk);
    return NCLPartition{a.n + b.n, bl};
}

NCPartition double_hat(const NCPartition& p) {
    validate_nc(p);
    BlockList bl;
    for (const auto& b : p.blocks) {
        Block d;
        d.reserve(2 * b.size());
        for (int e : b) {
            d.push_back(2 * e - 1);
            d.push_back(2 * e);
        }
        bl.push_back(d);
    }
    canonicalize(bl);
    return NCPartition{2 * p.n, bl};
}

ParitySplit parity_split(const NCLPartition& p) {
    validate_ncl(p);
    if (p.n % 2 != 0) throw DomainError("not parity-separated: odd ground-set size");
    ParitySplit out;
    BlockList minus, plus;
    for (const auto& b : p.blocks) {
        bool odd = b.front() % 2 == 1;
        for (int e : b)
            if ((e % 2 == 1) != odd) throw DomainError("not parity-separated: block mixes parities");
        Block rel;
        rel.reserve(b.size());
        for (int e : b) rel.push_back((e + 1) / 2);
        (odd ? minus : plus).push_back(rel);
    }
    canonicalize(minus);
    canonicalize(plus);
    out.minus = NCLPartition{p.n / 2, minus};
    out.plus = NCLPartition{p.n / 2, plus};
    out.in_ncs = true;
    bool linked = false;
    std::vector<int> cnt(p.n + 1, 0);
    for (const auto& b : p.blocks)
        for (int e : b)
            if (++cnt[e] > 1) linked = true;
    if (!linked) {
        NCPartition m{out.minus.n, out.minus.blocks};
        NCPartition pl{out.plus.n, out.plus.blocks};
        out.in_nc0 = (kreweras(m) == pl);
    }
    return out;
}

bool join_condition(const NCPartition& sigma, const NCPartition& target) {
    if (sigma.n != 2 * target.n) throw DomainError("join_condition: sigma must live on 2n points");
    return nc_join(sigma, double_hat(nc_discrete(target.n))) == double_hat(target);
}

bool ncl_dominates(const NCLPartition& pi, const NCLPartition& sigma) {
    if (pi.n != sigma.n) throw DomainError("mismatched ground sets");
    for (const auto& b : pi.blocks) {
        std::set<int> want(b.begin(), b.end());
        std::set<int> got;
        for (const auto& d : sigma.blocks)
            if (std::includes(want.begin(), want.end(), d.begin(), d.end()))
                got.insert(d.begin(), d.end());
        if (got != want) return false;
    }
    return true;
}

}  // namespace cfree
