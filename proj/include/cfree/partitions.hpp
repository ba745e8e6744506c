#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfree {

/// Raised when an enumeration request exceeds the configured ground-set cap.
struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an input is outside an operation's domain (bad partition,
/// non-parity-separated input, variable not invertible, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kDefaultNMax = 12;

using Block = std::vector<int>;
using BlockList = std::vector<Block>;

/// Non-crossing partition of {1,...,n}. Canonical form: blocks sorted by
/// minimal element, elements ascending; equality is structural.
struct NCPartition {
    int n = 0;
    BlockList blocks;

    friend bool operator==(const NCPartition& a, const NCPartition& b) {
        return a.n == b.n && a.blocks == b.blocks;
    }
    friend bool operator!=(const NCPartition& a, const NCPartition& b) { return !(a == b); }
    friend bool operator<(const NCPartition& a, const NCPartition& b) {
        return a.n != b.n ? a.n < b.n : a.blocks < b.blocks;
    }
};

/// Non-crossing linked partition: blocks may share single elements under the
/// minimality rule. Every NCPartition is a valid NCLPartition.
struct NCLPartition {
    int n = 0;
    BlockList blocks;

    friend bool operator==(const NCLPartition& a, const NCLPartition& b) {
        return a.n == b.n && a.blocks == b.blocks;
    }
    friend bool operator!=(const NCLPartition& a, const NCLPartition& b) { return !(a == b); }
    friend bool operator<(const NCLPartition& a, const NCLPartition& b) {
        return a.n != b.n ? a.n < b.n : a.blocks < b.blocks;
    }
};

/// Exterior/interior classification plus the never-minimal elements s(pi).
struct BlockSplit {
    BlockList exterior;   // ordered by first element
    BlockList interior;   // ordered by first element
    std::vector<int> singles;  // s(pi), ascending; empty for NC input
};

struct ParitySplit {
    NCLPartition minus;  // odd positions, relabelled to 1..n
    NCLPartition plus;   // even positions, relabelled to 1..n
    bool in_ncs = false;
    bool in_nc0 = false;  // meaningful for NC input: plus == kreweras(minus)
};

// --- validation -----------------------------------------------------------

void canonicalize(BlockList& blocks);
bool is_noncrossing(const BlockList& blocks);
/// Throws DomainError unless blocks form a valid NC partition of {1..n}.
void validate_nc(const NCPartition& p);
/// Throws DomainError unless blocks form a valid NCL partition of {1..n}.
void validate_ncl(const NCLPartition& p);

NCPartition nc_full(int n);      // 1_n
NCPartition nc_discrete(int n);  // 0_n
inline NCLPartition as_ncl(const NCPartition& p) { return NCLPartition{p.n, p.blocks}; }

// --- enumeration ----------------------------------------------------------

/// Streams NC(n) in lexicographic order of the canonical block list.
/// The callback may return false to stop early.
void enumerate_nc(int n, const std::function<bool(const NCPartition&)>& cb, int n_max = kDefaultNMax);
std::vector<NCPartition> enumerate_nc(int n, int n_max = kDefaultNMax);

/// Streams NCL(n): NC skeleton in lex order, then per-block connected
/// structures in odometer order. Deterministic; documented in the CLI.
void enumerate_ncl(int n, const std::function<bool(const NCLPartition&)>& cb, int n_max = kDefaultNMax);
std::vector<NCLPartition> enumerate_ncl(int n, int n_max = kDefaultNMax);

/// Connected NCL partitions of {1..k}, i.e. the class [1_k]; |[1_k]| = C_{k-1}.
const std::vector<NCLPartition>& connected_ncl(int k, int n_max = kDefaultNMax);

/// All sigma in NCL(n) with c(sigma) = gamma.
std::vector<NCLPartition> class_members(const NCPartition& gamma, int n_max = kDefaultNMax);

/// Memoized canonical NC(n) list shared by the conversion layers.
const std::vector<NCPartition>& nc_list(int n);
/// Memoized canonical NCL(n) list (n kept small by callers).
const std::vector<NCLPartition>& ncl_list(int n);

// --- structural operations --------------------------------------------------

/// Kreweras complement via the gap/face construction; |p| + |Kr(p)| = n+1.
NCPartition kreweras(const NCPartition& p);

/// Block containing p (for NCL points lying in two blocks, the block where p
/// is minimal).
const Block& block_of(const NCPartition& p, int elem);
const Block& block_of(const NCLPartition& p, int elem);
/// All blocks containing p (one or, for NCL link points, two).
std::vector<const Block*> blocks_containing(const NCLPartition& p, int elem);

BlockSplit split_blocks(const NCPartition& p);
BlockSplit split_blocks(const NCLPartition& p);

/// Transitive closure of "share an element": the partition c(pi) in NC(n).
NCPartition connect(const NCLPartition& p);

/// Join (least upper bound) in the NC(n) lattice under reversed refinement.
NCPartition nc_join(const NCPartition& a, const NCPartition& b);

NCPartition juxtapose(const NCPartition& a, const NCPartition& b);
NCLPartition juxtapose(const NCLPartition& a, const NCLPartition& b);

/// sigma-hat in NC(2n): block (i_1,..,i_s) -> (2i_1-1, 2i_1, ..., 2i_s-1, 2i_s).
NCPartition double_hat(const NCPartition& p);

/// Splits a partition on 2n points into its odd/even halves; throws
/// DomainError ("not parity-separated") if a block mixes parities.
ParitySplit parity_split(const NCLPartition& p);
inline ParitySplit parity_split(const NCPartition& p) { return parity_split(as_ncl(p)); }

/// Lemma identity helper: nc_join(sigma, hat(0_n)) == hat(target).
bool join_condition(const NCPartition& sigma, const NCPartition& target);

/// The NCL order relation: pi >= sigma iff every block of pi is a union of
/// blocks of sigma. Exposed as a predicate only.
bool ncl_dominates(const NCLPartition& pi, const NCLPartition& sigma);

}  // namespace cfree
