#include "cfree/cumulants.hpp"

#include <algorithm>

namespace cfree {

namespace {

CScalar t0_product(const NCLPartition& pi, const std::function<CScalar(int)>& t0) {
    CScalar prod = CScalar::one();
    std::vector<bool> is_min(pi.n + 1, false);
    for (const auto& b : pi.blocks) is_min[b.front()] = true;
    for (int e = 1; e <= pi.n; ++e)
        if (!is_min[e]) prod *= t0(e);
    return prod;
}

}  // namespace

CScalar kappa_weight(const NCPartition& pi, const ScalarBlockValue& kappa) {
    CScalar w = CScalar::one();
    for (const auto& b : pi.blocks) w *= kappa(b);
    return w;
}

CMatrix K_weight(const NCPartition& pi, const MatrixBlockValue& ckappa, const ScalarBlockValue& kappa) {
    BlockSplit split = split_blocks(pi);
    CScalar scal = CScalar::one();
    for (const auto& d : split.interior) scal *= kappa(d);
    CMatrix m = ckappa(split.exterior.front());
    for (size_t i = 1; i < split.exterior.size(); ++i) m = m * ckappa(split.exterior[i]);
    return scal * m;
}

CScalar t_weight(const NCLPartition& pi, const ScalarBlockValue& t,
                 const std::function<CScalar(int)>& t0) {
    CScalar w = t0_product(pi, t0);
    for (const auto& b : pi.blocks) w *= t(b);
    return w;
}

CMatrix ct_weight(const NCLPartition& pi, const MatrixBlockValue& ct, const ScalarBlockValue& t,
                  const std::function<CScalar(int)>& t0) {
    BlockSplit split = split_blocks(pi);
    CScalar scal = t0_product(pi, t0);
    for (const auto& d : split.interior) scal *= t(d);
    CMatrix m = ct(split.exterior.front());
    for (size_t i = 1; i < split.exterior.size(); ++i) m = m * ct(split.exterior[i]);
    return scal * m;
}

// --- single-variable conversions ----------------------------------------------

namespace {

void check_pair_sizes(size_t a, size_t b) {
    if (a != b) throw DomainError("sequence order mismatch");
}

}  // namespace

MomentPair moments_from_cumulants(const ScalarSequence& kappa, const MatrixSequence& ckappa) {
    check_pair_sizes(kappa.size(), ckappa.size());
    int N = static_cast<int>(kappa.size());
    int dim = N > 0 ? ckappa[0].dim() : 0;
    MomentPair out;
    auto kv = [&kappa](const Block& b) { return kappa[b.size() - 1]; };
    auto cv = [&ckappa](const Block& b) { return ckappa[b.size() - 1]; };
    for (int n = 1; n <= N; ++n) {
        CScalar phi;
        CMatrix Phi = CMatrix::zero(dim);
        for (const auto& g : nc_list(n)) {
            phi += kappa_weight(g, kv);
            Phi += K_weight(g, cv, kv);
        }
        out.phi.push_back(phi);
        out.Phi.push_back(Phi);
    }
    return out;
}

CumulantPair cumulants_from_moments(const ScalarSequence& phi, const MatrixSequence& Phi) {
    check_pair_sizes(phi.size(), Phi.size());
    int N = static_cast<int>(phi.size());
    int dim = N > 0 ? Phi[0].dim() : 0;
    CumulantPair out;
    auto kv = [&out](const Block& b) { return out.kappa[b.size() - 1]; };
    auto cv = [&out](const Block& b) { return out.ckappa[b.size() - 1]; };
    for (int n = 1; n <= N; ++n) {
        CScalar k = phi[n - 1];
        CMatrix ck = Phi[n - 1];
        out.kappa.push_back(CScalar());      // placeholder so kv stays in range
        out.ckappa.push_back(CMatrix::zero(dim));
        for (const auto& g : nc_list(n)) {
            if (static_cast<int>(g.blocks.size()) == 1) continue;  // skip 1_n
            k -= kappa_weight(g, kv);
            ck -= K_weight(g, cv, kv);
        }
        out.kappa.back() = k;
        out.ckappa.back() = ck;
    }
    return out;
}

ScalarSequence t_from_moments(const ScalarSequence& phi) {
    int N = static_cast<int>(phi.size());
    if (N == 0) return {};
    if (phi[0].is_zero()) throw NotInvertibleError();
    ScalarSequence t;
    auto tv = [&t](const Block& b) { return t[b.size() - 1]; };
    auto t0 = [&t](int) { return t[0]; };
    for (int n = 1; n <= N; ++n) {
        CScalar rhs = phi[n - 1];
        t.push_back(CScalar());  // placeholder for t_{n-1}
        for (const auto& pi : ncl_list(n)) {
            if (static_cast<int>(pi.blocks.size()) == 1) continue;  // skip 1_n
            rhs -= t_weight(pi, tv, t0);
        }
        // 1_n contributes t_{n-1} * t_0^{n-1}
        CScalar pivot = CScalar::one();
        for (int i = 1; i < n; ++i) pivot *= t[0];
        t.back() = rhs / pivot;
    }
    return t;
}

MatrixSequence ct_from_moments(const MatrixSequence& Phi, const ScalarSequence& phi) {
    check_pair_sizes(Phi.size(), phi.size());
    int N = static_cast<int>(phi.size());
    if (N == 0) return {};
    ScalarSequence t = t_from_moments(phi);
    int dim = Phi[0].dim();
    MatrixSequence ct;
    auto tv = [&t](const Block& b) { return t[b.size() - 1]; };
    auto t0 = [&t](int) { return t[0]; };
    auto cv = [&ct](const Block& b) { return ct[b.size() - 1]; };
    for (int n = 1; n <= N; ++n) {
        CMatrix rhs = Phi[n - 1];
        ct.push_back(CMatrix::zero(dim));
        for (const auto& pi : ncl_list(n)) {
            if (static_cast<int>(pi.blocks.size()) == 1) continue;
            rhs -= ct_weight(pi, cv, tv, t0);
        }
        CScalar pivot = CScalar::one();
        for (int i = 1; i < n; ++i) pivot *= t[0];
        ct.back() = pivot.inverse() * rhs;
    }
    return ct;
}

ScalarSequence moments_from_t(const ScalarSequence& t) {
    int N = static_cast<int>(t.size());
    ScalarSequence phi;
    auto tv = [&t](const Block& b) { return t[b.size() - 1]; };
    auto t0 = [&t](int) { return t[0]; };
    for (int n = 1; n <= N; ++n) {
        CScalar v;
        for (const auto& pi : ncl_list(n)) v += t_weight(pi, tv, t0);
        phi.push_back(v);
    }
    return phi;
}

MatrixSequence moments_from_ct(const MatrixSequence& ct, const ScalarSequence& t) {
    check_pair_sizes(ct.size(), t.size());
    int N = static_cast<int>(t.size());
    int dim = N > 0 ? ct[0].dim() : 0;
    MatrixSequence Phi;
    auto tv = [&t](const Block& b) { return t[b.size() - 1]; };
    auto t0 = [&t](int) { return t[0]; };
    auto cv = [&ct](const Block& b) { return ct[b.size() - 1]; };
    for (int n = 1; n <= N; ++n) {
        CMatrix v = CMatrix::zero(dim);
        for (const auto& pi : ncl_list(n)) v += ct_weight(pi, cv, tv, t0);
        Phi.push_back(v);
    }
    return Phi;
}

ScalarSequence product_free_cumulants(const ScalarSequence& kX, const ScalarSequence& kY) {
    check_pair_sizes(kX.size(), kY.size());
    int N = static_cast<int>(kX.size());
    ScalarSequence out;
    for (int n = 1; n <= N; ++n) {
        CScalar v;
        for (const auto& g : nc_list(n)) {
            CScalar term = CScalar::one();
            for (const auto& b : g.blocks) term *= kX[b.size() - 1];
            for (const auto& d : kreweras(g).blocks) term *= kY[d.size() - 1];
            v += term;
        }
        out.push_back(v);
    }
    return out;
}

MatrixSequence product_cfree_cumulants(const ScalarSequence& kX, const MatrixSequence& ckX,
                                       const ScalarSequence& kY, const MatrixSequence& ckY) {
    check_pair_sizes(kX.size(), kY.size());
    check_pair_sizes(ckX.size(), ckY.size());
    check_pair_sizes(kX.size(), ckX.size());
    int N = static_cast<int>(kX.size());
    int dim = N > 0 ? ckX[0].dim() : 0;
    MatrixSequence out;
    for (int n = 1; n <= N; ++n) {
        CMatrix v = CMatrix::zero(dim);
        for (const auto& g : nc_list(n)) {
            NCPartition kr = kreweras(g);
            const Block& bx = block_of(g, 1);
            const Block& dy = block_of(kr, n);
            CScalar scal = CScalar::one();
            for (const auto& b : g.blocks)
                if (b != bx) scal *= kX[b.size() - 1];
            for (const auto& d : kr.blocks)
                if (d != dy) scal *= kY[d.size() - 1];
            v += scal * (ckX[bx.size() - 1] * ckY[dy.size() - 1]);
        }
        out.push_back(v);
    }
    return out;
}

// --- multilinear layer ----------------------------------------------------------

std::vector<Word> all_words(const std::vector<std::string>& alphabet, int max_len) {
    std::vector<Word> out;
    std::vector<Word> level{Word{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : level)
            for (const auto& a : alphabet) {
                Word e = w;
                e.push_back(a);
                next.push_back(std::move(e));
            }
        for (const auto& w : next) out.push_back(w);
        level = std::move(next);
    }
    return out;
}

namespace {

Word subword(const Word& w, const Block& positions) {
    Word out;
    out.reserve(positions.size());
    for (int p : positions) out.push_back(w[p - 1]);
    return out;
}

}  // namespace

MultiIndexedScalars multilinear_kappa(const WordScalarFn& phi, const std::vector<std::string>& alphabet,
                                      int max_len) {
    MultiIndexedScalars kappa;
    for (const auto& w : all_words(alphabet, max_len)) {
        int n = static_cast<int>(w.size());
        CScalar v = phi(w);
        auto kv = [&](const Block& b) { return kappa.at(subword(w, b)); };
        for (const auto& g : nc_list(n)) {
            if (static_cast<int>(g.blocks.size()) == 1) continue;
            v -= kappa_weight(g, kv);
        }
        kappa[w] = v;
    }
    return kappa;
}

MultiIndexedMatrices multilinear_ckappa(const WordMatrixFn& Phi, const WordScalarFn& phi,
                                        const std::vector<std::string>& alphabet, int max_len) {
    MultiIndexedScalars kappa = multilinear_kappa(phi, alphabet, max_len);
    MultiIndexedMatrices ck;
    for (const auto& w : all_words(alphabet, max_len)) {
        int n = static_cast<int>(w.size());
        CMatrix v = Phi(w);
        auto kv = [&](const Block& b) { return kappa.at(subword(w, b)); };
        auto cv = [&](const Block& b) { return ck.at(subword(w, b)); };
        for (const auto& g : nc_list(n)) {
            if (static_cast<int>(g.blocks.size()) == 1) continue;
            v -= K_weight(g, cv, kv);
        }
        ck[w] = v;
    }
    return ck;
}

MultiIndexedScalars multilinear_t(const WordScalarFn& phi, const std::vector<std::string>& alphabet,
                                  int max_len) {
    MultiIndexedScalars t;
    for (const auto& a : alphabet)
        if (phi(Word{a}).is_zero()) throw NotInvertibleError();
    for (const auto& w : all_words(alphabet, max_len)) {
        int n = static_cast<int>(w.size());
        CScalar v = phi(w);
        auto tv = [&](const Block& b) { return t.at(subword(w, b)); };
        auto t0 = [&](int p) { return t.at(Word{w[p - 1]}); };
        for (const auto& pi : ncl_list(n)) {
            if (static_cast<int>(pi.blocks.size()) == 1) continue;
            v -= t_weight(pi, tv, t0);
        }
        CScalar pivot = CScalar::one();
        for (int p = 2; p <= n; ++p) pivot *= phi(Word{w[p - 1]});
        t[w] = v / pivot;
    }
    return t;
}

MultiIndexedMatrices multilinear_ct(const WordMatrixFn& Phi, const WordScalarFn& phi,
                                    const std::vector<std::string>& alphabet, int max_len) {
    MultiIndexedScalars t = multilinear_t(phi, alphabet, max_len);
    MultiIndexedMatrices ct;
    for (const auto& w : all_words(alphabet, max_len)) {
        int n = static_cast<int>(w.size());
        CMatrix v = Phi(w);
        auto tv = [&](const Block& b) { return t.at(subword(w, b)); };
        auto t0 = [&](int p) { return t.at(Word{w[p - 1]}); };
        auto cv = [&](const Block& b) { return ct.at(subword(w, b)); };
        for (const auto& pi : ncl_list(n)) {
            if (static_cast<int>(pi.blocks.size()) == 1) continue;
            v -= ct_weight(pi, cv, tv, t0);
        }
        CScalar pivot = CScalar::one();
        for (int p = 2; p <= n; ++p) pivot *= phi(Word{w[p - 1]});
        ct[w] = pivot.inverse() * v;
    }
    return ct;
}

CScalar class_t_sum(const Word& w, const MultiIndexedScalars& t) {
    int n = static_cast<int>(w.size());
    CScalar v;
    auto tv = [&](const Block& b) { return t.at(subword(w, b)); };
    auto t0 = [&](int p) { return t.at(Word{w[p - 1]}); };
    for (const auto& pi : connected_ncl(n)) v += t_weight(pi, tv, t0);
    return v;
}

CMatrix class_ct_sum(const Word& w, const MultiIndexedMatrices& ct, const MultiIndexedScalars& t) {
    int n = static_cast<int>(w.size());
    CMatrix v = CMatrix::zero(ct.begin()->second.dim());
    auto tv = [&](const Block& b) { return t.at(subword(w, b)); };
    auto t0 = [&](int p) { return t.at(Word{w[p - 1]}); };
    auto cv = [&](const Block& b) { return ct.at(subword(w, b)); };
    for (const auto& pi : connected_ncl(n)) v += ct_weight(pi, cv, tv, t0);
    return v;
}

}  // namespace cfree
