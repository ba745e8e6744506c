#pragma once

#include "cfree/matrix.hpp"
#include "cfree/partitions.hpp"
#include "cfree/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cfree {

/// Raised when a t-coefficient conversion meets phi(X) = 0 (X outside A°).
struct NotInvertibleError : DomainError {
    NotInvertibleError() : DomainError("variable not invertible (phi(X)=0)") {}
};

/// Sequences indexed by order: moments[i] = phi(X^{i+1}), kappa[i] = kappa_{i+1},
/// while t-coefficient sequences are 0-based: t[i] = t_i.
using ScalarSequence = std::vector<CScalar>;
using MatrixSequence = std::vector<CMatrix>;

using Word = std::vector<std::string>;

/// Values of a multilinear functional on words over a finite alphabet.
using MultiIndexedScalars = std::map<Word, CScalar>;
using MultiIndexedMatrices = std::map<Word, CMatrix>;

/// Callbacks evaluating a block of element positions (1-based).
using ScalarBlockValue = std::function<CScalar(const Block&)>;
using MatrixBlockValue = std::function<CMatrix(const Block&)>;

// --- partition-indexed weights ------------------------------------------------

/// kappa_pi: product over blocks of kappa_{|B|} on the block entries.
CScalar kappa_weight(const NCPartition& pi, const ScalarBlockValue& kappa);

/// K_pi: ordered product over Ext(pi) of ckappa_{|B|} (by first element),
/// scaled by the interior kappa scalars.
CMatrix K_weight(const NCPartition& pi, const MatrixBlockValue& ckappa, const ScalarBlockValue& kappa);

/// t_pi: product over blocks of t_{|B|-1} times t_0 factors over s(pi).
CScalar t_weight(const NCLPartition& pi, const ScalarBlockValue& t,
                 const std::function<CScalar(int)>& t0);

/// ct_pi: ordered product over Ext(pi) of ct_{|B|-1}, scaled by interior t and
/// s(pi) factors (scalars commute; matrix factors keep block order).
CMatrix ct_weight(const NCLPartition& pi, const MatrixBlockValue& ct, const ScalarBlockValue& t,
                  const std::function<CScalar(int)>& t0);

// --- single-variable conversions ----------------------------------------------

struct MomentPair {
    ScalarSequence phi;  // phi(X^n), n = 1..N
    MatrixSequence Phi;  // Phi(X^n)
};

struct CumulantPair {
    ScalarSequence kappa;   // kappa_n, n = 1..N
    MatrixSequence ckappa;  // ckappa_n
};

MomentPair moments_from_cumulants(const ScalarSequence& kappa, const MatrixSequence& ckappa);
CumulantPair cumulants_from_moments(const ScalarSequence& phi, const MatrixSequence& Phi);

/// t_0..t_{N-1} from phi(X^1..X^N); throws NotInvertibleError when phi(X) = 0.
ScalarSequence t_from_moments(const ScalarSequence& phi);
MatrixSequence ct_from_moments(const MatrixSequence& Phi, const ScalarSequence& phi);
ScalarSequence moments_from_t(const ScalarSequence& t);
MatrixSequence moments_from_ct(const MatrixSequence& ct, const ScalarSequence& t);

/// Free cumulants of a product of c-free variables via the Kreweras sum.
ScalarSequence product_free_cumulants(const ScalarSequence& kX, const ScalarSequence& kY);

/// c-free cumulants of the product: ckappa_{|gamma[1]|}(X) ckappa_{|Kr(gamma)[n]|}(Y)
/// times the remaining kappa factors of both variables.
MatrixSequence product_cfree_cumulants(const ScalarSequence& kX, const MatrixSequence& ckX,
                                       const ScalarSequence& kY, const MatrixSequence& ckY);

// --- multilinear (word-indexed) layer ------------------------------------------

using WordScalarFn = std::function<CScalar(const Word&)>;
using WordMatrixFn = std::function<CMatrix(const Word&)>;

std::vector<Word> all_words(const std::vector<std::string>& alphabet, int max_len);

/// Multilinear free cumulants of every word of length <= max_len.
MultiIndexedScalars multilinear_kappa(const WordScalarFn& phi, const std::vector<std::string>& alphabet,
                                      int max_len);
MultiIndexedMatrices multilinear_ckappa(const WordMatrixFn& Phi, const WordScalarFn& phi,
                                        const std::vector<std::string>& alphabet, int max_len);
/// Multilinear t / ct coefficients; t-key of word w holds t_{|w|-1}(w).
MultiIndexedScalars multilinear_t(const WordScalarFn& phi, const std::vector<std::string>& alphabet,
                                  int max_len);
MultiIndexedMatrices multilinear_ct(const WordMatrixFn& Phi, const WordScalarFn& phi,
                                    const std::vector<std::string>& alphabet, int max_len);

/// Sum of t_pi[w] over the connected class [1_n]; the left side of the
/// cumulant/t-coefficient identity.
CScalar class_t_sum(const Word& w, const MultiIndexedScalars& t);
CMatrix class_ct_sum(const Word& w, const MultiIndexedMatrices& ct, const MultiIndexedScalars& t);

}  // namespace cfree
