#pragma once

#include <optional>

#include "waring/flatten.hpp"

namespace waring {

// ---------------------------------------------------------------------------
// Complete rank computation for binary forms: with r the least order at
// which the apolar kernel is nonzero, the rank is r when the kernel span
// holds a square-free element and d - r + 2 otherwise. The square-free
// decision runs on an integer grid that exceeds the degree of the pencil's
// discriminant, so it is exact and produces a witness.
// ---------------------------------------------------------------------------

enum class BinaryCase {
    SquareFreeKernel,
    MultipleRootForced,
};

template <ExactScalar F>
struct BinaryRankCertificateT {
    int degree = 0;
    int border_rank = 0;  // r: least order with nontrivial apolar kernel
    int rank = 0;         // r or d - r + 2
    BinaryCase dichotomy_case = BinaryCase::SquareFreeKernel;
    /// Present exactly in the square-free case: a square-free dual form of
    /// degree r annihilating the input under contraction.
    std::optional<Poly<F>> kernel_witness;
};

using BinaryRankCertificate = BinaryRankCertificateT<Rational>;

BinaryRankCertificate sylvester_rank(const Poly<Rational>& f);
BinaryRankCertificateT<GaussianRational> sylvester_rank(const Poly<GaussianRational>& f);

/// Restrict f to the plane spanned by two independent directions and return
/// the binary rank of the restriction (0 for an identically zero
/// restriction). By specialization this is a lower bound for the rank of f.
int rank_of_binary_restriction(const Poly<Rational>& f,
                               const LinearForm<Rational>& dir1,
                               const LinearForm<Rational>& dir2);

}  // namespace waring
