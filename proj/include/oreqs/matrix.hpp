#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oreqs/common.hpp"
#include "oreqs/ore_poly.hpp"

namespace oreqs {

/// Dense matrix over K[x; sigma, delta]; carries its ring descriptor.
template <Field K>
class OreMatrix {
public:
    OreMatrix(OreRing<K> ring, int rows, int cols)
        : rows_(rows), cols_(cols), ring_(std::move(ring)),
          e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
        if (rows <= 0 || cols <= 0)
            throw std::invalid_argument("OreMatrix: dimensions must be positive");
    }

    static OreMatrix identity(OreRing<K> ring, int n) {
        OreMatrix m(std::move(ring), n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = OrePoly<K>::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const OreRing<K>& ring() const { return ring_; }

    OrePoly<K>& at(int i, int j) { return e_[idx(i, j)]; }
    const OrePoly<K>& at(int i, int j) const { return e_[idx(i, j)]; }

    bool is_square() const { return rows_ == cols_; }

    bool is_zero_matrix() const {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }

    bool is_identity() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!(i == j ? at(i, j).is_one() : at(i, j).is_zero())) return false;
        return true;
    }

    int max_entry_deg() const {
        int d = kNegInfDeg;
        for (const auto& p : e_)
            if (!p.is_zero() && p.deg() > d) d = p.deg();
        return d;
    }

    void swap_rows(int i, int j) {
        for (int l = 0; l < cols_; ++l) std::swap(at(i, l), at(j, l));
    }
    void swap_cols(int i, int j) {
        for (int l = 0; l < rows_; ++l) std::swap(at(l, i), at(l, j));
    }

    friend bool operator==(const OreMatrix& a, const OreMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ring_ == b.ring_ && a.e_ == b.e_;
    }

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("OreMatrix: index out of range");
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }

    int rows_;
    int cols_;
    OreRing<K> ring_;
    std::vector<OrePoly<K>> e_;
};

template <Field K>
OreMatrix<K> mat_mul(const OreMatrix<K>& a, const OreMatrix<K>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    if (!(a.ring() == b.ring())) throw std::invalid_argument("mat_mul: ring mismatch");
    OreMatrix<K> r(a.ring(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            OrePoly<K> acc;
            for (int l = 0; l < a.cols(); ++l)
                acc = acc + poly_mul(a.ring(), a.at(i, l), b.at(l, j));
            r.at(i, j) = std::move(acc);
        }
    return r;
}

template <Field K>
OreMatrix<K> mat_sub(const OreMatrix<K>& a, const OreMatrix<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("mat_sub: dimension mismatch");
    if (!(a.ring() == b.ring())) throw std::invalid_argument("mat_sub: ring mismatch");
    OreMatrix<K> r(a.ring(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

/// First position where F*F differs from F, if any.
template <Field K>
std::optional<std::pair<int, int>> first_idempotency_defect(const OreMatrix<K>& f) {
    if (!f.is_square()) throw std::invalid_argument("is_idempotent: matrix must be square");
    OreMatrix<K> sq = mat_mul(f, f);
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j)
            if (!(sq.at(i, j) == f.at(i, j))) return std::make_pair(i, j);
    return std::nullopt;
}

template <Field K>
bool is_idempotent(const OreMatrix<K>& f) {
    return !first_idempotency_defect(f).has_value();
}

/// Lower-right block, dropping the first `drop` rows and columns.
template <Field K>
OreMatrix<K> submatrix_drop(const OreMatrix<K>& f, int drop) {
    if (drop < 0 || drop >= f.rows() || drop >= f.cols())
        throw std::invalid_argument("submatrix_drop: bad block size");
    OreMatrix<K> r(f.ring(), f.rows() - drop, f.cols() - drop);
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r.at(i, j) = f.at(i + drop, j + drop);
    return r;
}

/// Block-diagonal embedding diag(I_offset, small) of total size `size`.
template <Field K>
OreMatrix<K> embed(const OreMatrix<K>& small, int size, int offset) {
    if (!small.is_square() || offset < 0 || offset + small.rows() != size)
        throw std::invalid_argument("embed: sizes inconsistent");
    OreMatrix<K> r = OreMatrix<K>::identity(small.ring(), size);
    for (int i = 0; i < small.rows(); ++i)
        for (int j = 0; j < small.cols(); ++j) r.at(offset + i, offset + j) = small.at(i, j);
    return r;
}

/// Elementary matrix I + m E_ij (i != j); inverse is I - m E_ij.
template <Field K>
struct Transvection {
    int i;
    int j;
    OrePoly<K> m;
};

/// Row/column swap P_ij; self-inverse.
struct Permutation {
    int i;
    int j;
};

enum class TraceKind { transvection, permutation, b1_block, final_permutation };

inline const char* trace_kind_name(TraceKind k) {
    switch (k) {
        case TraceKind::transvection: return "transvection";
        case TraceKind::permutation: return "permutation";
        case TraceKind::b1_block: return "b1-block";
        case TraceKind::final_permutation: return "final-permutation";
    }
    return "?";
}

/// One elementary conjugation, with enough data to replay it exactly and a
/// snapshot of F afterwards for step-by-step printing.
template <Field K>
struct TraceStep {
    TraceKind kind;
    int i = -1;
    int j = -1;
    OrePoly<K> m{};
    std::shared_ptr<const std::pair<OreMatrix<K>, OreMatrix<K>>> block{};  // (E, E^-1)
    std::string note;
    std::shared_ptr<const OreMatrix<K>> f_after{};
};

/// Tracks F, U, U^-1 under a sequence of conjugations, keeping
/// F = U F0 U^-1 and U U^-1 = I at every step. Transvections and
/// permutations use fused row/column updates; `paranoid` re-verifies the
/// invariants (and idempotency) after each step via full products.
template <Field K>
class ConjugationState {
public:
    explicit ConjugationState(OreMatrix<K> f, bool paranoid = false, long op_budget = -1)
        : f0_(f),
          f_(std::move(f)),
          u_(OreMatrix<K>::identity(f_.ring(), f_.rows())),
          uinv_(OreMatrix<K>::identity(f_.ring(), f_.rows())),
          paranoid_(paranoid),
          budget_(op_budget) {
        if (!f_.is_square())
            throw std::invalid_argument("ConjugationState: matrix must be square");
    }

    const OreMatrix<K>& f() const { return f_; }
    const OreMatrix<K>& f0() const { return f0_; }
    const OreMatrix<K>& u() const { return u_; }
    const OreMatrix<K>& uinv() const { return uinv_; }
    const std::vector<TraceStep<K>>& trace() const { return trace_; }
    std::vector<TraceStep<K>>&& take_trace() { return std::move(trace_); }

    /// Conjugate by T = I + m E_ij: row_i += m row_j, then col_j -= col_i m.
    void transvect(int i, int j, const OrePoly<K>& m, TraceKind kind, std::string note) {
        if (i == j) throw std::invalid_argument("transvect: needs i != j");
        check_index(i);
        check_index(j);
        spend();
        const OreRing<K>& R = f_.ring();
        if (!m.is_zero()) {
            for (int l = 0; l < f_.cols(); ++l)
                f_.at(i, l) = f_.at(i, l) + poly_mul(R, m, f_.at(j, l));
            for (int l = 0; l < f_.rows(); ++l)
                f_.at(l, j) = f_.at(l, j) - poly_mul(R, f_.at(l, i), m);
            for (int l = 0; l < u_.cols(); ++l)
                u_.at(i, l) = u_.at(i, l) + poly_mul(R, m, u_.at(j, l));
            for (int l = 0; l < uinv_.rows(); ++l)
                uinv_.at(l, j) = uinv_.at(l, j) - poly_mul(R, uinv_.at(l, i), m);
        }
        record({kind, i, j, m, nullptr, std::move(note), nullptr});
    }

    void transvect(const Transvection<K>& t, std::string note) {
        transvect(t.i, t.j, t.m, TraceKind::transvection, std::move(note));
    }

    /// Conjugate by P_ij: swap rows and columns i, j of F; rows of U;
    /// columns of U^-1.
    void permute(int i, int j, TraceKind kind, std::string note) {
        if (i == j) throw std::invalid_argument("permute: needs i != j");
        check_index(i);
        check_index(j);
        spend();
        f_.swap_rows(i, j);
        f_.swap_cols(i, j);
        u_.swap_rows(i, j);
        uinv_.swap_cols(i, j);
        record({kind, i, j, OrePoly<K>{}, nullptr, std::move(note), nullptr});
    }

    /// Conjugate by an explicit invertible block E with given inverse;
    /// E * Einv = I is verified before applying.
    void apply_block(OreMatrix<K> e, OreMatrix<K> einv, std::string note) {
        spend();
        if (!mat_mul(e, einv).is_identity() || !mat_mul(einv, e).is_identity())
            throw InternalError("apply_block: supplied inverse is wrong");
        f_ = mat_mul(mat_mul(e, f_), einv);
        u_ = mat_mul(e, u_);
        uinv_ = mat_mul(uinv_, einv);
        auto blk = std::make_shared<const std::pair<OreMatrix<K>, OreMatrix<K>>>(
            std::move(e), std::move(einv));
        record({TraceKind::b1_block, -1, -1, OrePoly<K>{}, std::move(blk), std::move(note),
                nullptr});
    }

    long ops() const { return ops_; }

private:
    void check_index(int i) const {
        if (i < 0 || i >= f_.rows()) throw std::out_of_range("ConjugationState: bad index");
    }

    void spend() {
        ++ops_;
        if (budget_ >= 0 && ops_ > budget_)
            throw InternalError("conjugation step budget exceeded; this indicates a bug");
    }

    void record(TraceStep<K> step) {
        step.f_after = std::make_shared<const OreMatrix<K>>(f_);
        trace_.push_back(std::move(step));
        if (paranoid_) verify_invariants();
    }

    void verify_invariants() const {
        if (!mat_mul(u_, uinv_).is_identity() || !mat_mul(uinv_, u_).is_identity())
            throw InternalError("ConjugationState: U U^-1 = I violated");
        if (!(mat_mul(mat_mul(u_, f0_), uinv_) == f_))
            throw InternalError("ConjugationState: F = U F0 U^-1 violated");
        if (is_idempotent(f0_) && !is_idempotent(f_))
            throw InternalError("ConjugationState: idempotency not preserved");
    }

    OreMatrix<K> f0_;
    OreMatrix<K> f_;
    OreMatrix<K> u_;
    OreMatrix<K> uinv_;
    std::vector<TraceStep<K>> trace_;
    bool paranoid_;
    long budget_;
    long ops_ = 0;
};

/// Re-applies a recorded trace to `f0`; returns the resulting state.
template <Field K>
ConjugationState<K> replay_trace(const OreMatrix<K>& f0, const std::vector<TraceStep<K>>& trace) {
    ConjugationState<K> st(f0);
    for (const auto& step : trace) {
        switch (step.kind) {
            case TraceKind::transvection:
                st.transvect(step.i, step.j, step.m, step.kind, step.note);
                break;
            case TraceKind::permutation:
            case TraceKind::final_permutation:
                st.permute(step.i, step.j, step.kind, step.note);
                break;
            case TraceKind::b1_block:
                st.apply_block(step.block->first, step.block->second, step.note);
                break;
        }
    }
    return st;
}

}  // namespace oreqs
