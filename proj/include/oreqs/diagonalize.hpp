#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oreqs/matrix.hpp"

namespace oreqs {

/// Outcome of diagonalizing an idempotent F: U F U^-1 = D = diag(0, I_r),
/// the rank r of the row module of F, and its free basis (the last r rows
/// of U), plus the elementary-operation trace that produced it.
template <Field K>
struct DiagResult {
    OreMatrix<K> u;
    OreMatrix<K> uinv;
    OreMatrix<K> d;
    int rank = 0;
    std::vector<std::vector<OrePoly<K>>> basis;
    std::vector<TraceStep<K>> trace;
};

enum class StepAction { shrink_zero_border, make_pivot_nonzero, reduction1, reduction2 };

/// Next move for the trailing block starting at offset k, plus transvection
/// indices when the pivot must first be made nonzero. Pivot selection is
/// deterministic: lowest column index with a nonzero first-row entry, then
/// lowest row index in the first column.
template <Field K>
struct StepPlan {
    StepAction action;
    Transvection<K> op{-1, -1, OrePoly<K>{}};
};

template <Field K>
StepPlan<K> next_action(const OreMatrix<K>& f, int k) {
    int s = f.rows();
    OrePoly<K> minus_one = OrePoly<K>::constant(-K::one());
    if (f.at(k, k).is_zero()) {
        for (int j = k + 1; j < s; ++j)
            if (!f.at(k, j).is_zero())
                return {StepAction::make_pivot_nonzero, {j, k, minus_one}};
        for (int i = k + 1; i < s; ++i)
            if (!f.at(i, k).is_zero())
                return {StepAction::make_pivot_nonzero, {k, i, minus_one}};
        return {StepAction::shrink_zero_border, {}};
    }
    if (f.at(k, k).deg() == 0) return {StepAction::reduction1, {}};
    return {StepAction::reduction2, {}};
}

namespace detail {

template <Field K>
class Diagonalizer {
public:
    Diagonalizer(const OreMatrix<K>& f, bool paranoid)
        : s_(f.rows()), st_(f, paranoid, op_budget(f)) {}

    DiagResult<K> run() {
        for (int k = 0; k < s_;) {
            StepPlan<K> plan = next_action(st_.f(), k);
            switch (plan.action) {
                case StepAction::shrink_zero_border:
                    if (k == s_ - 1 && !st_.f().at(k, k).is_zero())
                        throw InternalError("trailing 1x1 block is not 0 or 1");
                    ++k;
                    break;
                case StepAction::make_pivot_nonzero:
                    st_.transvect(plan.op.i, plan.op.j, plan.op.m, TraceKind::transvection,
                                  "bring a nonzero border entry into the pivot");
                    break;
                case StepAction::reduction1:
                    order_reduction1(k);
                    ++k;
                    break;
                case StepAction::reduction2:
                    order_reduction2(k);
                    ++k;
                    break;
            }
        }
        return finish();
    }

private:
    static long op_budget(const OreMatrix<K>& f) {
        long d = f.max_entry_deg();
        if (d < 0) d = 0;
        return 50L * f.rows() * (1 + d) * (1 + d);
    }

    bool row_has_nonzero(int k) const {
        for (int j = k + 1; j < s_; ++j)
            if (!st_.f().at(k, j).is_zero()) return true;
        return false;
    }

    bool col_has_nonzero(int k) const {
        for (int i = k + 1; i < s_; ++i)
            if (!st_.f().at(i, k).is_zero()) return true;
        return false;
    }

    /// Reduces the first row of the trailing block until position (1,2) is
    /// its only nonzero entry. Uses only permutations and transvections on
    /// indices >= k+1, so the pivot entry (k,k) is never touched.
    void clear_row(int k) {
        const OreRing<K>& R = st_.f().ring();
        for (;;) {
            int jmin = -1;
            for (int j = k + 1; j < s_; ++j) {
                const OrePoly<K>& e = st_.f().at(k, j);
                if (e.is_zero()) continue;
                if (jmin < 0 || e.deg() < st_.f().at(k, jmin).deg()) jmin = j;
            }
            if (jmin < 0) throw InternalError("clear_row: first row has no nonzero entry");
            if (jmin != k + 1)
                st_.permute(k + 1, jmin, TraceKind::permutation,
                            "move lowest-degree row entry next to the pivot");
            bool done = true;
            for (int j = k + 2; j < s_; ++j) {
                if (st_.f().at(k, j).is_zero()) continue;
                auto rs = right_reduce_step(R, st_.f().at(k, j), st_.f().at(k, k + 1));
                st_.transvect(k + 1, j, rs.factor, TraceKind::transvection, "clear row entry");
                if (!st_.f().at(k, j).is_zero()) done = false;
            }
            if (done) return;
        }
    }

    /// Symmetric to clear_row, for the first column of the trailing block.
    void clear_col(int k) {
        const OreRing<K>& R = st_.f().ring();
        for (;;) {
            int imin = -1;
            for (int i = k + 1; i < s_; ++i) {
                const OrePoly<K>& e = st_.f().at(i, k);
                if (e.is_zero()) continue;
                if (imin < 0 || e.deg() < st_.f().at(imin, k).deg()) imin = i;
            }
            if (imin < 0) throw InternalError("clear_col: first column has no nonzero entry");
            if (imin != k + 1)
                st_.permute(k + 1, imin, TraceKind::permutation,
                            "move lowest-degree column entry next to the pivot");
            bool done = true;
            for (int i = k + 2; i < s_; ++i) {
                if (st_.f().at(i, k).is_zero()) continue;
                auto rs = left_reduce_step(R, st_.f().at(i, k), st_.f().at(k + 1, k));
                st_.transvect(i, k + 1, -rs.factor, TraceKind::transvection,
                              "clear column entry");
                if (!st_.f().at(i, k).is_zero()) done = false;
            }
            if (done) return;
        }
    }

    /// Unit-scalar pivot: conjugate by the closed-form block that clears the
    /// first row and column of the trailing block, leaving diag(1, F1) with
    /// F1 idempotent.
    void order_reduction1(int k) {
        const OreMatrix<K>& f = st_.f();
        const OreRing<K>& R = f.ring();
        const OrePoly<K>& piv = f.at(k, k);
        if (piv.is_zero() || piv.deg() != 0)
            throw InternalError("order_reduction1: pivot is not a nonzero scalar");
        K a = piv.constant_value();
        int m = s_ - k;
        bool border_clear = true;
        for (int l = k + 1; l < s_ && border_clear; ++l)
            border_clear = f.at(k, l).is_zero() && f.at(l, k).is_zero();
        if (m == 1 || border_clear) {
            // a zero border forces a = 1 by idempotency, and the elimination
            // block degenerates to the identity
            if (!a.is_one()) throw InternalError("order_reduction1: lone pivot must be 1");
            return;
        }
        K ainv = a.inv();
        OrePoly<K> ainv_c = OrePoly<K>::constant(ainv);
        OreMatrix<K> e(R, m, m), einv(R, m, m);
        e.at(0, 0) = OrePoly<K>::one();
        einv.at(0, 0) = piv;
        for (int j = 1; j < m; ++j) {
            e.at(0, j) = f.at(k, k + j).scaled_left(ainv);
            einv.at(0, j) = -f.at(k, k + j);
        }
        for (int i = 1; i < m; ++i) {
            OrePoly<K> left = poly_mul(R, f.at(k + i, k), ainv_c);  // f_i1 a^-1
            e.at(i, 0) = -left;
            e.at(i, i) = OrePoly<K>::one();
            einv.at(i, 0) = f.at(k + i, k);
            for (int j = 1; j < m; ++j) {
                OrePoly<K> prod = poly_mul(R, left, f.at(k, k + j));
                einv.at(i, j) =
                    (i == j ? OrePoly<K>::one() : OrePoly<K>::zero()) - prod;
            }
        }
        st_.apply_block(embed(e, s_, k), embed(einv, s_, k), "unit pivot elimination");

        const OreMatrix<K>& g = st_.f();
        if (!g.at(k, k).is_one())
            throw InternalError("order_reduction1: pivot did not become 1");
        for (int l = k + 1; l < s_; ++l)
            if (!g.at(k, l).is_zero() || !g.at(l, k).is_zero())
                throw InternalError("order_reduction1: border not cleared");
        if (m > 1 && !is_idempotent(submatrix_drop(g, k + 1)))
            throw InternalError("order_reduction1: trailing block lost idempotency");
    }

    /// Polynomial pivot of degree n >= 1: clear the first row beside the
    /// pivot, then cancel the pivot's leading term against the (2,1) or
    /// (1,2) entry; the pivot degree drops strictly each pass. Ends in the
    /// unit-pivot elimination, or in the zero-pivot endgame where the block
    /// (2,2) entry is forced to 1 and swapped in, or with a zero border.
    void order_reduction2(int k) {
        const OreRing<K>& R = st_.f().ring();
        for (;;) {
            int n = st_.f().at(k, k).deg();
            if (n == 0) {
                order_reduction1(k);
                return;
            }
            if (n == kNegInfDeg) {
                bool row_nz = row_has_nonzero(k), col_nz = col_has_nonzero(k);
                if (!row_nz && !col_nz) return;  // zero border; caller shrinks
                if (row_nz)
                    clear_row(k);
                else
                    clear_col(k);
                if (!st_.f().at(k + 1, k + 1).is_one())
                    throw InternalError(
                        "order_reduction2: entry beside a cleared zero pivot must be 1");
                st_.permute(k, k + 1, TraceKind::permutation, "swap unit into the pivot");
                order_reduction1(k);
                return;
            }
            if (!row_has_nonzero(k))
                throw InternalError(
                    "order_reduction2: polynomial pivot with zero row is impossible for an "
                    "idempotent matrix");
            clear_row(k);
            const OrePoly<K>& f12 = st_.f().at(k, k + 1);
            const OrePoly<K>& f21 = st_.f().at(k + 1, k);
            if (f21.is_zero())
                throw InternalError("order_reduction2: entry (2,1) of the block vanished");
            int p = f21.deg(), q = f12.deg();
            if (p <= n) {
                auto rs = left_reduce_step(R, st_.f().at(k, k), f21);
                st_.transvect(k, k + 1, -rs.factor, TraceKind::transvection,
                              "reduce pivot degree against the column entry");
            } else if (q <= n) {
                auto rs = right_reduce_step(R, st_.f().at(k, k), f12);
                st_.transvect(k + 1, k, rs.factor, TraceKind::transvection,
                              "reduce pivot degree against the row entry");
            } else {
                throw InternalError("order_reduction2: both border degrees exceed the pivot's");
            }
            const OrePoly<K>& np = st_.f().at(k, k);
            if (!np.is_zero() && np.deg() >= n)
                throw InternalError("order_reduction2: pivot degree did not decrease");
        }
    }

    /// Sorts the 0/1 diagonal so zeros come first, by permutation
    /// conjugations.
    void final_permutation() {
        const OreMatrix<K>& f = st_.f();
        int ones = 0;
        for (int i = 0; i < s_; ++i) {
            for (int j = 0; j < s_; ++j) {
                const OrePoly<K>& e = f.at(i, j);
                if (i == j) {
                    if (!e.is_zero() && !e.is_one())
                        throw InternalError("final_permutation: diagonal entry not 0 or 1");
                    if (e.is_one()) ++ones;
                } else if (!e.is_zero()) {
                    throw InternalError("final_permutation: matrix is not diagonal");
                }
            }
        }
        int zeros = s_ - ones;
        for (int t = 0; t < s_; ++t) {
            bool want_one = t >= zeros;
            if (st_.f().at(t, t).is_one() == want_one) continue;
            for (int j = t + 1; j < s_; ++j) {
                if (st_.f().at(j, j).is_one() == want_one) {
                    st_.permute(t, j, TraceKind::final_permutation, "sort diagonal");
                    break;
                }
            }
        }
    }

    DiagResult<K> finish() {
        final_permutation();
        const OreMatrix<K>& d = st_.f();
        int rank = 0;
        for (int i = 0; i < s_; ++i)
            if (d.at(i, i).is_one()) ++rank;
        DiagResult<K> res{st_.u(), st_.uinv(), d, rank, {}, {}};
        for (int i = s_ - rank; i < s_; ++i) {
            std::vector<OrePoly<K>> row;
            row.reserve(static_cast<size_t>(s_));
            for (int j = 0; j < s_; ++j) row.push_back(res.u.at(i, j));
            res.basis.push_back(std::move(row));
        }
        res.trace = st_.take_trace();
        return res;
    }

    int s_;
    ConjugationState<K> st_;
};

}  // namespace detail

/// Conjugates an idempotent matrix to diag(0, I_r) and extracts the free
/// basis of its row module. Throws NotIdempotentError if F*F != F, and
/// InternalError only for conditions that indicate a bug.
template <Field K>
DiagResult<K> diagonalize_idempotent(const OreMatrix<K>& f, bool paranoid = false) {
    if (!f.is_square())
        throw std::invalid_argument("diagonalize_idempotent: matrix must be square");
    if (auto defect = first_idempotency_defect(f))
        throw NotIdempotentError(defect->first, defect->second);

    // Degenerate inputs need no conjugation at all.
    if (f.is_zero_matrix()) {
        OreMatrix<K> id = OreMatrix<K>::identity(f.ring(), f.rows());
        return {id, id, f, 0, {}, {}};
    }
    if (f.is_identity()) {
        OreMatrix<K> id = OreMatrix<K>::identity(f.ring(), f.rows());
        DiagResult<K> res{id, id, f, f.rows(), {}, {}};
        for (int i = 0; i < f.rows(); ++i) {
            std::vector<OrePoly<K>> row;
            for (int j = 0; j < f.cols(); ++j) row.push_back(id.at(i, j));
            res.basis.push_back(std::move(row));
        }
        return res;
    }

    return detail::Diagonalizer<K>(f, paranoid).run();
}

/// row * mat for a row vector of length mat.rows().
template <Field K>
std::vector<OrePoly<K>> row_times(const std::vector<OrePoly<K>>& row, const OreMatrix<K>& mat) {
    if (static_cast<int>(row.size()) != mat.rows())
        throw std::invalid_argument("row_times: dimension mismatch");
    std::vector<OrePoly<K>> out(static_cast<size_t>(mat.cols()));
    for (int j = 0; j < mat.cols(); ++j) {
        OrePoly<K> acc;
        for (int i = 0; i < mat.rows(); ++i)
            acc = acc + poly_mul(mat.ring(), row[static_cast<size_t>(i)], mat.at(i, j));
        out[static_cast<size_t>(j)] = std::move(acc);
    }
    return out;
}

/// Independently re-checks the full contract of a diagonalization result
/// against the original matrix, using explicit matrix products only.
template <Field K>
CheckReport verify_result(const OreMatrix<K>& f, const DiagResult<K>& res) {
    CheckReport rep;
    int s = f.rows();
    int r = res.rank;

    rep.add("U Uinv = I", mat_mul(res.u, res.uinv).is_identity());
    rep.add("Uinv U = I", mat_mul(res.uinv, res.u).is_identity());
    rep.add("D = U F Uinv", mat_mul(mat_mul(res.u, f), res.uinv) == res.d);

    bool shape = r >= 0 && r <= s;
    if (shape) {
        OreMatrix<K> expect(f.ring(), s, s);
        for (int i = s - r; i < s; ++i) expect.at(i, i) = OrePoly<K>::one();
        shape = res.d == expect;
    }
    rep.add("D = diag(0, I_r)", shape);

    bool basis_rows = static_cast<int>(res.basis.size()) == r;
    if (basis_rows) {
        for (int i = 0; i < r && basis_rows; ++i)
            for (int j = 0; j < s && basis_rows; ++j)
                basis_rows = res.basis[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                             res.u.at(s - r + i, j);
    }
    rep.add("basis = last r rows of U", basis_rows);

    bool fixed = true;
    for (const auto& b : res.basis) {
        if (!(row_times(b, f) == b)) {
            fixed = false;
            break;
        }
    }
    rep.add("b F = b for every basis row", fixed);

    bool factors;
    if (r == 0) {
        factors = f.is_zero_matrix();
    } else {
        OreMatrix<K> c(f.ring(), s, r);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < r; ++j) c.at(i, j) = res.uinv.at(i, s - r + j);
        OreMatrix<K> b(f.ring(), r, s);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < s; ++j) b.at(i, j) = res.basis[static_cast<size_t>(i)][static_cast<size_t>(j)];
        factors = mat_mul(c, b) == f;
    }
    rep.add("F = C B with C = last r columns of Uinv", factors);

    return rep;
}

}  // namespace oreqs
