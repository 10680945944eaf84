#include "eewt/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace eewt {

IndexSet::IndexSet(std::vector<int> indices) : idx_(std::move(indices)) {
    std::sort(idx_.begin(), idx_.end());
    for (size_t i = 0; i < idx_.size(); ++i) {
        if (idx_[i] < 0) throw Error("negative index in index set");
        if (i > 0 && idx_[i] == idx_[i - 1]) throw Error("duplicate index in index set");
    }
}

IndexSet IndexSet::full(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
    return IndexSet(std::move(v));
}

bool IndexSet::contains(int v) const {
    return std::binary_search(idx_.begin(), idx_.end(), v);
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
    return std::includes(other.idx_.begin(), other.idx_.end(), idx_.begin(), idx_.end());
}

IndexSet IndexSet::complement(int n) const {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(n) - idx_.size());
    size_t at = 0;
    for (int i = 0; i < n; ++i) {
        if (at < idx_.size() && idx_[at] == i) {
            ++at;
        } else {
            v.push_back(i);
        }
    }
    return IndexSet(std::move(v));
}

std::string IndexSet::to_string() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < idx_.size(); ++i) {
        if (i) os << ",";
        os << idx_[i];
    }
    os << "}";
    return os.str();
}

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
}

Matrix Matrix::identity(FieldPtr field, int n) {
    Matrix m(std::move(field), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Symbol>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw Error("ragged rows in matrix literal");
        for (int j = 0; j < c; ++j) {
            Symbol v = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (v >= field->size()) throw Error("matrix entry outside field");
            m.at(i, j) = v;
        }
    }
    return m;
}

Matrix Matrix::select_columns(const IndexSet& j) const {
    for (int c : j)
        if (c >= cols_) throw Error("column index out of range");
    Matrix out(field_, rows_, j.size());
    for (int r = 0; r < rows_; ++r)
        for (int t = 0; t < j.size(); ++t) out.at(r, t) = at(r, j[t]);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
    check_same_field(*field_, *below.field_);
    if (cols_ != below.cols_) throw Error("vstack column count mismatch");
    Matrix out(field_, rows_ + below.rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    for (int r = 0; r < below.rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(rows_ + r, c) = below.at(r, c);
    return out;
}

RrefResult rref(const Matrix& m) {
    const Field& f = m.field();
    Matrix a = m;
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < a.cols() && lead < a.rows(); ++col) {
        // First nonzero entry at or below the current lead row.
        int piv = -1;
        for (int r = lead; r < a.rows(); ++r) {
            if (a.at(r, col) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != lead)
            for (int c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(lead, c));
        Symbol scale = f.inv(a.at(lead, col));
        for (int c = 0; c < a.cols(); ++c) a.at(lead, c) = f.mul(a.at(lead, c), scale);
        for (int r = 0; r < a.rows(); ++r) {
            if (r == lead) continue;
            Symbol factor = a.at(r, col);
            if (factor == 0) continue;
            for (int c = 0; c < a.cols(); ++c)
                a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(lead, c)));
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(a), IndexSet(std::move(pivots))};
}

// Forward elimination only, stopping once every row is a pivot. Cheaper
// than rref when only the rank matters.
int rank(const Matrix& m) {
    const Field& f = m.field();
    const int rows = m.rows();
    const int cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<Symbol> a(static_cast<size_t>(rows) * static_cast<size_t>(cols));
    for (int r = 0; r < rows; ++r) {
        auto src = m.row(r);
        std::copy(src.begin(), src.end(), a.begin() + static_cast<size_t>(r) * cols);
    }
    auto at = [&](int r, int c) -> Symbol& {
        return a[static_cast<size_t>(r) * cols + c];
    };
    int rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int piv = -1;
        for (int r = rk; r < rows; ++r) {
            if (at(r, c) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != rk)
            for (int cc = c; cc < cols; ++cc) std::swap(at(piv, cc), at(rk, cc));
        Symbol pinv = f.inv(at(rk, c));
        for (int r = rk + 1; r < rows; ++r) {
            Symbol factor = f.mul(at(r, c), pinv);
            if (factor == 0) continue;
            for (int cc = c; cc < cols; ++cc)
                at(r, cc) = f.sub(at(r, cc), f.mul(factor, at(rk, cc)));
        }
        ++rk;
    }
    return rk;
}

std::optional<LinearSolution> solve_all(const Matrix& a, std::span<const Symbol> b) {
    if (static_cast<int>(b.size()) != a.cols())
        throw LengthMismatch("right-hand side length does not match matrix columns");
    const Field& f = a.field();
    const int r = a.rows();
    const int c = a.cols();

    // x*a = b  <=>  a^T x^T = b^T; eliminate on [a^T | b^T].
    Matrix aug(a.field_ptr(), c, r + 1);
    for (int i = 0; i < c; ++i) {
        for (int j = 0; j < r; ++j) aug.at(i, j) = a.at(j, i);
        aug.at(i, r) = b[static_cast<size_t>(i)];
    }
    RrefResult red = rref(aug);
    if (red.pivots.contains(r)) return std::nullopt;  // pivot in the augmented column

    std::vector<bool> is_pivot(static_cast<size_t>(r), false);
    for (int p : red.pivots) is_pivot[static_cast<size_t>(p)] = true;

    LinearSolution sol;
    sol.particular.assign(static_cast<size_t>(r), 0);
    for (int i = 0; i < red.pivots.size(); ++i)
        sol.particular[static_cast<size_t>(red.pivots[i])] = red.matrix.at(i, r);

    for (int free = 0; free < r; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Symbol> v(static_cast<size_t>(r), 0);
        v[static_cast<size_t>(free)] = 1;
        for (int i = 0; i < red.pivots.size(); ++i)
            v[static_cast<size_t>(red.pivots[i])] = f.neg(red.matrix.at(i, free));
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

std::vector<Symbol> vec_mat_mul(std::span<const Symbol> x, const Matrix& a) {
    if (static_cast<int>(x.size()) != a.rows())
        throw LengthMismatch("row vector length does not match matrix rows");
    const Field& f = a.field();
    std::vector<Symbol> out(static_cast<size_t>(a.cols()), 0);
    for (int r = 0; r < a.rows(); ++r) {
        Symbol xr = x[static_cast<size_t>(r)];
        if (xr == 0) continue;
        for (int c = 0; c < a.cols(); ++c)
            out[static_cast<size_t>(c)] = f.add(out[static_cast<size_t>(c)], f.mul(xr, a.at(r, c)));
    }
    return out;
}

std::vector<Symbol> vec_add(const Field& f, std::span<const Symbol> a, std::span<const Symbol> b) {
    if (a.size() != b.size()) throw LengthMismatch("vector length mismatch");
    std::vector<Symbol> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

bool is_zero_vec(std::span<const Symbol> v) {
    for (Symbol s : v)
        if (s != 0) return false;
    return true;
}

std::string matrix_to_hex(const Matrix& m) {
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        out += symbols_to_hex(m.field(), m.row(r));
        out += '\n';
    }
    return out;
}

Matrix matrix_from_hex(FieldPtr field, const std::vector<std::string>& row_lines) {
    std::vector<std::vector<Symbol>> rows;
    rows.reserve(row_lines.size());
    for (const auto& line : row_lines) rows.push_back(symbols_from_hex(*field, line));
    return Matrix::from_rows(std::move(field), rows);
}

}  // namespace eewt
