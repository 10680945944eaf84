#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eewt/galois.hpp"

namespace eewt {

// Sorted duplicate-free set of 0-based coordinate indices.
class IndexSet {
public:
    IndexSet() = default;
    // Accepts indices in any order; rejects negatives and duplicates.
    explicit IndexSet(std::vector<int> indices);

    static IndexSet full(int n);

    int size() const { return static_cast<int>(idx_.size()); }
    bool empty() const { return idx_.empty(); }
    int operator[](int i) const { return idx_[static_cast<size_t>(i)]; }
    bool contains(int v) const;
    bool is_subset_of(const IndexSet& other) const;
    IndexSet complement(int n) const;
    const std::vector<int>& indices() const { return idx_; }

    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }
    bool operator==(const IndexSet&) const = default;

    std::string to_string() const;  // {0,2,5}

private:
    std::vector<int> idx_;
};

// Dense row-major matrix over one field. Immutable by convention: operations
// return new values.
class Matrix {
public:
    Matrix(FieldPtr field, int rows, int cols);  // zero-filled
    static Matrix identity(FieldPtr field, int n);
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Symbol>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }

    Symbol at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    Symbol& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    std::span<const Symbol> row(int r) const {
        return {a_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
    }

    Matrix select_columns(const IndexSet& j) const;
    Matrix transpose() const;
    Matrix vstack(const Matrix& below) const;

    bool operator==(const Matrix& other) const {
        return *field_ == *other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
               a_ == other.a_;
    }

private:
    FieldPtr field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Symbol> a_;
};

struct RrefResult {
    Matrix matrix;
    IndexSet pivots;
};

// Reduced row echelon form, first-nonzero pivot selection.
RrefResult rref(const Matrix& m);
int rank(const Matrix& m);

struct LinearSolution {
    std::vector<Symbol> particular;              // length = a.rows()
    std::vector<std::vector<Symbol>> kernel;     // basis of {v : v*a = 0}
};

// Full solution set of x*a = b with x a row vector: particular + span(kernel).
// nullopt when b is outside the row space of a.
std::optional<LinearSolution> solve_all(const Matrix& a, std::span<const Symbol> b);

// Row vector times matrix; x has a.rows() entries, result has a.cols().
std::vector<Symbol> vec_mat_mul(std::span<const Symbol> x, const Matrix& a);
std::vector<Symbol> vec_add(const Field& f, std::span<const Symbol> a, std::span<const Symbol> b);
bool is_zero_vec(std::span<const Symbol> v);

// One row per line, fixed-width hex per element, no separators.
std::string matrix_to_hex(const Matrix& m);
Matrix matrix_from_hex(FieldPtr field, const std::vector<std::string>& row_lines);

}  // namespace eewt
