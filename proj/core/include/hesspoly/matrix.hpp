#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hesspoly/cyclotomic.hpp"

namespace hesspoly {

/// Dense matrix over a cyclotomic field.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Mat(int rows, int cols, std::vector<Cyclo> entries);

    static Mat identity(int n);
    /// Build from rows given as parse()able strings (see Cyclo::parse).
    static Mat from_strings(int rows, int cols, std::initializer_list<const char*> entries,
                            int conductor);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Cyclo& at(int r, int c) const { return a_[r * cols_ + c]; }
    Cyclo& at(int r, int c) { return a_[r * cols_ + c]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Cyclo& s) const;
    Mat transposed() const;
    /// Entrywise complex conjugation.
    Mat conjugated() const;
    Mat conj_transposed() const { return conjugated().transposed(); }

    /// Exact determinant: cofactor expansion up to 4x4, Gaussian elimination
    /// over the field above.
    Cyclo det() const;
    Cyclo trace() const;
    Mat inverse() const;

    /// Scale so the first nonzero entry in row-major order is 1.  Canonical
    /// representative for projective dedup.
    Mat projective_canonical() const;

    /// Row-reduce in place; returns rank.
    int rref();
    /// Basis of the right null space, one vector per column of the result.
    std::vector<std::vector<Cyclo>> nullspace() const;

    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool operator<(const Mat& o) const;

    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<Cyclo> a_;
};

/// Solve M x = b exactly; empty optional when inconsistent.
std::vector<std::vector<Cyclo>> solve_linear(const Mat& m, const std::vector<Cyclo>& rhs,
                                             bool* consistent);

}  // namespace hesspoly
