#include "hesspoly/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hesspoly {

Mat::Mat(int rows, int cols, std::vector<Cyclo> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (static_cast<int>(a_.size()) != rows * cols)
        throw std::invalid_argument("Mat: entry count mismatch");
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyclo(1);
    return m;
}

Mat Mat::from_strings(int rows, int cols, std::initializer_list<const char*> entries,
                      int conductor) {
    if (static_cast<int>(entries.size()) != rows * cols)
        throw std::invalid_argument("Mat: entry count mismatch");
    std::vector<Cyclo> a;
    a.reserve(entries.size());
    for (const char* e : entries) a.push_back(Cyclo::parse(e).embedded(conductor));
    return Mat(rows, cols, std::move(a));
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: dimension mismatch in product");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Cyclo& v = at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += v * o.at(k, j);
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Mat: dimension mismatch in sum");
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
}

Mat Mat::scaled(const Cyclo& s) const {
    Mat r = *this;
    for (auto& v : r.a_) v = v * s;
    return r;
}

Mat Mat::transposed() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::conjugated() const {
    Mat r = *this;
    for (auto& v : r.a_) v = v.conjugate();
    return r;
}

Cyclo Mat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat: det of non-square matrix");
    int n = rows_;
    if (n == 1) return at(0, 0);
    if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    if (n <= 4) {
        // cofactor expansion along the first row
        Cyclo acc;
        for (int j = 0; j < n; ++j) {
            if (at(0, j).is_zero()) continue;
            Mat minor(n - 1, n - 1);
            for (int r = 1; r < n; ++r) {
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(r - 1, cc++) = at(r, c);
                }
            }
            Cyclo term = at(0, j) * minor.det();
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    }
    // Gaussian elimination with exact field arithmetic.
    Mat m = *this;
    Cyclo d(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Cyclo(0);
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            d = -d;
        }
        d = d * m.at(col, col);
        Cyclo inv = m.at(col, col).inverse();
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            Cyclo f = m.at(r, col) * inv;
            for (int c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return d;
}

Cyclo Mat::trace() const {
    Cyclo t;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat: inverse of non-square matrix");
    int n = rows_;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = Cyclo(1);
    }
    aug.rref();
    // invertible iff the left block reduced to the identity
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool want_one = (i == j);
            if (want_one ? !aug.at(i, j).is_one() : !aug.at(i, j).is_zero())
                throw std::domain_error("Mat: singular matrix");
        }
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

Mat Mat::projective_canonical() const {
    for (const auto& v : a_) {
        if (!v.is_zero()) return scaled(v.inverse());
    }
    return *this;
}

int Mat::rref() {
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (!at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(rank, c));
        Cyclo inv = at(rank, col).inverse();
        for (int c = 0; c < cols_; ++c) at(rank, c) = at(rank, c) * inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || at(r, col).is_zero()) continue;
            Cyclo f = at(r, col);
            for (int c = 0; c < cols_; ++c) at(r, c) -= f * at(rank, c);
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Cyclo>> Mat::nullspace() const {
    Mat m = *this;
    m.rref();
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot(cols_, false);
    for (int r = 0; r < rows_; ++r) {
        int pc = -1;
        for (int c = 0; c < cols_; ++c)
            if (!m.at(r, c).is_zero()) {
                pc = c;
                break;
            }
        if (pc >= 0) {
            pivot_col_of_row.push_back(pc);
            is_pivot[pc] = true;
        }
    }
    std::vector<std::vector<Cyclo>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Cyclo> v(cols_);
        v[free] = Cyclo(1);
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[pivot_col_of_row[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Mat::operator<(const Mat& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] < o.a_[i]) return true;
        if (o.a_[i] < a_[i]) return false;
    }
    return false;
}

std::string Mat::str() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).str();
        }
        out << "]";
        if (i + 1 < rows_) out << "\n";
    }
    return out.str();
}

std::vector<std::vector<Cyclo>> solve_linear(const Mat& m, const std::vector<Cyclo>& rhs,
                                             bool* consistent) {
    Mat aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    aug.rref();
    // Inconsistent iff a pivot lands in the rhs column.
    std::vector<Cyclo> x(m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        int pc = -1;
        for (int c = 0; c <= m.cols(); ++c)
            if (!aug.at(r, c).is_zero()) {
                pc = c;
                break;
            }
        if (pc == m.cols()) {
            *consistent = false;
            return {};
        }
        if (pc >= 0) x[pc] = aug.at(r, m.cols());
    }
    *consistent = true;
    return {x};
}

}  // namespace hesspoly
