#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace kklo {

using Vec = std::vector<double>;

/// Dense row-major matrix of doubles. Everything in this toolkit is desk
/// scale (n <= ~64), so there is no blocking, no views, no expression
/// templates -- just a flat buffer with the handful of operations the
/// observer pipeline needs.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::initializer_list<double> entries);

    static Matrix identity(std::size_t n);
    static Matrix diag(const Vec& d);
    /// Column vector from a Vec.
    static Matrix column(const Vec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    Matrix transpose() const;
    bool is_finite() const;
    /// max_ij |a_ij|
    double max_abs() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(double s);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, double s) { return lhs *= s; }
    friend Matrix operator*(double s, Matrix rhs) { return rhs *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& x);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Small dense-vector helpers shared across modules.
double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
/// max_i |a_i|
double norm_inf(const Vec& a);
bool is_finite(const Vec& a);
/// y += alpha * x
void axpy(double alpha, const Vec& x, Vec& y);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(double s, Vec a);

}  // namespace kklo
