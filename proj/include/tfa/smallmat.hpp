#ifndef TFA_SMALLMAT_HPP
#define TFA_SMALLMAT_HPP

#include <complex>
#include <vector>

namespace tfa {

using cplx = std::complex<double>;

/// Dense row-major matrix, sized for the N <= 8 systems of this library.
template <class T>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, T{}) {}

    int size() const { return n_; }
    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const T& operator()(int i, int j) const {
        return a_[static_cast<size_t>(i) * n_ + j];
    }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const T aik = (*this)(i, k);
                if (aik == T{}) continue;
                for (int j = 0; j < n_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        std::vector<T> r(n_, T{});
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    T trace() const {
        T t{};
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    int n_ = 0;
    std::vector<T> a_;
};

using Mat = Matrix<double>;
using CMat = Matrix<cplx>;

inline CMat to_complex(const Mat& m) {
    CMat c(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) c(i, j) = m(i, j);
    return c;
}

} // namespace tfa

#endif
