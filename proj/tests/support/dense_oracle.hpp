#pragma once

// Brute-force reference built only from explicit 2x2 matrices and Kronecker
// products. Shares no code with the simulator.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qeb/circuit.hpp"

namespace oracle {

using C = std::complex<double>;

struct Matrix {
    std::size_t n = 0;
    std::vector<C> a;  // row-major n x n

    explicit Matrix(std::size_t dim = 0) : n(dim), a(dim * dim) {}
    C& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
    const C& operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }

    static Matrix identity(std::size_t dim) {
        Matrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }
};

inline Matrix m2(C a, C b, C c, C d) {
    Matrix m(2);
    m.a = {a, b, c, d};
    return m;
}

inline Matrix I2() { return m2(1, 0, 0, 1); }
inline Matrix H2() {
    const double r = 1.0 / std::sqrt(2.0);
    return m2(r, r, r, -r);
}
inline Matrix X2() { return m2(0, 1, 1, 0); }
inline Matrix Z2() { return m2(1, 0, 0, -1); }
inline Matrix Ry2(double t) {
    return m2(std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2));
}
inline Matrix Rz2(double t) { return m2(std::polar(1.0, -t / 2), 0, 0, std::polar(1.0, t / 2)); }
inline Matrix P1() { return m2(0, 0, 0, 1); }

inline Matrix kron(const Matrix& x, const Matrix& y) {
    Matrix out(x.n * y.n);
    for (std::size_t i = 0; i < x.n; ++i) {
        for (std::size_t j = 0; j < x.n; ++j) {
            for (std::size_t k = 0; k < y.n; ++k) {
                for (std::size_t l = 0; l < y.n; ++l) {
                    out(i * y.n + k, j * y.n + l) = x(i, j) * y(k, l);
                }
            }
        }
    }
    return out;
}

inline Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix out(x.n);
    for (std::size_t i = 0; i < x.n; ++i) {
        for (std::size_t k = 0; k < x.n; ++k) {
            const C v = x(i, k);
            if (v == C{}) {
                continue;
            }
            for (std::size_t j = 0; j < x.n; ++j) {
                out(i, j) += v * y(k, j);
            }
        }
    }
    return out;
}

inline Matrix operator+(Matrix x, const Matrix& y) {
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        x.a[i] += y.a[i];
    }
    return x;
}

inline Matrix operator-(Matrix x, const Matrix& y) {
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        x.a[i] -= y.a[i];
    }
    return x;
}

// factors[q] acts on qubit q; qubit 0 is the rightmost Kronecker factor.
inline Matrix tensor(const std::vector<Matrix>& factors) {
    Matrix out = factors.back();
    for (std::size_t q = factors.size() - 1; q-- > 0;) {
        out = kron(out, factors[q]);
    }
    return out;
}

inline Matrix on_qubit(const Matrix& u, qeb::Qubit target, std::size_t n) {
    std::vector<Matrix> f(n, I2());
    f[target] = u;
    return tensor(f);
}

// I - Pc + Pc (x) U, with Pc the projector onto all controls being |1>.
inline Matrix controlled(const Matrix& u, const std::vector<qeb::Qubit>& controls, qeb::Qubit target,
                         std::size_t n) {
    std::vector<Matrix> proj(n, I2());
    for (auto c : controls) {
        proj[c] = P1();
    }
    std::vector<Matrix> proj_u = proj;
    proj_u[target] = u;
    const Matrix pc = tensor(proj);
    return Matrix::identity(std::size_t{1} << n) - pc + tensor(proj_u);
}

inline Matrix target_matrix(const qeb::GateOp& op) {
    switch (op.kind) {
        case qeb::GateKind::H: return H2();
        case qeb::GateKind::X:
        case qeb::GateKind::CX:
        case qeb::GateKind::MCX: return X2();
        case qeb::GateKind::Z: return Z2();
        case qeb::GateKind::Ry:
        case qeb::GateKind::MCRy: return Ry2(op.theta);
        case qeb::GateKind::Rz: return Rz2(op.theta);
        case qeb::GateKind::Barrier: break;
    }
    throw std::logic_error("no matrix for barrier");
}

inline Matrix gate_unitary(const qeb::GateOp& op, std::size_t n) {
    if (op.is_barrier()) {
        return Matrix::identity(std::size_t{1} << n);
    }
    if (op.controls.empty()) {
        return on_qubit(target_matrix(op), op.targets.front(), n);
    }
    return controlled(target_matrix(op), op.controls, op.targets.front(), n);
}

template <class Ops>
Matrix unitary(const Ops& ops, std::size_t n) {
    Matrix u = Matrix::identity(std::size_t{1} << n);
    for (const auto& op : ops) {
        u = gate_unitary(op, n) * u;
    }
    return u;
}

inline std::vector<C> apply(const Matrix& u, const std::vector<C>& v) {
    std::vector<C> out(u.n);
    for (std::size_t i = 0; i < u.n; ++i) {
        for (std::size_t j = 0; j < u.n; ++j) {
            out[i] += u(i, j) * v[j];
        }
    }
    return out;
}

inline std::vector<C> basis(std::size_t n, std::size_t index) {
    std::vector<C> v(std::size_t{1} << n);
    v[index] = 1.0;
    return v;
}

inline double max_abs_diff(const Matrix& x, const Matrix& y) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        worst = std::max(worst, std::abs(x.a[i] - y.a[i]));
    }
    return worst;
}

}  // namespace oracle
