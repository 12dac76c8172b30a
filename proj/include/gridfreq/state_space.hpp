#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "gridfreq/errors.hpp"
#include "gridfreq/sim_trace.hpp"
#include "gridfreq/transfer_function.hpp"

namespace gridfreq {

/// Linear time-invariant system x' = Ax + Bu, y = Cx + Du.
/// dt == 0 marks a continuous-time system; dt > 0 a sampled one.
class StateSpace {
public:
    StateSpace(Eigen::MatrixXd A, Eigen::MatrixXd B, Eigen::MatrixXd C, Eigen::MatrixXd D,
               double dt = 0.0)
        : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)), D_(std::move(D)), dt_(dt) {
        const auto n = A_.rows();
        if (A_.cols() != n || B_.rows() != n || C_.cols() != n || D_.rows() != C_.rows() ||
            D_.cols() != B_.cols())
            throw ValidationError("StateSpace: inconsistent matrix dimensions");
    }

    const Eigen::MatrixXd& A() const { return A_; }
    const Eigen::MatrixXd& B() const { return B_; }
    const Eigen::MatrixXd& C() const { return C_; }
    const Eigen::MatrixXd& D() const { return D_; }

    Eigen::Index n_states() const { return A_.rows(); }
    Eigen::Index n_inputs() const { return B_.cols(); }
    Eigen::Index n_outputs() const { return C_.rows(); }

    bool is_discrete() const { return dt_ > 0.0; }
    double dt() const { return dt_; }

private:
    Eigen::MatrixXd A_, B_, C_, D_;
    double dt_;
};

/// Controllable-canonical realization. Biproper inputs get their feedthrough
/// split off by polynomial division first.
inline StateSpace tf_to_ss(const RationalTF& g) {
    if (!g.is_proper())
        throw ImproperSystem("tf_to_ss: numerator degree exceeds denominator degree");
    const int n = g.den().degree();
    // RationalTF keeps a monic denominator, so the quotient is the leading
    // numerator coefficient when degrees match.
    double q = 0.0;
    Polynomial rem = g.num();
    if (!g.is_zero() && g.num().degree() == n) {
        q = g.num().coeffs()[n];
        rem = g.num() - q * g.den();
    }
    if (n == 0)
        return StateSpace(Eigen::MatrixXd(0, 0), Eigen::MatrixXd(0, 1), Eigen::MatrixXd(1, 0),
                          Eigen::MatrixXd::Constant(1, 1, g.is_zero() ? 0.0 : q));
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) A(i, i + 1) = 1.0;
    for (int i = 0; i < n; ++i) A(n - 1, i) = -g.den().coeffs()[i];
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, 1);
    B(n - 1, 0) = 1.0;
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(1, n);
    for (int i = 0; i < static_cast<int>(rem.coeffs().size()) && i < n; ++i)
        C(0, i) = rem.coeffs()[i];
    return StateSpace(std::move(A), std::move(B), std::move(C),
                      Eigen::MatrixXd::Constant(1, 1, q));
}

/// Per-entry realization aggregated block-diagonally with shared input wiring.
inline StateSpace to_state_space(const MimoTF& m) {
    const auto p = m.n_outputs();
    const auto q = m.n_inputs();
    std::vector<std::vector<StateSpace>> blocks;
    Eigen::Index n_total = 0;
    blocks.reserve(p);
    for (std::size_t i = 0; i < p; ++i) {
        std::vector<StateSpace> row;
        row.reserve(q);
        for (std::size_t j = 0; j < q; ++j) {
            row.push_back(tf_to_ss(m.at(i, j)));
            n_total += row.back().n_states();
        }
        blocks.push_back(std::move(row));
    }
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n_total, n_total);
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n_total, static_cast<Eigen::Index>(q));
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p), n_total);
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p),
                                              static_cast<Eigen::Index>(q));
    Eigen::Index at = 0;
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            const StateSpace& blk = blocks[i][j];
            const Eigen::Index n = blk.n_states();
            if (n > 0) {
                A.block(at, at, n, n) = blk.A();
                B.block(at, static_cast<Eigen::Index>(j), n, 1) = blk.B();
                C.block(static_cast<Eigen::Index>(i), at, 1, n) = blk.C();
            }
            D(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = blk.D()(0, 0);
            at += n;
        }
    }
    return StateSpace(std::move(A), std::move(B), std::move(C), std::move(D));
}

/// Exact zero-order-hold discretization via the matrix exponential of the
/// augmented [A B; 0 0] block.
inline StateSpace discretize_zoh(const StateSpace& ss, double dt) {
    if (dt <= 0.0) throw ValidationError("discretize_zoh: dt must be positive");
    const Eigen::Index n = ss.n_states();
    const Eigen::Index m = ss.n_inputs();
    if (n == 0)
        return StateSpace(Eigen::MatrixXd(0, 0), Eigen::MatrixXd(0, m), ss.C(), ss.D(), dt);
    Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(n + m, n + m);
    aug.topLeftCorner(n, n) = ss.A() * dt;
    aug.topRightCorner(n, m) = ss.B() * dt;
    const Eigen::MatrixXd phi = aug.exp();
    return StateSpace(phi.topLeftCorner(n, n), phi.topRightCorner(n, m), ss.C(), ss.D(), dt);
}

/// Steps a discrete system from zero initial state. U is m x N, result p x N.
inline Eigen::MatrixXd simulate_discrete(const StateSpace& dss, const Eigen::MatrixXd& U) {
    if (!dss.is_discrete()) throw ValidationError("simulate_discrete: system is not discrete");
    if (U.cols() == 0) throw EmptyTrace("simulate_discrete: empty input");
    if (U.rows() != dss.n_inputs())
        throw ValidationError("simulate_discrete: input row count does not match system inputs");
    const Eigen::Index N = U.cols();
    Eigen::MatrixXd Y(dss.n_outputs(), N);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(dss.n_states());
    for (Eigen::Index k = 0; k < N; ++k) {
        Y.col(k) = dss.C() * x + dss.D() * U.col(k);
        x = dss.A() * x + dss.B() * U.col(k);
    }
    return Y;
}

/// Sampled response of a continuous system under zero-order hold.
inline Eigen::MatrixXd lsim(const StateSpace& ss, const Eigen::MatrixXd& U, double dt) {
    return simulate_discrete(discretize_zoh(ss, dt), U);
}

inline std::vector<double> lsim(const RationalTF& g, const std::vector<double>& u, double dt) {
    if (!g.is_proper()) throw ImproperSystem("lsim: transfer function is improper");
    if (u.empty()) throw EmptyTrace("lsim: empty input");
    Eigen::MatrixXd U(1, static_cast<Eigen::Index>(u.size()));
    for (std::size_t k = 0; k < u.size(); ++k) U(0, static_cast<Eigen::Index>(k)) = u[k];
    const Eigen::MatrixXd Y = lsim(tf_to_ss(g), U, dt);
    return std::vector<double>(Y.data(), Y.data() + Y.cols());
}

/// Simulates a MIMO transfer matrix against named input channels; outputs are
/// named by the model's output labels.
inline SimTrace lsim(const MimoTF& m, const SimTrace& u) {
    if (u.t.empty()) throw EmptyTrace("lsim: empty input trace");
    for (std::size_t i = 0; i < m.n_outputs(); ++i)
        for (std::size_t j = 0; j < m.n_inputs(); ++j)
            if (!m.at(i, j).is_proper())
                throw ImproperSystem("lsim: MIMO entry (" + m.output_names()[i] + ", " +
                                     m.input_names()[j] + ") is improper");
    const Eigen::Index N = static_cast<Eigen::Index>(u.t.size());
    Eigen::MatrixXd U(static_cast<Eigen::Index>(m.n_inputs()), N);
    for (std::size_t j = 0; j < m.n_inputs(); ++j) {
        const std::vector<double>& ch = u.channel(m.input_names()[j]);
        for (Eigen::Index k = 0; k < N; ++k) U(static_cast<Eigen::Index>(j), k) = ch[k];
    }
    const Eigen::MatrixXd Y = lsim(to_state_space(m), U, u.dt());
    SimTrace out;
    out.t = u.t;
    for (std::size_t i = 0; i < m.n_outputs(); ++i) {
        std::vector<double> y(static_cast<std::size_t>(N));
        for (Eigen::Index k = 0; k < N; ++k) y[static_cast<std::size_t>(k)] = Y(static_cast<Eigen::Index>(i), k);
        out.add_channel(m.output_names()[i], std::move(y));
    }
    return out;
}

inline std::vector<std::complex<double>> eigenvalues(const StateSpace& ss) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(ss.A(), /*computeEigenvectors=*/false);
    const auto& ev = solver.eigenvalues();
    return std::vector<std::complex<double>>(ev.data(), ev.data() + ev.size());
}

/// Exact steady-state output for constant input: D*u - C*A^{-1}*B*u.
/// Requires a nonsingular A (no integrating modes reachable from u).
inline Eigen::VectorXd steady_state_output(const StateSpace& ss, const Eigen::VectorXd& u) {
    if (ss.n_states() == 0) return ss.D() * u;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(ss.A());
    if (!lu.isInvertible())
        throw ValidationError("steady_state_output: A is singular, steady state undefined");
    return ss.D() * u - ss.C() * lu.solve(ss.B() * u);
}

}  // namespace gridfreq
