#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace gridfreq {

/// Real-coefficient polynomial in the Laplace variable, coefficients stored in
/// ascending powers of s. The zero polynomial is represented as {0}.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}

    Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

    explicit Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(double c) { return Polynomial{c}; }

    /// The monomial s.
    static Polynomial s() { return Polynomial{0.0, 1.0}; }

    /// Builds lead * prod(s - r_i). Roots must come in conjugate pairs; the
    /// small imaginary residue left by floating point is discarded.
    static Polynomial from_roots(const std::vector<std::complex<double>>& roots, double lead = 1.0) {
        std::vector<std::complex<double>> c{1.0};
        for (const auto& r : roots) {
            std::vector<std::complex<double>> next(c.size() + 1, 0.0);
            for (std::size_t i = 0; i < c.size(); ++i) {
                next[i + 1] += c[i];
                next[i] -= r * c[i];
            }
            c = std::move(next);
        }
        std::vector<double> real_coeffs(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) real_coeffs[i] = lead * c[i].real();
        return Polynomial(std::move(real_coeffs));
    }

    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Degree; 0 for constants including the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

    double leading() const { return coeffs_.back(); }

    double max_abs_coeff() const {
        double m = 0.0;
        for (double c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    double operator()(double x) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    std::complex<double> operator()(std::complex<double> x) const {
        std::complex<double> acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(double k, const Polynomial& p) {
        std::vector<double> c = p.coeffs_;
        for (double& v : c) v *= k;
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& p, double k) { return k * p; }

    friend Polynomial operator-(const Polynomial& p) { return -1.0 * p; }

    /// Roots via companion-matrix eigenvalues. Constants have no roots.
    std::vector<std::complex<double>> roots() const {
        const int n = degree();
        if (n < 1) return {};
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs_[i] / coeffs_[n];
        for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
        Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
        const auto& ev = solver.eigenvalues();
        std::vector<std::complex<double>> out(ev.data(), ev.data() + ev.size());
        // Deterministic order for downstream consumers.
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
        return out;
    }

private:
    // Trailing coefficients below kTrimTol relative to the largest one are noise
    // from floating-point combination and are dropped.
    static constexpr double kTrimTol = 1e-12;

    void trim() {
        if (coeffs_.empty()) {
            coeffs_ = {0.0};
            return;
        }
        const double scale = max_abs_coeff();
        const double tol = scale * kTrimTol;
        while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= tol) coeffs_.pop_back();
        if (coeffs_.size() == 1 && std::abs(coeffs_[0]) <= tol) coeffs_[0] = 0.0;
    }

    std::vector<double> coeffs_;
};

}  // namespace gridfreq
