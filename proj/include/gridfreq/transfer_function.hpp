#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gridfreq/errors.hpp"
#include "gridfreq/polynomial.hpp"

namespace gridfreq {

/// Absolute distance below which a numerator root and a denominator root are
/// considered a common factor and cancelled. Closed-loop constructions create
/// exact cancellations corrupted by floating point; this recovers them.
inline constexpr double kCancelTol = 1e-8;

/// Ratio of two real polynomials in s. Normalized to a monic denominator;
/// the zero function is 0/1.
class RationalTF {
public:
    RationalTF() : num_(), den_{1.0} {}

    RationalTF(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("RationalTF: denominator is identically zero");
        normalize();
    }

    static RationalTF constant(double k) { return RationalTF(Polynomial{k}, Polynomial{1.0}); }

    static RationalTF zero() { return RationalTF(); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    /// deg num <= deg den (simulable through a state-space realization).
    bool is_proper() const { return is_zero() || num_.degree() <= den_.degree(); }

    bool is_strictly_proper() const { return is_zero() || num_.degree() < den_.degree(); }

    std::complex<double> operator()(std::complex<double> s) const { return num_(s) / den_(s); }

    double operator()(double s) const { return num_(s) / den_(s); }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial{1.0};
            return;
        }
        const double lead = den_.leading();
        num_ = (1.0 / lead) * num_;
        den_ = (1.0 / lead) * den_;
    }

    Polynomial num_;
    Polynomial den_;
};

/// Removes numerator/denominator root pairs closer than tol. Polynomials are
/// only rebuilt from roots when a cancellation actually occurred, so exact
/// coefficient arithmetic is preserved in the common case.
inline RationalTF cancel_common_factors(const RationalTF& g, double tol = kCancelTol) {
    if (g.is_zero() || g.num().degree() == 0 || g.den().degree() == 0) return g;
    std::vector<std::complex<double>> nr = g.num().roots();
    std::vector<std::complex<double>> dr = g.den().roots();
    std::vector<bool> num_cancelled(nr.size(), false);
    std::vector<bool> den_cancelled(dr.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < nr.size(); ++i) {
        std::size_t best = dr.size();
        double best_dist = tol;
        for (std::size_t j = 0; j < dr.size(); ++j) {
            if (den_cancelled[j]) continue;
            const double dist = std::abs(nr[i] - dr[j]);
            if (dist < best_dist) {
                best_dist = dist;
                best = j;
            }
        }
        if (best < dr.size()) {
            num_cancelled[i] = true;
            den_cancelled[best] = true;
            any = true;
        }
    }
    if (!any) return g;
    std::vector<std::complex<double>> nr_left, dr_left;
    for (std::size_t i = 0; i < nr.size(); ++i)
        if (!num_cancelled[i]) nr_left.push_back(nr[i]);
    for (std::size_t j = 0; j < dr.size(); ++j)
        if (!den_cancelled[j]) dr_left.push_back(dr[j]);
    return RationalTF(Polynomial::from_roots(nr_left, g.num().leading()),
                      Polynomial::from_roots(dr_left, g.den().leading()));
}

inline RationalTF tf_add(const RationalTF& a, const RationalTF& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Equal denominators (common after normalization) need no cross product.
    if (a.den().coeffs() == b.den().coeffs())
        return cancel_common_factors(RationalTF(a.num() + b.num(), a.den()));
    return cancel_common_factors(
        RationalTF(a.num() * b.den() + b.num() * a.den(), a.den() * b.den()));
}

inline RationalTF tf_sub(const RationalTF& a, const RationalTF& b) {
    return tf_add(a, RationalTF(-1.0 * b.num(), b.den()));
}

inline RationalTF tf_mul(const RationalTF& a, const RationalTF& b) {
    if (a.is_zero() || b.is_zero()) return RationalTF::zero();
    return cancel_common_factors(RationalTF(a.num() * b.num(), a.den() * b.den()));
}

inline RationalTF tf_mul(double k, const RationalTF& g) {
    return RationalTF(k * g.num(), g.den());
}

inline RationalTF tf_div(const RationalTF& a, const RationalTF& b) {
    if (b.is_zero()) throw DivisionByZero("tf_div: division by the zero transfer function");
    if (a.is_zero()) return RationalTF::zero();
    return cancel_common_factors(RationalTF(a.num() * b.den(), a.den() * b.num()));
}

/// Negative feedback g / (1 + g*h), built directly as
/// num_g*den_h / (den_g*den_h + num_g*num_h) to avoid spurious factors.
inline RationalTF tf_feedback(const RationalTF& g, const RationalTF& h) {
    const Polynomial den = g.den() * h.den() + g.num() * h.num();
    if (den.is_zero()) throw DegenerateLoop("tf_feedback: 1 + g*h is identically zero");
    return cancel_common_factors(RationalTF(g.num() * h.den(), den));
}

/// Poles after tolerance cancellation of common factors.
inline std::vector<std::complex<double>> poles(const RationalTF& g) {
    return cancel_common_factors(g).den().roots();
}

inline std::vector<std::complex<double>> zeros(const RationalTF& g) {
    return cancel_common_factors(g).num().roots();
}

namespace detail {

// Multiplicity of the root at s = 0, judged against the polynomial's scale.
inline int zero_root_multiplicity(const Polynomial& p) {
    const double tol = p.max_abs_coeff() * 1e-12;
    int k = 0;
    while (k < static_cast<int>(p.coeffs().size()) - 1 && std::abs(p.coeffs()[k]) <= tol) ++k;
    return k;
}

}  // namespace detail

/// lim_{s->0} g(s). Common factors of s are cancelled first (L'Hopital); an
/// uncancelled pole at the origin reports +infinity.
inline double dcgain(const RationalTF& g) {
    if (g.is_zero()) return 0.0;
    const int kn = detail::zero_root_multiplicity(g.num());
    const int kd = detail::zero_root_multiplicity(g.den());
    const int k = std::min(kn, kd);
    const double n0 = g.num().coeffs()[k];
    const double d0 = g.den().coeffs()[k];
    const double dtol = g.den().max_abs_coeff() * 1e-12;
    if (std::abs(d0) <= dtol) return std::numeric_limits<double>::infinity();
    const double ntol = g.num().max_abs_coeff() * 1e-12;
    if (std::abs(n0) <= ntol) return 0.0;
    return n0 / d0;
}

/// Rectangular grid of SISO transfer functions, indexed (output, input).
class MimoTF {
public:
    MimoTF(std::vector<std::vector<RationalTF>> entries, std::vector<std::string> input_names,
           std::vector<std::string> output_names)
        : entries_(std::move(entries)),
          input_names_(std::move(input_names)),
          output_names_(std::move(output_names)) {
        if (entries_.size() != output_names_.size())
            throw ValidationError("MimoTF: output label count does not match row count");
        for (const auto& row : entries_)
            if (row.size() != input_names_.size())
                throw ValidationError("MimoTF: grid is not rectangular or input labels mismatch");
    }

    std::size_t n_outputs() const { return entries_.size(); }
    std::size_t n_inputs() const { return input_names_.size(); }

    const RationalTF& at(std::size_t out, std::size_t in) const { return entries_.at(out).at(in); }

    const std::vector<std::string>& input_names() const { return input_names_; }
    const std::vector<std::string>& output_names() const { return output_names_; }

private:
    std::vector<std::vector<RationalTF>> entries_;
    std::vector<std::string> input_names_;
    std::vector<std::string> output_names_;
};

}  // namespace gridfreq
