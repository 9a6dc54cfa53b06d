#pragma once

#include <Eigen/Dense>
#include <complex>

namespace fuzzysphere {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat2c = Eigen::Matrix2cd;

/**
 * @brief A plane-wave momentum: magnitude k, unit direction and the
 *        non-commutative length scale lambda.
 *
 * The dimensionless combination kappa = lambda*k is never stored; it is
 * recomputed on demand so it can never fall out of sync.
 */
class WaveVector {
public:
    /// k >= 0, |direction| > 0 (ignored for k == 0, where dir is canonical z).
    WaveVector(double k, const Vec3& direction, double lambda);

    /// Build from a cartesian momentum vector.
    static WaveVector from_cartesian(const Vec3& kvec, double lambda);

    double k() const { return k_; }
    const Vec3& dir() const { return dir_; }
    double lambda() const { return lambda_; }
    double kappa() const { return lambda_ * k_; }
    Vec3 cartesian() const { return k_ * dir_; }

    /// Same magnitude, opposite direction.
    WaveVector reversed() const { return WaveVector(k_, -dir_, lambda_); }

private:
    double k_;
    Vec3 dir_;
    double lambda_;
};

/**
 * @brief An SU(2) group element in axis-angle form: the pair
 *        (c, s) = (cos kappa, sin kappa * axis), i.e. a unit quaternion.
 *
 * This is the representation of the plane wave exp(i k.x): working with the
 * (c, s) pair avoids precision loss near kappa = 0 and kappa = pi that the
 * bare angle would suffer.
 */
class Su2Element {
public:
    /// Identity element.
    Su2Element() : c_(1.0), s_(Vec3::Zero()) {}

    /// From raw (c, s); renormalized to unit quaternion norm.
    Su2Element(double c, const Vec3& s);

    static Su2Element identity() { return Su2Element(); }
    static Su2Element from_axis_angle(double kappa, const Vec3& axis);

    double c() const { return c_; }
    const Vec3& s() const { return s_; }

    /// Angle in [0, pi].
    double kappa() const;

    /// Rotation axis; canonical z when the element is +/- identity.
    Vec3 axis() const;

    /// True when |s| is numerically zero and the axis is meaningless.
    bool axis_degenerate() const;

    /// Group inverse (quaternion conjugate).
    Su2Element adjoint() const { return Su2Element(c_, -s_, NoRenorm{}); }

    double quaternion_norm() const { return std::sqrt(c_ * c_ + s_.squaredNorm()); }

private:
    struct NoRenorm {};
    Su2Element(double c, const Vec3& s, NoRenorm) : c_(c), s_(s) {}

    double c_;
    Vec3 s_;
};

/**
 * @brief A point encoded in two coherent-state amplitudes (z1, z2),
 *        equivalently spherical coordinates (r, theta, phi) plus a global
 *        phase gamma, with dimensionless radius R = r/lambda = |z1|^2+|z2|^2.
 */
class CoherentPoint {
public:
    static CoherentPoint from_position(double r, double theta, double phi,
                                       double gamma, double lambda);
    static CoherentPoint from_amplitudes(Complex z1, Complex z2, double lambda);

    Complex z1() const { return z1_; }
    Complex z2() const { return z2_; }
    double r() const { return r_; }
    double theta() const { return theta_; }
    double phi() const { return phi_; }
    double gamma() const { return gamma_; }
    double lambda() const { return lambda_; }
    double R() const { return big_r_; }

    /// Expectation values lambda * z^dag sigma^i z = (x1, x2, x3).
    Vec3 position() const;

private:
    CoherentPoint() = default;

    Complex z1_{0.0, 0.0}, z2_{0.0, 0.0};
    double r_ = 0.0, theta_ = 0.0, phi_ = 0.0, gamma_ = 0.0;
    double lambda_ = 1.0, big_r_ = 0.0;
};

/// Plane wave as a group element: (cos kappa, sin kappa * k_hat).
Su2Element su2_from_wavevector(const WaveVector& kv);

/// Closed-form composition: the product g1*g2 is again of plane-wave form.
Su2Element compose(const Su2Element& g1, const Su2Element& g2);

/// 2x2 matrix c*I + i (s . sigma) in the standard Pauli basis.
Mat2c to_matrix(const Su2Element& g);

/// True iff the two momenta represent the same group element (hence the same
/// physical plane wave). Throws MismatchError when the lambdas differ.
bool plane_waves_equal(const WaveVector& kv1, const WaveVector& kv2,
                       double tol = 1e-12);

/// Action of a plane wave on a coherent state: amplitudes map by the 2x2
/// matrix of g; the dimensionless radius R is preserved (unitarity).
CoherentPoint apply_to_coherent(const Su2Element& g, const CoherentPoint& z);

/// Recover the momentum (kappa/lambda along the element axis) of an element.
WaveVector wavevector_from_su2(const Su2Element& g, double lambda);

} // namespace fuzzysphere
