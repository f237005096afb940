use num_complex::Complex64;

use crate::oracle::Params;

/// Turning points X∓ = (√n ∓ √a)², the edges of the oscillatory interval.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TurningPoints {
    pub x_minus: f64,
    pub x_plus: f64,
}

impl TurningPoints {
    pub fn width(&self) -> f64 {
        self.x_plus - self.x_minus
    }

    /// Whether x lies strictly inside (X⁻, X⁺).
    pub fn contains(&self, x: f64) -> bool {
        x > self.x_minus && x < self.x_plus
    }
}

/// X∓ for the given parameters.
pub fn turning_points(params: Params) -> TurningPoints {
    let (sn, sa) = (params.nf().sqrt(), params.a.sqrt());
    TurningPoints { x_minus: (sn - sa).powi(2), x_plus: (sn + sa).powi(2) }
}

/// Δ(a, n, x) = √(a² − 2a(x+n) + (x−n)²) on the principal branch.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Discriminant {
    pub delta: Complex64,
}

impl Discriminant {
    /// True when Δ is real (outside the oscillatory interval).
    pub fn is_real(&self) -> bool {
        self.delta.im == 0.0
    }

    pub fn is_zero(&self) -> bool {
        self.delta.re == 0.0 && self.delta.im == 0.0
    }
}

/// Δ at x. The radicand is evaluated in the factored form (x − X⁻)(x − X⁺) so
/// that it vanishes exactly at the turning points.
pub fn discriminant(params: Params, x: f64) -> Discriminant {
    let tp = turning_points(params);
    let radicand = (x - tp.x_minus) * (x - tp.x_plus);
    let delta = if radicand >= 0.0 {
        Complex64::new(radicand.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-radicand).sqrt())
    };
    Discriminant { delta }
}

/// Region coordinates and their inverses.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledCoordinate;

impl ScaledCoordinate {
    /// x = a + η√(2a)
    pub fn eta_of_x(params: Params, x: f64) -> f64 {
        (x - params.a) / (2.0 * params.a).sqrt()
    }

    pub fn x_of_eta(params: Params, eta: f64) -> f64 {
        params.a + eta * (2.0 * params.a).sqrt()
    }

    /// n = a − u√a
    pub fn u_of_params(params: Params) -> f64 {
        (params.a - params.nf()) / params.a.sqrt()
    }

    /// x = n + a + 2 sin(θ)√(an)
    pub fn x_of_theta(params: Params, theta: f64) -> f64 {
        params.nf() + params.a + 2.0 * theta.sin() * (params.a * params.nf()).sqrt()
    }

    /// Inverse of [`Self::x_of_theta`] on (X⁻, X⁺); the sine argument is clamped to [−1, 1].
    pub fn theta_of_x(params: Params, x: f64) -> f64 {
        let s = (x - params.nf() - params.a) / (2.0 * (params.a * params.nf()).sqrt());
        s.clamp(-1.0, 1.0).asin()
    }

    /// x = X⁻ + t n^{1/6}
    pub fn x_of_t(params: Params, t: f64) -> f64 {
        turning_points(params).x_minus + t * params.nf().powf(1.0 / 6.0)
    }

    /// x = X⁺ + s n^{1/6}
    pub fn x_of_s(params: Params, s: f64) -> f64 {
        turning_points(params).x_plus + s * params.nf().powf(1.0 / 6.0)
    }

    /// x = u n (large-n coordinate below X⁻)
    pub fn x_of_u_frac(params: Params, u_frac: f64) -> f64 {
        u_frac * params.nf()
    }
}
