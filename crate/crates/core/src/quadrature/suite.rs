//! Closed-form integrals for checking that err_estimate bounds the true error.

use std::f64::consts::PI;

use super::{integrate_finite, integrate_semi_infinite, DecayHint, QuadResult};
use crate::error::Result;
use crate::identities::eq11::{xi_profile, xi_profile_hint};
use crate::specfun::phi;
use crate::tolerances::Tolerances;

pub struct ClosedForm {
    pub name: &'static str,
    pub exact: f64,
    pub run: fn(Tolerances) -> Result<QuadResult<f64>>,
}

fn hint(rate: f64, scale: f64) -> DecayHint {
    DecayHint::new(rate, scale).expect("valid hint")
}

pub fn closed_form_suite() -> Vec<ClosedForm> {
    vec![
        ClosedForm { name: "int_0^1 x^2", exact: 1.0 / 3.0, run: |t| integrate_finite(|x| x * x, 0.0, 1.0, t) },
        ClosedForm { name: "int_0^pi sin", exact: 2.0, run: |t| integrate_finite(f64::sin, 0.0, PI, t) },
        ClosedForm { name: "int_0^1 sqrt", exact: 2.0 / 3.0, run: |t| integrate_finite(f64::sqrt, 0.0, 1.0, t) },
        ClosedForm {
            name: "int_-1^1 1/(1+25x^2)",
            exact: 0.4 * 5f64.atan(),
            run: |t| integrate_finite(|x| 1.0 / (1.0 + 25.0 * x * x), -1.0, 1.0, t),
        },
        ClosedForm { name: "int_0^inf e^-t", exact: 1.0, run: |t| integrate_semi_infinite(|x| (-x).exp(), hint(1.0, 1.0), t) },
        ClosedForm {
            name: "int_0^inf e^-t^2",
            exact: PI.sqrt() / 2.0,
            run: |t| integrate_semi_infinite(|x| (-x * x).exp(), hint(1.0, 2.0), t),
        },
        ClosedForm {
            name: "int_0^inf t^3 e^-t",
            exact: 6.0,
            // t³e^{−t} ≤ (6/e)³·e^{−t/2}·... bounded by 60·e^{−t/2}
            run: |t| integrate_semi_infinite(|x| x.powi(3) * (-x).exp(), hint(0.5, 60.0), t),
        },
        ClosedForm {
            name: "int_0^inf cos(3t) e^-t",
            exact: 0.1,
            run: |t| integrate_semi_infinite(|x| (3.0 * x).cos() * (-x).exp(), hint(1.0, 1.0), t),
        },
        ClosedForm {
            name: "int_0^inf sech",
            exact: PI / 2.0,
            run: |t| integrate_semi_infinite(|x| 1.0 / x.cosh(), hint(1.0, 2.0), t),
        },
        ClosedForm {
            name: "int_0^inf Xi(t)/(t^2+1/4)",
            exact: PI / 2.0 * phi(0.0),
            run: |t| integrate_semi_infinite(xi_profile, xi_profile_hint(), t),
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_is_honest_at_default_tolerance() {
        for c in closed_form_suite() {
            let r = (c.run)(Tolerances::default()).unwrap();
            assert!((r.value - c.exact).abs() <= r.err_estimate, "{}: err {} > est {}", c.name, (r.value - c.exact).abs(), r.err_estimate);
        }
    }
}
