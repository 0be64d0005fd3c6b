use crate::identities::convention::{cosine_transform, Convention};

/// C(u) relative to the chosen kernel: (π/2)φ(u) for cos(ut), (π/2)φ(2πu) for cos(2πut).
#[allow(non_snake_case)]
pub fn cosine_transform_C(u: f64, convention: Convention) -> f64 {
    cosine_transform(u, convention)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{phi, psi_theta};
    use crate::Tolerances;
    use std::f64::consts::PI;

    #[test]
    fn conventions() {
        assert_eq!(cosine_transform_C(0.7, Convention::Plain), PI / 2.0 * phi(0.7));
        let psi = psi_theta((-2.0 * PI).exp(), Tolerances::default()).unwrap();
        let want = PI / 2.0 * ((PI / 2.0).exp() - 2.0 * (-PI / 2.0).exp() * psi);
        assert!((cosine_transform_C(0.5, Convention::TwoPi) - want).abs() < 1e-13);
        let u = 3.0;
        assert!((cosine_transform_C(u, Convention::TwoPi) / (PI / 2.0 * (-PI * u).exp()) - 1.0).abs() < 1e-12);
    }
}
