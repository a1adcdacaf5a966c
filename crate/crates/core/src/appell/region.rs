use crate::arith::Complex;

use super::params::{AppellParams, Family};

/// The quantity that must stay below one inside each family's region.
pub fn region_measure(family: Family, u: Complex, v: Complex) -> f64 {
    match family {
        Family::F1 | Family::F3 => u.norm().max(v.norm()),
        Family::F2 => u.norm() + v.norm(),
        Family::F4 => u.norm().sqrt() + v.norm().sqrt(),
    }
}

/// Strict interior test: `max(|u|,|v|) < 1` for F1/F3, `|u|+|v| < 1` for F2,
/// `√|u|+√|v| < 1` for F4.
pub fn in_convergence_region(family: Family, u: Complex, v: Complex) -> bool {
    region_measure(family, u, v) < 1.0
}

pub(crate) fn check_region(p: &AppellParams, u: Complex, v: Complex) -> crate::Result<()> {
    let family = p.family();
    if in_convergence_region(family, u, v) {
        Ok(())
    } else {
        Err(crate::Error::OutsideDomain(format!(
            "({u}, {v}) is outside the {family} convergence region (measure {})",
            region_measure(family, u, v)
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::real;

    #[test]
    fn region_examples() {
        assert!(in_convergence_region(Family::F2, real(0.4), real(0.5)));
        assert!(!in_convergence_region(Family::F4, real(0.25), real(0.25)));
        assert!(in_convergence_region(Family::F3, real(0.99), real(-0.5)));
        assert!(in_convergence_region(Family::F1, real(-0.99), real(0.99)));
        assert!(!in_convergence_region(Family::F2, real(0.5), real(-0.5)));
        assert!(in_convergence_region(Family::F4, real(0.2), real(0.2)));
    }
}
