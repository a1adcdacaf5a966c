use crate::arith::{nonpositive_integer, real, Complex, POLE_TOL};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Family {
    F1,
    F2,
    F3,
    F4,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Family::F1 => "F1",
            Family::F2 => "F2",
            Family::F3 => "F3",
            Family::F4 => "F4",
        };
        f.write_str(name)
    }
}

/// Parameters of one of Appell's four double series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AppellParams {
    /// `F1(a; b1, b2; c; u, v)`
    F1 { a: Complex, b1: Complex, b2: Complex, c: Complex },
    /// `F2(a; b1, b2; c1, c2; u, v)`
    F2 { a: Complex, b1: Complex, b2: Complex, c1: Complex, c2: Complex },
    /// `F3(a1, a2; b1, b2; c; u, v)`
    F3 { a1: Complex, a2: Complex, b1: Complex, b2: Complex, c: Complex },
    /// `F4(a; b; c1, c2; u, v)`
    F4 { a: Complex, b: Complex, c1: Complex, c2: Complex },
}

impl AppellParams {
    pub fn f1(a: Complex, b1: Complex, b2: Complex, c: Complex) -> Self {
        Self::F1 { a, b1, b2, c }
    }

    pub fn f2(a: Complex, b1: Complex, b2: Complex, c1: Complex, c2: Complex) -> Self {
        Self::F2 { a, b1, b2, c1, c2 }
    }

    pub fn f3(a1: Complex, a2: Complex, b1: Complex, b2: Complex, c: Complex) -> Self {
        Self::F3 { a1, a2, b1, b2, c }
    }

    pub fn f4(a: Complex, b: Complex, c1: Complex, c2: Complex) -> Self {
        Self::F4 { a, b, c1, c2 }
    }

    /// `F2(a; 1, 1; 2, 2)`, the function with an elementary closed form.
    pub fn f2_lemma(a: Complex) -> Self {
        Self::f2(a, real(1.0), real(1.0), real(2.0), real(2.0))
    }

    /// `F4(a; b; c, a+b−c+1)`, the product form of Bailey's identity.
    pub fn f4_bailey(a: Complex, b: Complex, c: Complex) -> Self {
        Self::f4(a, b, c, a + b - c + 1.0)
    }

    /// `F4(a; b; c, a+b−c+3/2)`, which restricts to a `2F1(2a, 2b; 2c−1)` companion.
    pub fn f4_half_shift(a: Complex, b: Complex, c: Complex) -> Self {
        Self::f4(a, b, c, a + b - c + 1.5)
    }

    /// `F1(a; 2b, a−b; 1+b)`
    pub fn f1_pair_xiv(a: Complex, b: Complex) -> Self {
        Self::f1(a, 2.0 * b, a - b, b + 1.0)
    }

    /// `F4(a; b; c+1/2, 1/2)`
    pub fn f4_pair_viii(a: Complex, b: Complex, c: Complex) -> Self {
        Self::f4(a, b, c + 0.5, real(0.5))
    }

    /// `F4(2c−1/2; 3c−1; c+1/2, c+1/2)`
    pub fn f4_pair_x(c: Complex) -> Self {
        Self::f4(2.0 * c - 0.5, 3.0 * c - 1.0, c + 0.5, c + 0.5)
    }

    pub fn family(&self) -> Family {
        match self {
            Self::F1 { .. } => Family::F1,
            Self::F2 { .. } => Family::F2,
            Self::F3 { .. } => Family::F3,
            Self::F4 { .. } => Family::F4,
        }
    }

    pub fn denominators(&self) -> Vec<Complex> {
        match *self {
            Self::F1 { c, .. } | Self::F3 { c, .. } => vec![c],
            Self::F2 { c1, c2, .. } | Self::F4 { c1, c2, .. } => vec![c1, c2],
        }
    }

    pub fn validate(&self) -> Result<()> {
        for d in self.denominators() {
            if nonpositive_integer(d, POLE_TOL).is_some() {
                return Err(Error::UndefinedCoefficient(format!(
                    "{} denominator parameter {d} is a non-positive integer",
                    self.family()
                )));
            }
        }
        Ok(())
    }
}
