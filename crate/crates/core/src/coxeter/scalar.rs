//! Scalars for root coordinates.
//!
//! Crystallographic types and `H3`/`H4` live in the ring `Z[τ]` with
//! `τ² = τ + 1`, so every root coordinate is compared exactly. Dihedral
//! groups `I2(m)` whose Cartan entries leave that ring fall back to `f64`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Tolerance used whenever a floating-point scalar is involved.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// The golden ratio `(1 + √5) / 2`.
pub const TAU: f64 = 1.618_033_988_749_894_8;

/// An element `a + b·τ` of `Z[τ]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoldenInt {
    pub a: i64,
    pub b: i64,
}

impl GoldenInt {
    pub const ZERO: GoldenInt = GoldenInt { a: 0, b: 0 };
    pub const ONE: GoldenInt = GoldenInt { a: 1, b: 0 };
    pub const TAU: GoldenInt = GoldenInt { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        GoldenInt { a, b }
    }

    pub const fn int(a: i64) -> Self {
        GoldenInt { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * TAU
    }

    /// Sign of the real number `a + bτ`, decided exactly.
    pub fn signum(self) -> i32 {
        // a + bτ > 0  <=>  2a + b + b√5 > 0
        let p = 2 * self.a + self.b;
        let q = self.b;
        match (p.signum(), q.signum()) {
            (0, 0) => 0,
            (x, 0) | (0, x) => x as i32,
            (x, y) if x == y => x as i32,
            // opposite signs: compare p² with 5q²
            (x, _) => {
                let lhs = (p as i128) * (p as i128);
                let rhs = 5 * (q as i128) * (q as i128);
                if lhs > rhs {
                    x as i32
                } else {
                    -(x as i32)
                }
            }
        }
    }
}

impl Add for GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: GoldenInt) -> GoldenInt {
        GoldenInt::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: GoldenInt) -> GoldenInt {
        GoldenInt::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt::new(-self.a, -self.b)
    }
}

impl Mul for GoldenInt {
    type Output = GoldenInt;
    fn mul(self, rhs: GoldenInt) -> GoldenInt {
        // (a + bτ)(c + dτ) = ac + (ad + bc)τ + bd(τ + 1)
        let (a, b, c, d) = (self.a, self.b, rhs.a, rhs.b);
        GoldenInt::new(a * c + b * d, a * d + b * c + b * d)
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "τ"),
            (0, -1) => write!(f, "-τ"),
            (0, b) => write!(f, "{b}τ"),
            (a, 1) => write!(f, "{a}+τ"),
            (a, -1) => write!(f, "{a}-τ"),
            (a, b) if b > 0 => write!(f, "{a}+{b}τ"),
            (a, b) => write!(f, "{a}{b}τ"),
        }
    }
}

/// A root coordinate: exact when possible, floating point otherwise.
#[derive(Clone, Copy, Debug)]
pub enum Scalar {
    Exact(GoldenInt),
    Approx(f64),
}

impl Scalar {
    pub const ZERO: Scalar = Scalar::Exact(GoldenInt::ZERO);
    pub const ONE: Scalar = Scalar::Exact(GoldenInt::ONE);

    pub fn int(a: i64) -> Self {
        Scalar::Exact(GoldenInt::int(a))
    }

    pub fn to_f64(self) -> f64 {
        match self {
            Scalar::Exact(g) => g.to_f64(),
            Scalar::Approx(x) => x,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn is_zero(self) -> bool {
        match self {
            Scalar::Exact(g) => g.is_zero(),
            Scalar::Approx(x) => x.abs() < FLOAT_TOLERANCE,
        }
    }

    /// -1, 0 or 1; floats within tolerance of zero count as zero.
    pub fn signum(self) -> i32 {
        match self {
            Scalar::Exact(g) => g.signum(),
            Scalar::Approx(x) if x.abs() < FLOAT_TOLERANCE => 0,
            Scalar::Approx(x) if x > 0.0 => 1,
            Scalar::Approx(_) => -1,
        }
    }

    fn binary(self, rhs: Scalar, exact: fn(GoldenInt, GoldenInt) -> GoldenInt, approx: fn(f64, f64) -> f64) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(x), Scalar::Exact(y)) => Scalar::Exact(exact(x, y)),
            (x, y) => Scalar::Approx(approx(x.to_f64(), y.to_f64())),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (*self, *other) {
            (Scalar::Exact(x), Scalar::Exact(y)) => x == y,
            (x, y) => (x.to_f64() - y.to_f64()).abs() < FLOAT_TOLERANCE,
        }
    }
}

impl From<GoldenInt> for Scalar {
    fn from(g: GoldenInt) -> Scalar {
        Scalar::Exact(g)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.binary(rhs, |x, y| x + y, |x, y| x + y)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self.binary(rhs, |x, y| x - y, |x, y| x - y)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.binary(rhs, |x, y| x * y, |x, y| x * y)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(g) => Scalar::Exact(-g),
            Scalar::Approx(x) => Scalar::Approx(-x),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(g) => write!(f, "{g}"),
            Scalar::Approx(x) => write!(f, "{x:.6}"),
        }
    }
}
