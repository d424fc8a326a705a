//! Dense polynomials in λ with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `coeffs[i]` is the coefficient of `λ^i`. No trailing zeros; the zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = Polynomial {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::from_coeffs([c.into()])
    }

    /// `λ^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Polynomial { coeffs }
    }

    /// `λ - a`.
    pub fn linear_root(a: impl Into<BigInt>) -> Self {
        Polynomial::from_coeffs([-a.into(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c))
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn evaluate_u64(&self, x: u64) -> BigInt {
        self.evaluate(&BigInt::from(x))
    }

    /// True when the nonzero coefficients form one contiguous run ending at
    /// the leading term and strictly alternate in sign, the leading term
    /// positive. Zeros are allowed only below that run.
    pub fn has_alternating_signs(&self) -> bool {
        let Some(d) = self.degree() else { return false };
        let low = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(d);
        (low..=d).all(|k| {
            let c = &self.coeffs[k];
            if (d - k) % 2 == 0 {
                c.is_positive()
            } else {
                c.is_negative()
            }
        })
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

/// `∏_{j=0}^{k-1} (λ - j)`; the empty product is 1.
pub fn falling_factorial_poly(k: usize) -> Polynomial {
    (0..k).fold(Polynomial::one(), |acc, j| {
        &acc * &Polynomial::linear_root(j as u64)
    })
}

/// Unique polynomial of degree at most `points.len() - 1` through the given
/// exact points, required to have integer coefficients and degree at most
/// `degree`.
pub fn interpolate_through_counts(points: &[(i64, BigInt)], degree: usize) -> Result<Polynomial> {
    if points.len() < degree + 1 {
        return Err(Error::Interpolation(format!(
            "need at least {} points for degree {degree}, got {}",
            degree + 1,
            points.len()
        )));
    }
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::Interpolation(format!("repeated abscissa {x}")));
        }
    }
    // Newton divided differences over the rationals.
    let xs: Vec<BigRational> = points
        .iter()
        .map(|(x, _)| BigRational::from_integer((*x).into()))
        .collect();
    let mut table: Vec<BigRational> = points
        .iter()
        .map(|(_, y)| BigRational::from_integer(y.clone()))
        .collect();
    let m = points.len();
    for level in 1..m {
        for i in (level..m).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Expand the Newton form into monomial coefficients.
    let mut acc: Vec<BigRational> = vec![BigRational::zero(); m];
    for i in (0..m).rev() {
        // acc = acc * (λ - xs[i]) + table[i]
        let mut next = vec![BigRational::zero(); m];
        for k in 0..m {
            if acc[k].is_zero() {
                continue;
            }
            if k + 1 < m {
                next[k + 1] += &acc[k];
            }
            next[k] -= &acc[k] * &xs[i];
        }
        next[0] += &table[i];
        acc = next;
    }
    let mut coeffs = Vec::with_capacity(m);
    for (k, c) in acc.into_iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::Interpolation(format!(
                "coefficient of λ^{k} is {c}, not an integer"
            )));
        }
        coeffs.push(c.to_integer());
    }
    let p = Polynomial::from_coeffs(coeffs);
    if p.degree().is_some_and(|d| d > degree) {
        return Err(Error::Interpolation(format!(
            "points need degree {}, more than the stated {degree}",
            p.degree().unwrap()
        )));
    }
    Ok(p)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|k| self.coefficient(k) + rhs.coefficient(k)))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|k| self.coefficient(k) - rhs.coefficient(k)))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Human-readable form, e.g. `λ^3 - 3λ^2 + 2λ`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Serialized as `{"coeffs": ["c0", "c1", ...]}`, ascending degree, decimal
/// strings.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let strings: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        let mut st = serializer.serialize_struct("Polynomial", 1)?;
        st.serialize_field("coeffs", &strings)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coeffs: Vec<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn arithmetic_examples() {
        let lambda = Polynomial::monomial(1);
        assert_eq!(&lambda * &Polynomial::linear_root(1), p(&[0, -1, 1]));
        let q = p(&[3, -1, 4]);
        assert!((&q - &q).is_zero());
        assert_eq!(
            &Polynomial::linear_root(1) * &Polynomial::linear_root(2),
            p(&[2, -3, 1])
        );
        assert_eq!(q.scale(&BigInt::from(-2)), p(&[-6, 2, -8]));
        assert_eq!(q.scale(&BigInt::zero()), Polynomial::zero());
        assert_eq!(p(&[0, 1]).pow(3), Polynomial::monomial(3));
    }

    #[test]
    fn normalization_drops_trailing_zeros() {
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert_eq!(p(&[0, 0]), Polynomial::zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn evaluation_examples() {
        let k3 = p(&[0, 2, -3, 1]);
        assert_eq!(k3.evaluate_u64(3), BigInt::from(6));
        assert_eq!(k3.evaluate_u64(0), BigInt::zero());
        assert_eq!(p(&[7, 5]).evaluate_u64(0), BigInt::from(7));
        // λ(λ-1)^2
        let p3 = &Polynomial::monomial(1) * &Polynomial::linear_root(1).pow(2);
        assert_eq!(p3.evaluate_u64(3), BigInt::from(12));
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial_poly(0), Polynomial::one());
        assert_eq!(falling_factorial_poly(2), p(&[0, -1, 1]));
        assert_eq!(falling_factorial_poly(3), p(&[0, 2, -3, 1]));
    }

    #[test]
    fn interpolation_examples() {
        let pts: Vec<(i64, BigInt)> = [(0, 0), (1, 0), (2, 0), (3, 6)]
            .iter()
            .map(|&(x, y)| (x, BigInt::from(y)))
            .collect();
        assert_eq!(
            interpolate_through_counts(&pts, 3).unwrap(),
            p(&[0, 2, -3, 1])
        );
        assert_eq!(
            interpolate_through_counts(&[(0, BigInt::one())], 0).unwrap(),
            Polynomial::one()
        );
        // C4 counts at λ = 0..4 from exhaustive enumeration.
        let c4: Vec<(i64, BigInt)> = [0, 0, 2, 18, 84]
            .iter()
            .enumerate()
            .map(|(x, &y)| (x as i64, BigInt::from(y)))
            .collect();
        assert_eq!(
            interpolate_through_counts(&c4, 4).unwrap(),
            p(&[0, -3, 6, -4, 1])
        );
    }

    #[test]
    fn interpolation_errors() {
        let one = BigInt::one();
        assert!(matches!(
            interpolate_through_counts(&[(0, one.clone())], 1),
            Err(Error::Interpolation(_))
        ));
        assert!(interpolate_through_counts(&[(0, one.clone()), (0, one.clone())], 1).is_err());
        // Through (0,0) and (2,1) the line is λ/2.
        assert!(interpolate_through_counts(&[(0, BigInt::zero()), (2, one.clone())], 1).is_err());
        // Three points on a parabola but stated degree 1.
        let sq: Vec<(i64, BigInt)> = (0..3).map(|x| (x, BigInt::from(x * x))).collect();
        assert!(interpolate_through_counts(&sq, 1).is_err());
    }

    #[test]
    fn display_and_json() {
        assert_eq!(p(&[0, 2, -3, 1]).to_string(), "λ^3 - 3λ^2 + 2λ");
        assert_eq!(p(&[-1, 0, -1]).to_string(), "-λ^2 - 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let json = serde_json::to_string(&p(&[0, 2, -3, 1])).unwrap();
        assert_eq!(json, r#"{"coeffs":["0","2","-3","1"]}"#);
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p(&[0, 2, -3, 1]));
    }

    #[test]
    fn alternating_signs() {
        assert!(p(&[0, 2, -3, 1]).has_alternating_signs());
        assert!(!p(&[0, 2, 3, 1]).has_alternating_signs());
        assert!(p(&[0, 0, -3, 1]).has_alternating_signs());
        assert!(!p(&[0, 1, 0, 1]).has_alternating_signs());
        assert!(!p(&[0, 1, -3, -1]).has_alternating_signs());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-50i64..50, 0..6).prop_map(|c| p(&c))
    }

    proptest! {
        #[test]
        fn ring_homomorphism_at_points(a in arb_poly(), b in arb_poly(), x in -6i64..6) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).evaluate(&x), a.evaluate(&x) * b.evaluate(&x));
            prop_assert_eq!((&a + &b).evaluate(&x), a.evaluate(&x) + b.evaluate(&x));
            prop_assert_eq!((&a - &b).evaluate(&x), a.evaluate(&x) - b.evaluate(&x));
        }

        #[test]
        fn interpolation_recovers_polynomial(a in arb_poly()) {
            let d = a.degree().unwrap_or(0);
            let pts: Vec<(i64, BigInt)> = (0..=d as i64).map(|x| (x, a.evaluate(&x.into()))).collect();
            prop_assert_eq!(interpolate_through_counts(&pts, d).unwrap(), a);
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            let back: Polynomial = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
