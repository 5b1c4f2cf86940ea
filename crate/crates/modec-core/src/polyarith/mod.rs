//! Exact arithmetic on polynomials with integer and rational coefficients.
//!
//! The central type is [`IntPoly`], a dense univariate polynomial over ℤ
//! stored constant term first with no trailing zero coefficients.  On top of
//! it sit resultants (subresultant remainder sequences, see [`resultant`]),
//! gcd and squarefree parts in ℚ[x], factorization over ℚ (Zassenhaus with
//! a bounded-search fallback, see [`factor`]) and factorization over 𝔽_p
//! ([`modp`]).

mod factor;
mod modp;
mod parse;
mod resultant;

pub use factor::factor_over_q;
pub use modp::{factor_mod_p, ModPoly};
pub use parse::parse_int_poly;
pub use resultant::{bivariate_resultant, resultant, BiPoly, Var};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// Dense polynomial over ℤ, constant term first.
///
/// Canonical form: no trailing zero coefficients, so the leading coefficient
/// of a nonzero polynomial is nonzero and `coeffs.len() == degree + 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial c·x^k.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn x() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree of a nonzero polynomial; 0 for the zero polynomial by
    /// convention (callers guard on `is_zero` where the difference matters).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    /// Content: gcd of the coefficients (nonnegative), 0 for zero.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut content = self.content();
        if self.lc().is_negative() {
            content = -content;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        }
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Reverse of coefficients: x^deg · p(1/x).
    pub fn reversed(&self) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPoly::new(coeffs)
    }

    /// Substitute x ↦ x + c.
    pub fn translate(&self, c: &BigInt) -> IntPoly {
        // Horner on the shifted variable.
        let mut acc = IntPoly::zero();
        let shift = IntPoly::new(vec![c.clone(), BigInt::one()]);
        for coeff in self.coeffs.iter().rev() {
            acc = &(&acc * &shift) + &IntPoly::constant(coeff.clone());
        }
        acc
    }

    /// Substitute x ↦ x^k.
    pub fn inflate(&self, k: usize) -> IntPoly {
        if self.is_zero() || k == 0 {
            return IntPoly::constant(self.coeff(0));
        }
        let mut coeffs = vec![BigInt::zero(); self.degree() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        IntPoly { coeffs }
    }

    /// Exact division; panics if the division is not exact (internal use on
    /// divisions that are exact by construction).
    pub fn exact_div(&self, divisor: &IntPoly) -> IntPoly {
        self.try_exact_div(divisor)
            .expect("exact polynomial division left a remainder")
    }

    /// Exact division over ℤ[x] if the divisor divides self, else None.
    pub fn try_exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dn = divisor.degree();
        let dlc = divisor.lc();
        let qdeg = self.degree() - dn;
        let mut quot = vec![BigInt::zero(); qdeg + 1];
        for k in (0..=qdeg).rev() {
            let num = rem[k + dn].clone();
            if (&num % &dlc) != BigInt::zero() {
                return None;
            }
            let q = num / &dlc;
            if !q.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &q * dc;
                }
            }
            quot[k] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(IntPoly::new(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder: lc(d)^(deg s − deg d + 1) · s ≡ prem mod d.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        assert!(!divisor.is_zero());
        if self.degree() < divisor.degree() || self.is_zero() {
            let e = self.degree() as i64 - divisor.degree() as i64 + 1;
            if e > 0 {
                return self.scale(&divisor.lc().pow(e as u32));
            }
            return self.clone();
        }
        let dlc = divisor.lc();
        let dn = divisor.degree();
        let mut rem = self.clone();
        let mut steps = self.degree() - dn + 1;
        while !rem.is_zero() && rem.degree() >= dn {
            let k = rem.degree() - dn;
            let coef = rem.lc();
            rem = rem.scale(&dlc);
            let sub = divisor.scale(&coef).shift_up(k);
            rem = &rem - &sub;
            steps -= 1;
        }
        // Normalize the power of lc so the defining identity holds exactly.
        if steps > 0 {
            rem = rem.scale(&dlc.pow(steps as u32));
        }
        rem
    }

    /// Primitive gcd in ℤ[x] via the subresultant remainder sequence,
    /// positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().abs_content_gcd(other);
        }
        if other.is_zero() {
            return self.primitive_part().abs_content_gcd(self);
        }
        let cont_gcd = self.content().gcd(&other.content());
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            if b.is_zero() {
                break;
            }
            if b.degree() == 0 {
                // Nonzero constant remainder: gcd of primitive parts is 1.
                a = IntPoly::one();
                break;
            }
            let delta = a.degree() - b.degree();
            let rem = a.pseudo_rem(&b);
            a = std::mem::replace(&mut b, IntPoly::zero());
            if rem.is_zero() {
                break;
            }
            let divisor = &g * h.pow(delta as u32);
            b = IntPoly {
                coeffs: rem.coeffs.iter().map(|c| c / &divisor).collect(),
            };
            g = a.lc();
            h = if delta == 0 {
                h
            } else {
                let gp = g.pow(delta as u32);
                if delta == 1 {
                    gp
                } else {
                    &gp / h.pow((delta - 1) as u32)
                }
            };
        }
        a.primitive_part().scale(&cont_gcd)
    }

    fn abs_content_gcd(&self, orig: &IntPoly) -> IntPoly {
        // gcd(0, f) = ±f normalized to positive leading coefficient times
        // the content sign convention.
        let _ = orig;
        if self.is_zero() {
            IntPoly::zero()
        } else {
            let c = orig.content();
            self.scale(&c)
        }
    }

    /// Squarefree part f / gcd(f, f′), primitive, positive lc.
    pub fn squarefree_part(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.primitive_part();
        if p.degree() == 0 {
            return Ok(IntPoly::one());
        }
        let g = p.gcd(&p.derivative());
        Ok(p.exact_div(&g).primitive_part())
    }

    /// Maximal k with x^k | f, together with f / x^k.
    pub fn strip_root_at_zero(&self) -> (usize, IntPoly) {
        if self.is_zero() {
            return (0, IntPoly::zero());
        }
        let k = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0);
        (k, IntPoly::new(self.coeffs[k..].to_vec()))
    }

    /// ∞-norm of the coefficient vector.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::new(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Polynomial over ℚ in the normal form `numerator / denominator` with the
/// numerator a primitive-content-free integer polynomial relationship:
/// the content of the numerator is coprime to the denominator and the
/// denominator is positive.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    numerator: IntPoly,
    denominator: BigInt,
}

impl RatPoly {
    pub fn new(numerator: IntPoly, denominator: BigInt) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        if numerator.is_zero() {
            return RatPoly {
                numerator,
                denominator: BigInt::one(),
            };
        }
        let mut num = numerator;
        let mut den = denominator;
        if den.is_negative() {
            num = -&num;
            den = -den;
        }
        let g = num.content().gcd(&den);
        if !g.is_one() {
            num = IntPoly {
                coeffs: num.coeffs.iter().map(|c| c / &g).collect(),
            };
            den /= &g;
        }
        RatPoly {
            numerator: num,
            denominator: den,
        }
    }

    pub fn from_int(p: IntPoly) -> Self {
        RatPoly::new(p, BigInt::one())
    }

    pub fn from_rational_coeffs(coeffs: &[BigRational]) -> Self {
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        RatPoly::new(IntPoly::new(ints), den)
    }

    pub fn zero() -> Self {
        RatPoly::from_int(IntPoly::zero())
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn degree(&self) -> usize {
        self.numerator.degree()
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        BigRational::new(self.numerator.coeff(k), self.denominator.clone())
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..self.numerator.coeffs.len())
            .map(|k| self.coeff(k))
            .collect()
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.numerator.lc() == self.denominator
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.denominator.is_one()
    }

    pub fn monic(&self) -> RatPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.coeff(self.degree());
        let coeffs: Vec<BigRational> = self.coeffs().iter().map(|c| c / &lc).collect();
        RatPoly::from_rational_coeffs(&coeffs)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.numerator.eval_rational(x) / BigRational::from_integer(self.denominator.clone())
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / {}", self.numerator, self.denominator)
        }
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

/// Monic gcd in ℚ[x].
pub fn poly_gcd(f: &RatPoly, g: &RatPoly) -> Result<RatPoly> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.numerator.gcd(&g.numerator);
    Ok(RatPoly::from_int(d).monic())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let f = p(&[1, 2, 0, 0]);
        assert_eq!(f.degree(), 1);
        assert_eq!(f.coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn arithmetic_basics() {
        let f = p(&[-2, 0, 1]); // x^2 - 2
        let g = p(&[1, 1]); // x + 1
        assert_eq!(&f + &g, p(&[-1, 1, 1]));
        assert_eq!(&f - &g, p(&[-3, -1, 1]));
        assert_eq!(&f * &g, p(&[-2, -2, 1, 1]));
        assert_eq!(f.eval(&BigInt::from(3)), BigInt::from(7));
    }

    #[test]
    fn exact_division() {
        let f = p(&[-1, 0, 1]); // x^2 - 1
        let g = p(&[1, 1]);
        assert_eq!(f.try_exact_div(&g), Some(p(&[-1, 1])));
        assert_eq!(f.try_exact_div(&p(&[1, 2])), None);
    }

    #[test]
    fn pseudo_rem_identity() {
        // lc(d)^(deg f - deg d + 1) f = q d + prem
        let f = p(&[1, 4, 0, 3, 2]);
        let d = p(&[5, -1, 3]);
        let r = f.pseudo_rem(&d);
        let e = (f.degree() - d.degree() + 1) as u32;
        let lhs = f.scale(&d.lc().pow(e));
        let diff = &lhs - &r;
        assert!(diff.try_exact_div(&d).is_some());
    }

    #[test]
    fn gcd_examples() {
        let f = p(&[-1, 0, 1]);
        let g = p(&[-1, 1]);
        assert_eq!(f.gcd(&g), p(&[-1, 1]));

        // squarefree input
        let f = p(&[-2, 0, 1]);
        assert_eq!(f.gcd(&f.derivative()).degree(), 0);

        // content handling
        let f = p(&[4, 8]);
        let g = p(&[6]);
        assert_eq!(f.gcd(&g), p(&[2]));
    }

    #[test]
    fn rat_poly_gcd_examples() {
        let f = RatPoly::from_int(p(&[-1, 0, 1]));
        let g = RatPoly::from_int(p(&[-1, 1]));
        let d = poly_gcd(&f, &g).unwrap();
        assert_eq!(d, RatPoly::from_int(p(&[-1, 1])));

        let f = RatPoly::from_int(p(&[-2, 0, 1]));
        let df = RatPoly::from_int(p(&[0, 2]));
        let d = poly_gcd(&f, &df).unwrap();
        assert_eq!(d, RatPoly::from_int(p(&[1])));

        let f = RatPoly::from_int(p(&[1, 0, -10, 0, 1]));
        let g = RatPoly::from_int(p(&[-2, 0, 1]));
        let d = poly_gcd(&f, &g).unwrap();
        assert_eq!(d, RatPoly::from_int(p(&[1])));
    }

    #[test]
    fn squarefree_part_splits_multiplicity() {
        let f = &p(&[-1, 1]) * &p(&[-1, 1]); // (x-1)^2
        let sf = f.squarefree_part().unwrap();
        assert_eq!(sf, p(&[-1, 1]));
    }

    #[test]
    fn translate_and_inflate() {
        let f = p(&[0, 0, 1]); // x^2
        assert_eq!(f.translate(&BigInt::from(1)), p(&[1, 2, 1]));
        assert_eq!(p(&[-2, 1]).inflate(3), p(&[-2, 0, 0, 1]));
    }

    #[test]
    fn rat_poly_normal_form() {
        let r = RatPoly::new(p(&[2, 4]), BigInt::from(-6));
        assert_eq!(r.denominator(), &BigInt::from(3));
        assert_eq!(r.numerator(), &p(&[-1, -2]));
        assert!(RatPoly::new(p(&[3, 3]), BigInt::from(3)).is_integral());
    }

    #[test]
    fn display_matches_external_syntax() {
        let f = p(&[1, 0, -10, 0, 1]);
        assert_eq!(f.to_string(), "x^4 - 10*x^2 + 1");
    }
}
