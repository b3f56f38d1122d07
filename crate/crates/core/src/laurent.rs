//! Exact integer Laurent polynomials in a single variable `A`.
//!
//! Coefficients are arbitrary-precision integers so bracket state sums
//! never overflow. Zero coefficients are never stored; the zero
//! polynomial has an empty coefficient map.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial over the integers in one variable.
///
/// The variable is conventionally printed as `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * A^e`.
    pub fn monomial(coeff: impl Into<BigInt>, exponent: i64) -> Self {
        let coeff = coeff.into();
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exponent, coeff);
        }
        Self { coeffs }
    }

    /// The loop value `d = -A^2 - A^-2`.
    pub fn loop_value() -> Self {
        let mut p = Self::monomial(-1, 2);
        p += &Self::monomial(-1, -2);
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p += &Self::monomial(c, e);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// Iterate terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.coeffs.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn insert_term(&mut self, exponent: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(exponent) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiply by `c * A^e` in place.
    pub fn mul_monomial(&mut self, coeff: &BigInt, exponent: i64) {
        if coeff.is_zero() {
            self.coeffs.clear();
            return;
        }
        let old = std::mem::take(&mut self.coeffs);
        for (e, c) in old {
            self.coeffs.insert(e + exponent, c * coeff);
        }
    }

    /// Substitute `A -> A^-1`, the mirror image map for brackets.
    pub fn invert_variable(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect();
        Self { coeffs }
    }

    /// Exact division, returning `None` when `divisor` does not divide
    /// `self` over the integer Laurent ring.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dlead_e, dlead_c) = {
            let (e, c) = divisor.coeffs.iter().next_back().unwrap();
            (*e, c.clone())
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let (rlead_e, rlead_c) = {
                let (e, c) = rem.coeffs.iter().next_back().unwrap();
                (*e, c.clone())
            };
            if (&rlead_c % &dlead_c) != BigInt::zero() {
                return None;
            }
            let qc = &rlead_c / &dlead_c;
            let qe = rlead_e - dlead_e;
            let mut term_times_div = divisor.clone();
            term_times_div.mul_monomial(&qc, qe);
            rem = &rem - &term_times_div;
            quot.insert_term(qe, qc);
            if let Some(new_max) = rem.max_exponent() {
                if new_max >= rlead_e {
                    return None;
                }
            }
        }
        Some(quot)
    }

    /// Canonical text form: signed monomials in decreasing exponent order,
    /// e.g. `-A^6 + 2 - A^-6`. The zero polynomial prints as `0`.
    pub fn canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || *e == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if *e != 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push('A');
                if *e != 1 {
                    out.push('^');
                    out.push_str(&e.to_string());
                }
            }
        }
        out
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, c) in &rhs.coeffs {
            self.insert_term(*e, c.clone());
        }
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.insert_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        let coeffs = self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect();
        LaurentPolynomial { coeffs }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.insert_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

/// `value^exp` for small non-negative exponents.
pub fn pow(value: &LaurentPolynomial, exp: usize) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::one();
    for _ in 0..exp {
        out = &out * value;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_arithmetic() {
        let a2 = LaurentPolynomial::monomial(1, 2);
        let am2 = LaurentPolynomial::monomial(1, -2);
        let d = LaurentPolynomial::loop_value();
        assert_eq!(&(-&a2) - &am2, d);
        assert_eq!(d.coeff(2), BigInt::from(-1));
        assert_eq!(d.coeff(0), BigInt::zero());
    }

    #[test]
    fn cancellation_keeps_map_clean() {
        let p = LaurentPolynomial::from_terms([(3, 5), (0, 2)]);
        let q = LaurentPolynomial::from_terms([(3, -5)]);
        let s = &p + &q;
        assert_eq!(s, LaurentPolynomial::monomial(2, 0));
        assert_eq!(s.terms().count(), 1);
    }

    #[test]
    fn exact_division_by_loop_value() {
        let d = LaurentPolynomial::loop_value();
        let d3 = pow(&d, 3);
        assert_eq!(d3.div_exact(&d), Some(pow(&d, 2)));
        let one = LaurentPolynomial::one();
        assert_eq!(one.div_exact(&d), None);
    }

    #[test]
    fn mirror_map() {
        let p = LaurentPolynomial::from_terms([(5, -1), (-3, 7)]);
        let q = p.invert_variable();
        assert_eq!(q.coeff(-5), BigInt::from(-1));
        assert_eq!(q.coeff(3), BigInt::from(7));
        assert_eq!(q.invert_variable(), p);
    }

    #[test]
    fn canonical_printing() {
        let p = LaurentPolynomial::from_terms([(4, -1), (0, 2), (-4, -1)]);
        assert_eq!(p.canonical_string(), "-A^4 + 2 - A^-4");
        assert_eq!(LaurentPolynomial::zero().canonical_string(), "0");
        assert_eq!(LaurentPolynomial::monomial(1, 1).canonical_string(), "A");
        assert_eq!(LaurentPolynomial::monomial(-3, -1).canonical_string(), "-3*A^-1");
    }
}
