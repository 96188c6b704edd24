//! Sparse polynomials in `q`, `a`, `b` over arbitrary-precision integers.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::PolyError;

/// The three indeterminates every coefficient object lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    A,
    B,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Q, Var::A, Var::B];

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::A => "a",
            Var::B => "b",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Exponent vector `(e_q, e_a, e_b)`.
///
/// Ordered graded first, then by descending `q`, `a`, `b` exponents. This is a
/// monomial order (compatible with multiplication), so the maximum monomial of a
/// polynomial is its leading monomial for division, and ascending iteration is
/// the canonical printing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub const fn new(eq: u32, ea: u32, eb: u32) -> Self {
        Monomial([eq, ea, eb])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    /// Product of monomials. Exponent overflow is a hard error.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0u32; 3];
        for i in 0..3 {
            e[i] = self.0[i]
                .checked_add(other.0[i])
                .expect("monomial exponent overflow");
        }
        Monomial(e)
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0u32; 3];
        for i in 0..3 {
            e[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(e))
    }

    fn key(&self) -> (u64, Reverse<u32>, Reverse<u32>, Reverse<u32>) {
        (
            self.degree(),
            Reverse(self.0[0]),
            Reverse(self.0[1]),
            Reverse(self.0[2]),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in `q`, `a`, `b` with integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::monomial(c, Monomial::ONE)
    }

    pub fn monomial(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn var(v: Var) -> Self {
        Poly::monomial(1, Monomial::var(v))
    }

    pub fn q() -> Self {
        Poly::var(Var::Q)
    }

    pub fn a() -> Self {
        Poly::var(Var::A)
    }

    pub fn b() -> Self {
        Poly::var(Var::B)
    }

    /// `q^e`.
    pub fn q_pow(e: u32) -> Self {
        Poly::monomial(1, Monomial::new(e, 0, 0))
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    /// Univariate polynomial in `q` from its coefficient list (index = exponent).
    pub fn from_q_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        Poly::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (Monomial::new(exp_u32(i), 0, 0), c)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (ascending) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Leading term under the monomial order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// True if no term mentions `v`.
    pub fn is_free_of(&self, v: Var) -> bool {
        self.terms.keys().all(|m| m.exp(v) == 0)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn sub_term(&mut self, m: Monomial, c: BigInt) {
        self.add_term(m, -c);
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn mul_impl(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Poly::zero();
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Exact quotient `self / den`.
    ///
    /// Runs multivariate division against the leading monomial of `den`; for a
    /// single divisor the remainder is zero exactly when `den` divides `self`.
    pub fn exact_div(&self, den: &Poly) -> Result<Poly, PolyError> {
        let Some((lead_m, lead_c)) = den.leading_term() else {
            return Err(PolyError::DivByZero);
        };
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        if den.len() == 1 {
            let mut out = BTreeMap::new();
            for (m, c) in &self.terms {
                let qm = m.checked_div(lead_m).ok_or(PolyError::NotDivisible)?;
                let (qc, r) = c.div_rem(lead_c);
                if !r.is_zero() {
                    return Err(PolyError::NotDivisible);
                }
                out.insert(qm, qc);
            }
            return Ok(Poly { terms: out });
        }
        for v in Var::ALL {
            if self.degree_in(v) < den.degree_in(v) {
                return Err(PolyError::NotDivisible);
            }
        }
        let mut rem = self.clone();
        let mut quotient = Poly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(lead_m).ok_or(PolyError::NotDivisible)?;
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for (dm, dc) in &den.terms {
                rem.sub_term(dm.mul(&qm), dc * &qc);
            }
            quotient.terms.insert(qm, qc);
        }
        Ok(quotient)
    }

    /// Multiplies by `1 - q^i`.
    pub fn mul_one_minus_q_pow(&self, i: u32) -> Poly {
        let mut out = self.clone();
        let shift = Monomial::new(i, 0, 0);
        for (m, c) in &self.terms {
            out.sub_term(m.mul(&shift), c.clone());
        }
        out
    }

    /// Exact quotient by `1 - q^i` (`i >= 1`), or `None` if it does not divide.
    pub fn div_one_minus_q_pow(&self, i: u32) -> Option<Poly> {
        assert!(i >= 1, "1 - q^0 is zero");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let step = i as usize;
        let mut out = Poly::zero();
        for ((ea, eb), coeffs) in self.q_slices() {
            let hi = coeffs.len() - 1;
            if hi < step {
                return None;
            }
            // N = Q - q^i Q  =>  Q_j = N_j + Q_{j-i}
            let mut quot: Vec<BigInt> = vec![BigInt::zero(); hi - step + 1];
            for j in 0..quot.len() {
                let mut v = coeffs[j].clone();
                if j >= step {
                    v += &quot[j - step];
                }
                quot[j] = v;
            }
            for (j, c) in coeffs.iter().enumerate().skip(hi - step + 1) {
                let residue = if j >= step { c + &quot[j - step] } else { c.clone() };
                if !residue.is_zero() {
                    return None;
                }
            }
            for (j, c) in quot.into_iter().enumerate() {
                out.add_term(Monomial::new(exp_u32(j), ea, eb), c);
            }
        }
        Some(out)
    }

    /// Groups terms by `(e_a, e_b)` into dense coefficient vectors in `q`.
    fn q_slices(&self) -> BTreeMap<(u32, u32), Vec<BigInt>> {
        let mut slices: BTreeMap<(u32, u32), Vec<BigInt>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let [eq, ea, eb] = m.0;
            let v = slices.entry((ea, eb)).or_default();
            let eq = eq as usize;
            if v.len() <= eq {
                v.resize(eq + 1, BigInt::zero());
            }
            v[eq] = c.clone();
        }
        slices
    }

    /// The polynomial in `q` multiplying `a^ea b^eb`.
    pub fn coeff_ab(&self, ea: u32, eb: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(Var::A) == ea && m.exp(Var::B) == eb)
                .map(|(m, c)| (Monomial::new(m.exp(Var::Q), 0, 0), c.clone()))
                .collect(),
        }
    }

    /// Simultaneous substitution of the bound variables.
    pub fn substitute(&self, sub: &Substitution) -> Poly {
        let mut powers: [Vec<Poly>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        for v in Var::ALL {
            if let (Some(target), Some(max)) = (sub.get(v), self.degree_in(v)) {
                let table = &mut powers[v.index()];
                table.push(Poly::one());
                for _ in 0..max {
                    let next = table.last().unwrap() * target;
                    table.push(next);
                }
            }
        }
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut kept = [0u32; 3];
            let mut factor = Poly::constant(c.clone());
            for v in Var::ALL {
                let e = m.exp(v);
                match sub.get(v) {
                    Some(_) => {
                        if e > 0 {
                            factor = &factor * &powers[v.index()][e as usize];
                        }
                    }
                    None => kept[v.index()] = e,
                }
            }
            out += &factor.mul_monomial(&Monomial(kept));
        }
        out
    }

    /// `q -> q^k`, leaving `a`, `b` untouched.
    pub fn rescale_q(&self, k: u32) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            let eq = m.0[0].checked_mul(k).expect("monomial exponent overflow");
            (Monomial([eq, m.0[1], m.0[2]]), c.clone())
        }))
    }

    /// Specializes `q` to an integer value.
    pub fn at_q(&self, value: i64) -> Poly {
        self.substitute(&Substitution::new().with(Var::Q, Poly::constant(value)))
    }
}

pub(crate) fn exp_u32(i: usize) -> u32 {
    u32::try_from(i).expect("monomial exponent overflow")
}

/// A partial assignment `variable -> Poly` applied simultaneously.
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    targets: [Option<Poly>; 3],
}

impl Substitution {
    pub fn new() -> Self {
        Substitution::default()
    }

    pub fn with(mut self, v: Var, target: Poly) -> Self {
        self.targets[v.index()] = Some(target);
        self
    }

    pub fn get(&self, v: Var) -> Option<&Poly> {
        self.targets[v.index()].as_ref()
    }
}

impl fmt::Display for Poly {
    /// Canonical form, e.g. `1 + 2*q + q^2` or `a^2 + 2*a*b - q*b^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::constant(c)
    }
}

impl From<BigInt> for Poly {
    fn from(c: BigInt) -> Self {
        Poly::constant(c)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.sub_term(*m, c.clone());
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (mut big, small) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        big += small;
        big
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_impl(rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl core::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl core::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q() -> Poly {
        Poly::q()
    }
    fn a() -> Poly {
        Poly::a()
    }
    fn b() -> Poly {
        Poly::b()
    }

    #[test]
    fn product_of_linear_forms() {
        let lhs = (a() + b()) * (a() + q() * b());
        let expect = a().pow(2) + (Poly::one() + q()) * a() * b() + q() * b().pow(2);
        assert_eq!(lhs, expect);
        assert_eq!((Poly::one() + q()).pow(2).to_string(), "1 + 2*q + q^2");
    }

    #[test]
    fn zero_is_additive_identity() {
        let p = a() * q() - Poly::constant(3);
        assert_eq!(&p + &Poly::zero(), p);
        assert_eq!((&p - &p), Poly::zero());
        assert!(Poly::zero().is_empty());
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(Poly::zero().to_string(), "0");
        let p = Poly::from_q_coeffs([4, 6, 1, -1]);
        assert_eq!(p.to_string(), "4 + 6*q + q^2 - q^3");
        assert_eq!((-q()).to_string(), "-q");
        let c2 = a().pow(2) + (Poly::constant(2) + q()) * a() * b() + (Poly::one() + q()) * b().pow(2);
        assert_eq!(c2.to_string(), "a^2 + 2*a*b + b^2 + q*a*b + q*b^2");
    }

    #[test]
    fn exact_division() {
        let num = a().pow(2) - b().pow(2);
        assert_eq!(num.exact_div(&(a() - b())).unwrap(), a() + b());
        let p = Poly::from_q_coeffs([3, 0, 2]) * a();
        assert_eq!(p.exact_div(&p).unwrap(), Poly::one());
        let num = Poly::from_q_coeffs([1, 1, 1]);
        assert_eq!(
            num.exact_div(&Poly::from_q_coeffs([1, 1])),
            Err(PolyError::NotDivisible)
        );
        assert_eq!(num.exact_div(&Poly::zero()), Err(PolyError::DivByZero));
        assert_eq!(
            Poly::constant(3).exact_div(&Poly::constant(2)),
            Err(PolyError::NotDivisible)
        );
    }

    #[test]
    fn one_minus_q_pow_division() {
        let p = Poly::from_q_coeffs([1, 0, -1]) * (a() + b());
        assert_eq!(
            p.div_one_minus_q_pow(1).unwrap(),
            (Poly::one() + q()) * (a() + b())
        );
        assert_eq!(p.div_one_minus_q_pow(2).unwrap(), a() + b());
        assert!(p.div_one_minus_q_pow(3).is_none());
        assert!(Poly::from_q_coeffs([1, 1]).div_one_minus_q_pow(1).is_none());
        let r = (a() * q() + b()).mul_one_minus_q_pow(4);
        assert_eq!(r.div_one_minus_q_pow(4).unwrap(), a() * q() + b());
    }

    #[test]
    fn substitution() {
        let c2 = a().pow(2) + (Poly::constant(2) + q()) * a() * b() + (Poly::one() + q()) * b().pow(2);
        let s = Substitution::new()
            .with(Var::A, Poly::zero())
            .with(Var::B, Poly::one());
        assert_eq!(c2.substitute(&s), Poly::one() + q());
        // a -> (a - b) turns a + b into a
        let s = Substitution::new().with(Var::A, a() - b());
        assert_eq!((a() + b()).substitute(&s), a());
        // simultaneous: swapping a and b
        let s = Substitution::new().with(Var::A, b()).with(Var::B, a());
        assert_eq!((a() * q() + b()).substitute(&s), b() * q() + a());
    }

    #[test]
    fn rescale_q_matches_substitution() {
        let p = Poly::from_q_coeffs([1, 2, 3]) * a() + q() * b();
        let s = Substitution::new().with(Var::Q, q().pow(3));
        assert_eq!(p.rescale_q(3), p.substitute(&s));
        assert_eq!(p.rescale_q(0), p.at_q(1));
    }
}
