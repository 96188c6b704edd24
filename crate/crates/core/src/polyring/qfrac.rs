use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::poly::{Poly, Substitution, Var};
use crate::error::SeriesError;

/// `num / prod_i (1 - q^i)^{m_i}`.
///
/// Denominators stay factored. Normalization strips every factor that divides
/// the numerator exactly, so a value that is a polynomial always normalizes to
/// an empty denominator. The representation is not fully canonical (e.g.
/// `(1+q)/(1-q^2)` keeps its denominator), so equality cross-multiplies.
#[derive(Clone, Debug, Default)]
pub struct QFrac {
    num: Poly,
    den: BTreeMap<u32, u32>,
}

impl QFrac {
    pub fn zero() -> Self {
        QFrac::default()
    }

    pub fn one() -> Self {
        QFrac::from(Poly::one())
    }

    /// `num / prod (1 - q^i)^{m}` for the listed `(i, m)` pairs.
    pub fn new(num: Poly, den: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut factors = BTreeMap::new();
        for (i, m) in den {
            assert!(i >= 1, "(1 - q^0) is not a valid denominator factor");
            if m > 0 {
                *factors.entry(i).or_insert(0) += m;
            }
        }
        let mut f = QFrac { num, den: factors };
        f.normalize();
        f
    }

    /// `num / ((1-q)(1-q^2)...(1-q^k))`.
    pub fn over_q_pochhammer(num: Poly, k: u32) -> Self {
        QFrac::new(num, (1..=k).map(|i| (i, 1)))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    /// Denominator factors as `(i, multiplicity)`.
    pub fn denominator(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.den.iter().map(|(&i, &m)| (i, m))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn into_poly(self) -> Option<Poly> {
        self.den.is_empty().then_some(self.num)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let mut stripped = BTreeMap::new();
        for (&i, &m) in &self.den {
            let mut left = m;
            while left > 0 {
                match self.num.div_one_minus_q_pow(i) {
                    Some(p) => {
                        self.num = p;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                stripped.insert(i, left);
            }
        }
        self.den = stripped;
    }

    /// Numerator after raising the denominator to `target` (which must dominate it).
    fn numerator_over(&self, target: &BTreeMap<u32, u32>) -> Poly {
        let mut num = self.num.clone();
        for (&i, &m) in target {
            let have = self.den.get(&i).copied().unwrap_or(0);
            for _ in have..m {
                num = num.mul_one_minus_q_pow(i);
            }
        }
        num
    }

    fn common_den(&self, other: &QFrac) -> BTreeMap<u32, u32> {
        let mut den = self.den.clone();
        for (&i, &m) in &other.den {
            let e = den.entry(i).or_insert(0);
            *e = (*e).max(m);
        }
        den
    }

    fn combine(&self, other: &QFrac, subtract: bool) -> QFrac {
        if self.den == other.den {
            let num = if subtract {
                &self.num - &other.num
            } else {
                &self.num + &other.num
            };
            let mut f = QFrac {
                num,
                den: self.den.clone(),
            };
            f.normalize();
            return f;
        }
        let den = self.common_den(other);
        let lhs = self.numerator_over(&den);
        let rhs = other.numerator_over(&den);
        let num = if subtract { lhs - rhs } else { lhs + rhs };
        let mut f = QFrac { num, den };
        f.normalize();
        f
    }

    pub fn mul_poly(&self, p: &Poly) -> QFrac {
        let mut f = QFrac {
            num: &self.num * p,
            den: self.den.clone(),
        };
        f.normalize();
        f
    }

    /// `q -> q^k` in numerator and denominator (`k >= 1`).
    pub fn rescale_q(&self, k: u32) -> QFrac {
        assert!(k >= 1, "q -> 1 collapses (1 - q^i) denominators");
        let mut den = BTreeMap::new();
        for (&i, &m) in &self.den {
            *den.entry(i.checked_mul(k).expect("exponent overflow"))
                .or_insert(0) += m;
        }
        let mut f = QFrac {
            num: self.num.rescale_q(k),
            den,
        };
        f.normalize();
        f
    }

    /// Substitution in the numerator. A binding for `q` must be a pure power
    /// `q^k` (`k >= 1`) so the denominator keeps its shape.
    pub fn substitute(&self, sub: &Substitution) -> Result<QFrac, SeriesError> {
        let Some(target) = sub.get(Var::Q) else {
            let mut f = QFrac {
                num: self.num.substitute(sub),
                den: self.den.clone(),
            };
            f.normalize();
            return Ok(f);
        };
        let k = pure_q_power(target).ok_or(SeriesError::UnsupportedSubstitution)?;
        let scaled = self.rescale_q(k);
        let mut rest = Substitution::new();
        for v in [Var::A, Var::B] {
            if let Some(p) = sub.get(v) {
                rest = rest.with(v, p.clone());
            }
        }
        let mut f = QFrac {
            num: scaled.num.substitute(&rest),
            den: scaled.den,
        };
        f.normalize();
        Ok(f)
    }
}

fn pure_q_power(p: &Poly) -> Option<u32> {
    if p.len() != 1 {
        return None;
    }
    let (m, c) = p.leading_term()?;
    let [eq, ea, eb] = m.exponents();
    (*c == 1.into() && ea == 0 && eb == 0 && eq >= 1).then_some(eq)
}

impl From<Poly> for QFrac {
    fn from(num: Poly) -> Self {
        QFrac {
            num,
            den: BTreeMap::new(),
        }
    }
}

impl PartialEq for QFrac {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        let den = self.common_den(other);
        self.numerator_over(&den) == other.numerator_over(&den)
    }
}

impl Eq for QFrac {}

impl fmt::Display for QFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / (", self.num)?;
        for (n, (i, m)) in self.den.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            if *i == 1 {
                f.write_str("(1 - q)")?;
            } else {
                write!(f, "(1 - q^{i})")?;
            }
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        f.write_str(")")
    }
}

impl Add<&QFrac> for &QFrac {
    type Output = QFrac;
    fn add(self, rhs: &QFrac) -> QFrac {
        self.combine(rhs, false)
    }
}

impl Sub<&QFrac> for &QFrac {
    type Output = QFrac;
    fn sub(self, rhs: &QFrac) -> QFrac {
        self.combine(rhs, true)
    }
}

impl Mul<&QFrac> for &QFrac {
    type Output = QFrac;
    fn mul(self, rhs: &QFrac) -> QFrac {
        let mut den = self.den.clone();
        for (&i, &m) in &rhs.den {
            *den.entry(i).or_insert(0) += m;
        }
        let mut f = QFrac {
            num: &self.num * &rhs.num,
            den,
        };
        f.normalize();
        f
    }
}

impl Neg for &QFrac {
    type Output = QFrac;
    fn neg(self) -> QFrac {
        QFrac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}
