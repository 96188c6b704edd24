//! Truncated power series in `z` with [`QFrac`] coefficients, and the
//! generating functions built from q-exponential ratios.

use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::SeriesError;
use crate::polyring::{qbinom, qrising, tri, Poly, QFrac, Substitution};

/// Coefficients of `z^0 .. z^{order-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<QFrac>,
}

impl Series {
    pub fn new(coeffs: Vec<QFrac>) -> Self {
        Series { coeffs }
    }

    pub fn from_polys(coeffs: impl IntoIterator<Item = Poly>) -> Self {
        Series {
            coeffs: coeffs.into_iter().map(QFrac::from).collect(),
        }
    }

    pub fn constant(c: Poly, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        if order > 0 {
            coeffs.push(QFrac::from(c));
        }
        coeffs.resize(order, QFrac::zero());
        Series { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Poly::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &QFrac {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[QFrac] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series {
            coeffs: self.coeffs[..order.min(self.order())].to_vec(),
        }
    }

    /// Coefficients as polynomials; fails at the first coefficient with a
    /// residual denominator.
    pub fn to_polys(&self) -> Result<Vec<Poly>, SeriesError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                c.as_poly()
                    .cloned()
                    .ok_or(SeriesError::DenominatorResidue { index })
            })
            .collect()
    }

    /// Index of the first differing coefficient over the common order.
    pub fn first_mismatch(&self, other: &Series) -> Option<usize> {
        self.coeffs.iter().zip(&other.coeffs).position(|(x, y)| x != y)
    }

    /// `z -> q^r z`: coefficient `k` picks up `q^{rk}`.
    pub fn scale_z(&self, r: u32) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    let e = r.checked_mul(k as u32).expect("exponent overflow");
                    c.mul_poly(&Poly::q_pow(e))
                })
                .collect(),
        }
    }

    /// `z -> factor * z`.
    pub fn subst_z(&self, factor: &Poly) -> Series {
        let mut power = Poly::one();
        let mut coeffs = Vec::with_capacity(self.order());
        for c in &self.coeffs {
            coeffs.push(c.mul_poly(&power));
            power = &power * factor;
        }
        Series { coeffs }
    }

    /// Multiplication by `z`, keeping the order.
    pub fn mul_z(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.order());
        if self.order() > 0 {
            coeffs.push(QFrac::zero());
            coeffs.extend(self.coeffs[..self.order() - 1].iter().cloned());
        }
        Series { coeffs }
    }

    pub fn mul_poly(&self, p: &Poly) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.mul_poly(p)).collect(),
        }
    }

    pub fn substitute(&self, sub: &Substitution) -> Result<Series, SeriesError> {
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.substitute(sub))
                .collect::<Result<_, _>>()?,
        })
    }

    /// Quotient `self / divisor`; the divisor must have constant term 1.
    pub fn div(&self, divisor: &Series) -> Result<Series, SeriesError> {
        let order = self.order().min(divisor.order());
        if order == 0 {
            return Ok(Series::new(Vec::new()));
        }
        if divisor.coeffs[0] != QFrac::one() {
            return Err(SeriesError::NonUnitConstantTerm);
        }
        let mut out: Vec<QFrac> = Vec::with_capacity(order);
        for n in 0..order {
            let mut c = self.coeffs[n].clone();
            for k in 1..=n {
                if divisor.coeffs[k].is_zero() || out[n - k].is_zero() {
                    continue;
                }
                c = &c - &(&divisor.coeffs[k] * &out[n - k]);
            }
            out.push(c);
        }
        Ok(Series { coeffs: out })
    }
}

impl Add<&Series> for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub<&Series> for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Mul<&Series> for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let coeffs = (0..order)
            .map(|n| {
                let mut acc = QFrac::zero();
                for k in 0..=n {
                    let (x, y) = (&self.coeffs[k], &rhs.coeffs[n - k]);
                    if !x.is_zero() && !y.is_zero() {
                        acc = &acc + &(x * y);
                    }
                }
                acc
            })
            .collect();
        Series { coeffs }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Generalized q-exponential `E_r(z) = sum_k q^{r binom(k,2)} z^k / ((1-q)...(1-q^k))`.
///
/// The exponent scales with `r`. With an `r`-independent `q^{binom(k,2)}`
/// the functional equation `E_r(z) - E_r(qz) = z E_r(q^r z)` fails for
/// `r != 1`, and `h(z, 0, 1)` would not reduce to `E_2(-z)`.
pub fn q_exponential(r: u32, order: usize) -> Series {
    Series {
        coeffs: (0..order as u32)
            .map(|k| {
                let e = r.checked_mul(tri(k)).expect("exponent overflow");
                QFrac::over_q_pochhammer(Poly::q_pow(e), k)
            })
            .collect(),
    }
}

/// q-Gould generating function `G_r(z, n) = E_r(-q^n z) / E_r(-z)`.
pub fn gould_series(r: u32, n: u32, order: usize) -> Result<Series, SeriesError> {
    let e = q_exponential(r, order);
    let minus_one = Poly::constant(-1);
    let num = e.subst_z(&(-Poly::q_pow(n)));
    let quot = num.div(&e.subst_z(&minus_one))?;
    quot.to_polys()?;
    Ok(quot)
}

/// `h(z, a, b) = sum_k (-1)^k q^{binom(k,2)} (a ∔ b)^k z^k / ((1-q)...(1-q^k))`.
///
/// The denominator is the q-Pochhammer product `(1-q)...(1-q^k)`; it is the
/// reading under which `h(z, 0, 1) = E_2(-z)`.
pub fn h_series(a: &Poly, b: &Poly, order: usize) -> Series {
    signed_exponential(order, |k| qrising(a, b, k))
}

/// `h*(z, a, b)`: as [`h_series`] with the Rogers–Szegő polynomial
/// `r_k(a, b) = sum_j [k j] a^j b^{k-j}` in place of `(a ∔ b)^k`.
pub fn hstar_series(a: &Poly, b: &Poly, order: usize) -> Series {
    signed_exponential(order, |k| {
        (0..=k)
            .map(|j| qbinom(k, i64::from(j)) * a.pow(j) * b.pow(k - j))
            .sum()
    })
}

fn signed_exponential(order: usize, numerator: impl Fn(u32) -> Poly) -> Series {
    Series {
        coeffs: (0..order as u32)
            .map(|k| {
                let mut num = numerator(k).mul_monomial(&crate::Monomial::new(tri(k), 0, 0));
                if k % 2 == 1 {
                    num = -num;
                }
                QFrac::over_q_pochhammer(num, k)
            })
            .collect(),
    }
}

/// The ratio generating functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RatioKind {
    /// `f(z) = E_2(-qz) / E_2(-z)`, the q-Catalan numbers.
    FCatalan,
    /// `f(z, a, b) = h(qz) / h(z)`, the q-Narayana polynomials.
    FNarayana,
    /// `f*(z, a, b) = h*(qz) / h*(z)`.
    FStar,
    /// `F(z, a, b) = 1 + a z f*(z, a, b)`, generating `C*_n`.
    CapitalF,
    /// `g`, defined by `f(z) = 1 + (a + b) z g(z / q)`.
    G,
}

/// Builds one of the ratio series to the given order; every coefficient is
/// checked to be a polynomial.
pub fn ratio_series(kind: RatioKind, a: &Poly, b: &Poly, order: usize) -> Result<Series, SeriesError> {
    let s = match kind {
        RatioKind::FCatalan => {
            let e = q_exponential(2, order);
            let minus_one = Poly::constant(-1);
            e.subst_z(&-Poly::q()).div(&e.subst_z(&minus_one))?
        }
        RatioKind::FNarayana => {
            let h = h_series(a, b, order);
            h.scale_z(1).div(&h)?
        }
        RatioKind::FStar => {
            let h = hstar_series(a, b, order);
            h.scale_z(1).div(&h)?
        }
        RatioKind::CapitalF => {
            let fstar = ratio_series(RatioKind::FStar, a, b, order)?;
            &Series::one(order) + &fstar.mul_poly(a).mul_z()
        }
        RatioKind::G => {
            // g_n = q^n C_{n+1} / (a + b)
            let f = ratio_series(RatioKind::FNarayana, a, b, order + 1)?.to_polys()?;
            let ab = a + b;
            let coeffs = (0..order)
                .map(|n| {
                    let shifted = f[n + 1].mul_monomial(&crate::Monomial::new(n as u32, 0, 0));
                    shifted.exact_div(&ab).map(QFrac::from)
                })
                .collect::<Result<Vec<_>, _>>()?;
            Series { coeffs }
        }
    };
    s.to_polys()?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_q_coeffs(coeffs.iter().copied())
    }

    #[test]
    fn geometric_series() {
        let one_minus_z = Series::from_polys([
            Poly::one(),
            Poly::constant(-1),
            Poly::zero(),
            Poly::zero(),
            Poly::zero(),
        ]);
        let g = Series::one(5).div(&one_minus_z).unwrap();
        assert_eq!(g.to_polys().unwrap(), vec![Poly::one(); 5]);
        let u = Series::from_polys([Poly::one(), Poly::a(), Poly::q()]);
        assert_eq!(u.div(&u).unwrap(), Series::one(3));
        let bad = Series::from_polys([Poly::constant(2), Poly::one()]);
        assert_eq!(u.div(&bad), Err(SeriesError::NonUnitConstantTerm));
    }

    #[test]
    fn scale_z_definition() {
        let s = Series::from_polys([Poly::a(), Poly::b(), Poly::one()]);
        assert_eq!(
            s.scale_z(1),
            Series::from_polys([Poly::a(), Poly::q() * Poly::b(), Poly::q_pow(2)])
        );
        assert_eq!(s.scale_z(2), s.subst_z(&Poly::q_pow(2)));
    }

    #[test]
    fn mixed_orders_truncate() {
        let x = Series::one(5);
        let y = Series::one(3);
        assert_eq!((&x * &y).order(), 3);
        assert_eq!((&x + &y).order(), 3);
    }

    #[test]
    fn exponential_functional_equation() {
        for r in 0..=3 {
            let e = q_exponential(r, 9);
            assert_eq!(e.coeff(0), &QFrac::one());
            let lhs = &e - &e.scale_z(1);
            let rhs = e.scale_z(r).mul_z();
            assert_eq!(lhs, rhs, "r = {r}");
        }
        assert_eq!(
            q_exponential(2, 3).coeff(2),
            &QFrac::new(Poly::q_pow(2), [(1, 1), (2, 1)])
        );
    }

    #[test]
    fn gould_series_basics() {
        for r in 0..=3 {
            assert_eq!(gould_series(r, 0, 6).unwrap(), Series::one(6));
            for n in 1..4 {
                assert_eq!(gould_series(r, n, 6).unwrap().coeff(0), &QFrac::one());
            }
        }
        let g = gould_series(2, 1, 5).unwrap().to_polys().unwrap();
        assert_eq!(g[3], p(&[1, 2, 1, 1]));
    }

    #[test]
    fn h_reduces_to_e2() {
        let h = h_series(&Poly::zero(), &Poly::one(), 8);
        assert_eq!(h, q_exponential(2, 8).subst_z(&Poly::constant(-1)));
    }

    #[test]
    fn h_functional_equations() {
        let (a, b) = (Poly::a(), Poly::b());
        let h = h_series(&a, &b, 7);
        let lhs = &h - &h.scale_z(1);
        let rhs = -&(&h.scale_z(1).mul_z().mul_poly(&a) + &h.scale_z(2).mul_z().mul_poly(&b));
        assert_eq!(lhs, rhs);

        // orientation h*(z) - h*(qz), the one that yields f* = 1 + (a+b)zf* + qabz^2 f* f*(qz)
        let hs = hstar_series(&a, &b, 7);
        let lhs = &hs - &hs.scale_z(1);
        let rhs = -&(&hs.scale_z(1).mul_z().mul_poly(&(&a + &b))
            + &hs.scale_z(2).mul_z().mul_z().mul_poly(&(Poly::q() * &a * &b)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ratio_values() {
        let (a, b) = (Poly::a(), Poly::b());
        let f = ratio_series(RatioKind::FCatalan, &a, &b, 5)
            .unwrap()
            .to_polys()
            .unwrap();
        assert_eq!(
            f,
            vec![
                p(&[1]),
                p(&[1]),
                p(&[1, 1]),
                p(&[1, 2, 1, 1]),
                p(&[1, 3, 3, 3, 2, 1, 1])
            ]
        );
        let f = ratio_series(RatioKind::FNarayana, &a, &b, 3)
            .unwrap()
            .to_polys()
            .unwrap();
        assert_eq!(f[2], a.pow(2) + p(&[2, 1]) * &a * &b + p(&[1, 1]) * b.pow(2));
        let big_f = ratio_series(RatioKind::CapitalF, &a, &b, 3)
            .unwrap()
            .to_polys()
            .unwrap();
        assert_eq!(big_f[0], Poly::one());
        assert_eq!(big_f[1], a);
        assert_eq!(big_f[2], &a * &b + a.pow(2));
        let g = ratio_series(RatioKind::G, &a, &b, 2).unwrap().to_polys().unwrap();
        assert_eq!(g[0], Poly::one());
    }
}
