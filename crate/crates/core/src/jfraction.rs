//! J-fractions `1 / (1 - s_0 z - t_0 z^2 / (1 - s_1 z - t_1 z^2 / ...))`, their
//! moment sequences, and the monic orthogonal polynomials of the moment
//! functional `F(z^n) = mu_n`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::JFractionError;
use crate::polyring::{qbinom, qbinom_ext, qrising, tri, Monomial, Poly, Substitution};

/// Continued-fraction coefficients. Level `k` carries `s_k` and `t_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JFraction {
    pub s: Vec<Poly>,
    pub t: Vec<Poly>,
}

impl JFraction {
    pub fn new(s: Vec<Poly>, t: Vec<Poly>) -> Self {
        JFraction { s, t }
    }

    /// Number of complete `(s_k, t_k)` levels.
    pub fn depth(&self) -> usize {
        self.s.len().min(self.t.len())
    }

    pub fn truncate(&self, depth: usize) -> JFraction {
        JFraction {
            s: self.s.iter().take(depth).cloned().collect(),
            t: self.t.iter().take(depth).cloned().collect(),
        }
    }

    /// `t_0 t_1 ... t_{n-1}`, the norm `F(p_n^2)` for moments with `mu_0 = 1`.
    pub fn norm(&self, n: usize) -> Poly {
        self.t[..n].iter().cloned().product()
    }

    pub fn substitute(&self, sub: &Substitution) -> JFraction {
        JFraction {
            s: self.s.iter().map(|p| p.substitute(sub)).collect(),
            t: self.t.iter().map(|p| p.substitute(sub)).collect(),
        }
    }
}

/// A polynomial in `z` with [`Poly`] coefficients; index = power of `z`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ZPoly {
    coeffs: Vec<Poly>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn zero() -> Self {
        ZPoly::default()
    }

    pub fn one() -> Self {
        ZPoly::new(vec![Poly::one()])
    }

    /// `z - c`.
    pub fn linear(c: &Poly) -> Self {
        ZPoly::new(vec![-c, Poly::one()])
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Poly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Poly> {
        self.coeffs.last()
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![Poly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                out[i + j] += &(x * y);
            }
        }
        ZPoly::new(out)
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        ZPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &Poly) -> ZPoly {
        ZPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul_z(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Poly::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs }
    }

    pub fn substitute(&self, sub: &Substitution) -> ZPoly {
        ZPoly::new(self.coeffs.iter().map(|c| c.substitute(sub)).collect())
    }
}

impl fmt::Display for ZPoly {
    /// Highest power first, e.g. `z^2 + (-1 - q - q^2)*z + q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            // a lone negative term is written with a minus sign
            let negated = c.len() == 1 && c.terms().all(|(_, v)| v.sign() == num_bigint::Sign::Minus);
            let c = if negated { -c } else { c.clone() };
            match (first, negated) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            let power = match k {
                0 => None,
                1 => Some(alloc::string::String::from("z")),
                _ => Some(alloc::format!("z^{k}")),
            };
            match power {
                None => write!(f, "{c}")?,
                Some(z) if c.is_one() => f.write_str(&z)?,
                Some(z) if c.len() == 1 => write!(f, "{c}*{z}")?,
                Some(z) => write!(f, "({c})*{z}")?,
            }
        }
        Ok(())
    }
}

/// The linear functional `F(z^n) = mu_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentFunctional {
    moments: Vec<Poly>,
}

impl MomentFunctional {
    pub fn new(moments: Vec<Poly>) -> Self {
        MomentFunctional { moments }
    }

    pub fn moments(&self) -> &[Poly] {
        &self.moments
    }

    pub fn apply(&self, p: &ZPoly) -> Result<Poly, JFractionError> {
        functional_apply(self, p)
    }
}

/// `F(p) = sum_i c_i mu_i`.
pub fn functional_apply(fun: &MomentFunctional, p: &ZPoly) -> Result<Poly, JFractionError> {
    if p.coeffs.len() > fun.moments.len() {
        return Err(JFractionError::InsufficientMoments {
            needed: p.coeffs.len(),
            available: fun.moments.len(),
        });
    }
    Ok(p.coeffs
        .iter()
        .zip(&fun.moments)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, m)| c * m)
        .sum())
}

// Truncated power series over Poly, just enough for continued-fraction evaluation.
fn series_inverse(u: &[Poly], order: usize) -> Vec<Poly> {
    debug_assert!(u[0].is_one());
    let mut out: Vec<Poly> = Vec::with_capacity(order);
    for n in 0..order {
        let mut c = if n == 0 { Poly::one() } else { Poly::zero() };
        for k in 1..=n.min(u.len() - 1) {
            if !u[k].is_zero() {
                c -= &(&u[k] * &out[n - k]);
            }
        }
        out.push(c);
    }
    out
}

/// First `n` moments `mu_0 .. mu_{n-1}` of the J-fraction, evaluated bottom-up
/// as truncated power series. Needs `s_k` for `k < n/2` and `t_k` for `k < (n-1)/2`.
pub fn moments_from_jfraction(jf: &JFraction, n: usize) -> Result<Vec<Poly>, JFractionError> {
    let levels = n.div_ceil(2);
    if jf.s.len() < n / 2 || jf.t.len() < n.saturating_sub(1) / 2 {
        return Err(JFractionError::InsufficientDepth {
            needed: n / 2,
            available: jf.depth(),
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut below: Vec<Poly> = vec![Poly::zero(); n];
    for k in (0..levels).rev() {
        // 1 - s_k z - t_k z^2 R_{k+1}
        let mut denom = vec![Poly::zero(); n];
        denom[0] = Poly::one();
        if 2 * k + 1 < n {
            denom[1] = -&jf.s[k];
        }
        if k + 1 < levels {
            for i in 2..n {
                denom[i] = -(&jf.t[k] * &below[i - 2]);
            }
        }
        below = series_inverse(&denom, n);
    }
    Ok(below)
}

/// Recovers `s_k, t_k` for `k < depth` from the moments through the monic
/// three-term recurrence: `s_k = F(z p_k^2) / F(p_k^2)`,
/// `t_k = F(p_{k+1}^2) / F(p_k^2)`. Needs moments `mu_0 .. mu_{2 depth}`.
///
/// Both ratios are invariant under scaling `F`, so moment sequences with
/// `mu_0 != 1` give the J-fraction of the normalized sequence.
pub fn jfraction_from_moments(fun: &MomentFunctional, depth: usize) -> Result<JFraction, JFractionError> {
    let needed = 2 * depth + 1;
    if fun.moments.len() < needed {
        return Err(JFractionError::InsufficientMoments {
            needed,
            available: fun.moments.len(),
        });
    }
    let mut s = Vec::with_capacity(depth);
    let mut t: Vec<Poly> = Vec::with_capacity(depth);
    let mut prev = ZPoly::zero();
    let mut cur = ZPoly::one();
    let mut norm = fun.moments.first().cloned().unwrap_or_default();
    if depth > 0 && norm.is_zero() {
        return Err(JFractionError::Breakdown { level: 0 });
    }
    for k in 0..depth {
        let square = cur.mul(&cur);
        let sk = fun
            .apply(&square.mul_z())?
            .exact_div(&norm)
            .map_err(|_| JFractionError::NotDivisible { level: k })?;
        let mut next = cur.mul(&ZPoly::linear(&sk));
        if k > 0 {
            next = next.sub(&prev.scale(&t[k - 1]));
        }
        let next_norm = fun.apply(&next.mul(&next))?;
        if next_norm.is_zero() {
            return Err(JFractionError::Breakdown { level: k + 1 });
        }
        let tk = next_norm
            .exact_div(&norm)
            .map_err(|_| JFractionError::NotDivisible { level: k })?;
        s.push(sk);
        t.push(tk);
        prev = core::mem::replace(&mut cur, next);
        norm = next_norm;
    }
    Ok(JFraction { s, t })
}

/// J-fraction families with closed-form coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedFamily {
    /// Moments `C_n(a, b, q)`: `s_0 = a + b`, `t_0 = q(a+b)b`,
    /// `s_n = q^n (a + q^{n-1} b + q^n b)`, `t_n = q^{3n+1} b (q^n b + a)`.
    Narayana,
    /// Moments `C*_{n+1} / a` (the series `f*`): `s_k = q^k (a+b)`, `t_k = q^{2k+1} ab`.
    CStarShift1,
    /// Moments `C*_n`: `s_0 = a`, `s_k = q^{k-1} b + q^k a`, `t_k = q^{2k} ab`.
    CStarShift0,
    /// Moments `M_n(q)`: `s_k = q^k`, `t_k = q^{2k+1}` (the `C*` data at `a + b = ab = 1`).
    Motzkin,
}

impl ClosedFamily {
    pub const ALL: [ClosedFamily; 4] = [
        ClosedFamily::Narayana,
        ClosedFamily::CStarShift1,
        ClosedFamily::CStarShift0,
        ClosedFamily::Motzkin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedFamily::Narayana => "narayana",
            ClosedFamily::CStarShift1 => "cstar-shift1",
            ClosedFamily::CStarShift0 => "cstar-shift0",
            ClosedFamily::Motzkin => "motzkin",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        ClosedFamily::ALL.into_iter().find(|f| f.name() == name)
    }
}

fn qm(e: u32) -> Monomial {
    Monomial::new(e, 0, 0)
}

/// Closed-form `s_k, t_k` for `k < depth`.
pub fn closed_jfraction(family: ClosedFamily, depth: usize, a: &Poly, b: &Poly) -> JFraction {
    let ab = a * b;
    let sum = a + b;
    let mut s = Vec::with_capacity(depth);
    let mut t = Vec::with_capacity(depth);
    for k in 0..depth as u32 {
        let (sk, tk) = match family {
            ClosedFamily::Narayana if k == 0 => (sum.clone(), (&sum * b).mul_monomial(&qm(1))),
            ClosedFamily::Narayana => {
                let inner = a + &b.mul_monomial(&qm(k - 1)) + b.mul_monomial(&qm(k));
                let tk = (b * &(b.mul_monomial(&qm(k)) + a)).mul_monomial(&qm(3 * k + 1));
                (inner.mul_monomial(&qm(k)), tk)
            }
            ClosedFamily::CStarShift1 => (sum.mul_monomial(&qm(k)), ab.mul_monomial(&qm(2 * k + 1))),
            ClosedFamily::CStarShift0 if k == 0 => (a.clone(), ab.clone()),
            ClosedFamily::CStarShift0 => (
                b.mul_monomial(&qm(k - 1)) + a.mul_monomial(&qm(k)),
                ab.mul_monomial(&qm(2 * k)),
            ),
            ClosedFamily::Motzkin => (Poly::q_pow(k), Poly::q_pow(2 * k + 1)),
        };
        s.push(sk);
        t.push(tk);
    }
    JFraction { s, t }
}

/// `p_0 .. p_n` from `p_0 = 1`, `p_1 = z - s_0`,
/// `p_k = (z - s_{k-1}) p_{k-1} - t_{k-2} p_{k-2}`.
pub fn orthopolys(jf: &JFraction, n: usize) -> Result<Vec<ZPoly>, JFractionError> {
    if jf.s.len() < n || jf.t.len() + 1 < n {
        return Err(JFractionError::InsufficientDepth {
            needed: n,
            available: jf.s.len().min(jf.t.len() + 1),
        });
    }
    let mut ps = vec![ZPoly::one()];
    for k in 1..=n {
        let mut next = ps[k - 1].mul(&ZPoly::linear(&jf.s[k - 1]));
        if k >= 2 {
            next = next.sub(&ps[k - 2].scale(&jf.t[k - 2]));
        }
        ps.push(next);
    }
    Ok(ps)
}

pub fn orthopoly(jf: &JFraction, n: usize) -> Result<ZPoly, JFractionError> {
    Ok(orthopolys(jf, n)?.swap_remove(n))
}

/// Families with explicit double-sum formulas for `p_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExplicitFamily {
    /// q-Narayana moments, symbolic in `a, b`.
    NarayanaAb,
    /// q-Narayana moments at `(a, b) = (0, 1)`, i.e. the q-Catalan numbers.
    Narayana01,
    /// `C*_{n+1}` moments.
    CStarShift1,
    /// `C*_n` moments.
    CStarShift0,
}

impl ExplicitFamily {
    pub const ALL: [ExplicitFamily; 4] = [
        ExplicitFamily::NarayanaAb,
        ExplicitFamily::Narayana01,
        ExplicitFamily::CStarShift1,
        ExplicitFamily::CStarShift0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExplicitFamily::NarayanaAb => "narayana",
            ExplicitFamily::Narayana01 => "qcatalan",
            ExplicitFamily::CStarShift1 => "cstar-shift1",
            ExplicitFamily::CStarShift0 => "cstar-shift0",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        ExplicitFamily::ALL.into_iter().find(|f| f.name() == name)
    }

    /// The J-fraction whose orthogonal polynomials the formula describes.
    pub fn jfraction(self, depth: usize) -> JFraction {
        let (a, b) = (Poly::a(), Poly::b());
        match self {
            ExplicitFamily::NarayanaAb => closed_jfraction(ClosedFamily::Narayana, depth, &a, &b),
            ExplicitFamily::Narayana01 => {
                closed_jfraction(ClosedFamily::Narayana, depth, &Poly::zero(), &Poly::one())
            }
            ExplicitFamily::CStarShift1 => closed_jfraction(ClosedFamily::CStarShift1, depth, &a, &b),
            ExplicitFamily::CStarShift0 => closed_jfraction(ClosedFamily::CStarShift0, depth, &a, &b),
        }
    }
}

/// Evaluates the explicit formula for `p_n`:
///
/// * `NarayanaAb`: `sum_k (-1)^{n-k} q^{binom(n-k,2)} z^k sum_{j=k}^n
///   q^{binom(n+1,2) - binom(n+k+1-j,2)} [n+k-j k] [j-1 k-1] b^{j-k} (a ∔ b)^{n-j}`,
///   with the dotted product `(a ∔ b)^{n-j}`; the plain power `(a+b)^{n-j}` is
///   already wrong for `n = 2`.
/// * `Narayana01`: `sum_k (-1)^{n-k} q^{2 binom(n-k,2)} [n+k 2k] z^k`. This is
///   `NarayanaAb` at `(a, b) = (0, 1)`; the form with `q^{binom(n-k,2)}` differs
///   from it from `n = 2` on.
/// * `CStarShift1`: `sum_k (-1)^{n-k} q^{binom(n-k,2)} z^k sum_j [n+k-j k] [j k] a^{j-k} b^{n-j}`.
/// * `CStarShift0`: `sum_k (-1)^{n-k} q^{binom(n-k,2)} z^k sum_j [n+k-j k] [j-1 j-k] b^{j-k} a^{n-j}`.
///
/// `[j-1 k-1]` is evaluated as `[j-1 j-k]`, which agrees with it everywhere
/// except the corner `j = k = 0`, where `[-1 0] = 1` is the value the
/// recurrence requires (it supplies the constant term).
pub fn orthopoly_explicit(family: ExplicitFamily, n: usize) -> ZPoly {
    let (a, b) = (Poly::a(), Poly::b());
    let n32 = n as u32;
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n32 {
        let kk = i64::from(k);
        let sign = if (n32 - k) % 2 == 1 { -1 } else { 1 };
        let outer = match family {
            ExplicitFamily::Narayana01 => 2 * tri(n32 - k),
            _ => tri(n32 - k),
        };
        let inner: Poly = match family {
            ExplicitFamily::Narayana01 => qbinom(n32 + k, 2 * kk),
            ExplicitFamily::NarayanaAb => (k..=n32)
                .map(|j| {
                    let jj = i64::from(j);
                    let e = tri(n32 + 1) - tri(n32 + k + 1 - j);
                    (qbinom(n32 + k - j, kk) * qbinom_ext(jj - 1, jj - kk)).mul_monomial(&qm(e))
                        * b.pow(j - k)
                        * qrising(&a, &b, n32 - j)
                })
                .sum(),
            ExplicitFamily::CStarShift1 => (k..=n32)
                .map(|j| qbinom(n32 + k - j, kk) * qbinom(j, kk) * a.pow(j - k) * b.pow(n32 - j))
                .sum(),
            ExplicitFamily::CStarShift0 => (k..=n32)
                .map(|j| {
                    let jj = i64::from(j);
                    qbinom(n32 + k - j, kk) * qbinom_ext(jj - 1, jj - kk) * b.pow(j - k) * a.pow(n32 - j)
                })
                .sum(),
        };
        coeffs.push(inner.mul_monomial(&qm(outer)).scale(&sign.into()));
    }
    ZPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Var;
    use crate::sequences::{cstar_seq, qmotzkin_seq, qnarayana_seq};

    /// Brute-force Motzkin-path oracle: weighted paths from height 0 to 0 with
    /// up steps weight 1, level steps at height h weight s_h, down steps from
    /// h+1 weight t_h.
    fn path_moments(jf: &JFraction, n: usize) -> Vec<Poly> {
        (0..n)
            .map(|len| {
                let mut heights: Vec<Poly> = vec![Poly::one()];
                for _ in 0..len {
                    let mut next = vec![Poly::zero(); heights.len() + 1];
                    for (h, w) in heights.iter().enumerate() {
                        if w.is_zero() {
                            continue;
                        }
                        if h + 1 < jf.s.len() {
                            next[h + 1] += w;
                        }
                        next[h] += &(w * &jf.s[h]);
                        if h > 0 {
                            next[h - 1] += &(w * &jf.t[h - 1]);
                        }
                    }
                    heights = next;
                }
                heights[0].clone()
            })
            .collect()
    }

    #[test]
    fn aerated_catalan() {
        let jf = JFraction::new(vec![Poly::zero(); 5], vec![Poly::one(); 5]);
        let mu = moments_from_jfraction(&jf, 9).unwrap();
        let expect = [1, 0, 1, 0, 2, 0, 5, 0, 14].map(Poly::from);
        assert_eq!(mu, expect);
        assert_eq!(mu, path_moments(&jf, 9));
    }

    #[test]
    fn moments_match_path_oracle() {
        let (a, b) = (Poly::a(), Poly::b());
        for family in ClosedFamily::ALL {
            let jf = closed_jfraction(family, 5, &a, &b);
            assert_eq!(
                moments_from_jfraction(&jf, 9).unwrap(),
                path_moments(&jf, 9),
                "{family:?}"
            );
        }
    }

    #[test]
    fn closed_families_reproduce_sequences() {
        let (a, b) = (Poly::a(), Poly::b());
        let jf = closed_jfraction(ClosedFamily::Narayana, 5, &a, &b);
        assert_eq!(moments_from_jfraction(&jf, 9).unwrap(), qnarayana_seq(8));
        let jf = closed_jfraction(ClosedFamily::CStarShift0, 5, &a, &b);
        assert_eq!(moments_from_jfraction(&jf, 9).unwrap(), cstar_seq(8));
        let jf = closed_jfraction(ClosedFamily::CStarShift1, 5, &a, &b);
        let scaled: Vec<Poly> = moments_from_jfraction(&jf, 9)
            .unwrap()
            .iter()
            .map(|m| m * &a)
            .collect();
        assert_eq!(scaled, cstar_seq(9)[1..].to_vec());
        let jf = closed_jfraction(ClosedFamily::Motzkin, 6, &a, &b);
        assert_eq!(moments_from_jfraction(&jf, 11).unwrap(), qmotzkin_seq(10));
    }

    #[test]
    fn closed_values() {
        let (a, b, q) = (Poly::a(), Poly::b(), Poly::q());
        let jf = closed_jfraction(ClosedFamily::Narayana, 3, &a, &b);
        assert_eq!(jf.s[2], (&a + &q * &b + &q * &q * &b) * &q * &q);
        let jf = closed_jfraction(ClosedFamily::CStarShift1, 4, &a, &b);
        assert_eq!(jf.t[3], Poly::q_pow(7) * &a * &b);
        let jf = closed_jfraction(ClosedFamily::Motzkin, 2, &a, &b);
        assert_eq!((jf.s[1].clone(), jf.t[1].clone()), (q.clone(), Poly::q_pow(3)));
    }

    #[test]
    fn extraction_inverts_evaluation() {
        let (a, b) = (Poly::a(), Poly::b());
        for family in ClosedFamily::ALL {
            let jf = closed_jfraction(family, 4, &a, &b);
            let mu = moments_from_jfraction(&jf, 9).unwrap();
            let back = jfraction_from_moments(&MomentFunctional::new(mu), 4).unwrap();
            assert_eq!(back, jf, "{family:?}");
        }
    }

    #[test]
    fn extraction_errors() {
        let mu = MomentFunctional::new(vec![Poly::one(), Poly::zero()]);
        assert!(matches!(
            jfraction_from_moments(&mu, 2),
            Err(JFractionError::InsufficientMoments { .. })
        ));
        // mu = 1, 1, 1: p_1 = z - 1 has F(p_1^2) = 0.
        let mu = MomentFunctional::new(vec![Poly::one(); 3]);
        assert_eq!(
            jfraction_from_moments(&mu, 1),
            Err(JFractionError::Breakdown { level: 1 })
        );
        // s_0 = 1/2
        let mu = MomentFunctional::new(vec![Poly::constant(2), Poly::one(), Poly::one()]);
        assert_eq!(
            jfraction_from_moments(&mu, 1),
            Err(JFractionError::NotDivisible { level: 0 })
        );
    }

    #[test]
    fn orthopoly_basics() {
        let (a, b) = (Poly::a(), Poly::b());
        let jf = closed_jfraction(ClosedFamily::Narayana, 7, &a, &b);
        let ps = orthopolys(&jf, 6).unwrap();
        assert_eq!(ps[0], ZPoly::one());
        assert_eq!(ps[1], ZPoly::linear(&jf.s[0]));
        for (n, p) in ps.iter().enumerate() {
            assert_eq!(p.degree(), Some(n));
            assert!(p.leading_coeff().unwrap().is_one());
        }
        let fun = MomentFunctional::new(qnarayana_seq(12));
        assert_eq!(fun.apply(&ps[2].mul(&ps[1])).unwrap(), Poly::zero());
        assert_eq!(fun.apply(&ps[0].mul(&ps[0])).unwrap(), Poly::one());
        for n in 0..=5 {
            assert_eq!(fun.apply(&ps[n].mul(&ps[n])).unwrap(), jf.norm(n));
        }
        assert!(matches!(
            orthopoly(&jf, 9),
            Err(JFractionError::InsufficientDepth { .. })
        ));
    }

    #[test]
    fn explicit_formulas_match_recurrence() {
        for family in ExplicitFamily::ALL {
            let ps = orthopolys(&family.jfraction(6), 5).unwrap();
            for (n, p) in ps.iter().enumerate() {
                assert_eq!(&orthopoly_explicit(family, n), p, "{family:?} n={n}");
            }
        }
        let p1 = orthopoly_explicit(ExplicitFamily::Narayana01, 1);
        assert_eq!(p1, ZPoly::linear(&Poly::one()));
        let p1 = orthopoly_explicit(ExplicitFamily::CStarShift1, 1);
        assert_eq!(p1, ZPoly::linear(&(Poly::a() + Poly::b())));
    }

    #[test]
    fn catalan_formula_is_the_general_one_at_zero_one() {
        let at01 = Substitution::new()
            .with(Var::A, Poly::zero())
            .with(Var::B, Poly::one());
        for n in 0..=5 {
            assert_eq!(
                orthopoly_explicit(ExplicitFamily::NarayanaAb, n).substitute(&at01),
                orthopoly_explicit(ExplicitFamily::Narayana01, n)
            );
        }
    }

    #[test]
    fn zpoly_display() {
        let p = ZPoly::new(vec![Poly::q(), -(Poly::one() + Poly::q()), Poly::one()]);
        assert_eq!(alloc::format!("{p}"), "z^2 + (-1 - q)*z + q");
        let p = ZPoly::new(vec![
            -Poly::q_pow(3),
            Poly::zero(),
            -Poly::constant(2) * Poly::a(),
        ]);
        assert_eq!(alloc::format!("{p}"), "-2*a*z^2 - q^3");
        assert_eq!(alloc::format!("{}", ZPoly::linear(&Poly::one())), "z - 1");
    }
}
