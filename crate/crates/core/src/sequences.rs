//! Recurrence generators for every sequence and triangle, independent of the
//! series constructions so the two routes can check each other.
//!
//! Each `*_seq(upto)` builds the whole prefix `0..=upto` in a local table; the
//! single-index functions are thin wrappers. Nothing is cached across calls, so
//! concurrent callers never share mutable state.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::polyring::{qbinom, qrising, Monomial, Poly};

fn q_pow(e: usize) -> Monomial {
    Monomial::new(u32::try_from(e).expect("exponent overflow"), 0, 0)
}

/// Lower-triangular table; row `n` holds entries `k = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<Poly>>,
}

impl Triangle {
    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[Poly] {
        &self.rows[n]
    }

    pub fn get(&self, n: usize, k: usize) -> &Poly {
        &self.rows[n][k]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Carlitz–Riordan q-Catalan numbers: `C_n = sum_{k<n} q^k C_k C_{n-1-k}`, `C_0 = 1`.
pub fn qcatalan_seq(upto: usize) -> Vec<Poly> {
    let mut c: Vec<Poly> = vec![Poly::one()];
    for n in 1..=upto {
        let next = (0..n)
            .map(|k| (&c[k] * &c[n - 1 - k]).mul_monomial(&q_pow(k)))
            .sum();
        c.push(next);
    }
    c
}

pub fn qcatalan(n: usize) -> Poly {
    qcatalan_seq(n).swap_remove(n)
}

/// q-Narayana polynomials: `C_n = a C_{n-1} + b sum_{k<n} q^k C_k C_{n-1-k}`.
pub fn qnarayana_seq(upto: usize) -> Vec<Poly> {
    let (a, b) = (Poly::a(), Poly::b());
    let mut c: Vec<Poly> = vec![Poly::one()];
    for n in 1..=upto {
        let conv: Poly = (0..n)
            .map(|k| (&c[k] * &c[n - 1 - k]).mul_monomial(&q_pow(k)))
            .sum();
        c.push(&a * &c[n - 1] + &b * conv);
    }
    c
}

pub fn qnarayana_poly(n: usize) -> Poly {
    qnarayana_seq(n).swap_remove(n)
}

/// `N(n, k, q)`, the coefficients of `C_n(a, b, q)` in the basis
/// `(a ∔ b)^k b^{n-k}`.
///
/// The basis element for `k` is the only one reaching `a^k b^{n-k}` among
/// those with index `>= k`, so the entries come out by peeling from `k = n`
/// down. Reading the basis with the dotted product is what makes
/// `N(n, k, 0) = binom(n-1, k-1)` and reproduces the known table (which has
/// negative entries such as `N(5, 2) = 4 + 6q + q^2 - q^3`); at `q = 1` the
/// basis is `(a+b)^k b^{n-k}`.
pub fn narayana_triangle(rows: usize) -> Triangle {
    let polys = qnarayana_seq(rows.saturating_sub(1));
    Triangle {
        rows: polys
            .iter()
            .take(rows)
            .enumerate()
            .map(|(n, c)| dotted_coordinates(c, n as u32))
            .collect(),
    }
}

/// The dotted basis element `(a ∔ b)^k b^{n-k}`.
pub fn narayana_basis(n: u32, k: u32) -> Poly {
    qrising(&Poly::a(), &Poly::b(), k) * Poly::b().pow(n - k)
}

fn dotted_coordinates(c: &Poly, n: u32) -> Vec<Poly> {
    let mut rem = c.clone();
    let mut row = vec![Poly::zero(); n as usize + 1];
    for k in (0..=n).rev() {
        let coeff = rem.coeff_ab(k, n - k);
        if !coeff.is_zero() {
            rem -= &(&coeff * &narayana_basis(n, k));
            row[k as usize] = coeff;
        }
    }
    debug_assert!(rem.is_zero(), "C_n is not homogeneous of degree n");
    row
}

/// `C*_n(a, b, q)`: `C*_n = a C*_{n-1} + b sum_{k<=n-2} q^k C*_k C*_{n-1-k}`, `C*_0 = 1`.
pub fn cstar_seq(upto: usize) -> Vec<Poly> {
    let (a, b) = (Poly::a(), Poly::b());
    let mut c: Vec<Poly> = vec![Poly::one()];
    for n in 1..=upto {
        let conv: Poly = (0..n.saturating_sub(1))
            .map(|k| (&c[k] * &c[n - 1 - k]).mul_monomial(&q_pow(k)))
            .sum();
        c.push(&a * &c[n - 1] + &b * conv);
    }
    c
}

pub fn cstar(n: usize) -> Poly {
    cstar_seq(n).swap_remove(n)
}

/// `N*(n, k, q)`, the coefficient of `a^k b^{n-k}` in `C*_n`. Column 0 is kept
/// (zero for `n >= 1`).
pub fn nstar_triangle(rows: usize) -> Triangle {
    let polys = cstar_seq(rows.saturating_sub(1));
    Triangle {
        rows: polys
            .iter()
            .take(rows)
            .enumerate()
            .map(|(n, c)| (0..=n as u32).map(|k| c.coeff_ab(k, n as u32 - k)).collect())
            .collect(),
    }
}

/// q-Motzkin numbers from `M(z) = 1 + z M(z) + q z^2 M(z) M(qz)`:
/// `M_n = M_{n-1} + sum_{i+j=n-2} q^{j+1} M_i M_j`.
pub fn qmotzkin_seq(upto: usize) -> Vec<Poly> {
    let mut m: Vec<Poly> = vec![Poly::one()];
    for n in 1..=upto {
        let mut next = m[n - 1].clone();
        if n >= 2 {
            for j in 0..=n - 2 {
                next += &(&m[n - 2 - j] * &m[j]).mul_monomial(&q_pow(j + 1));
            }
        }
        m.push(next);
    }
    m
}

pub fn qmotzkin(n: usize) -> Poly {
    qmotzkin_seq(n).swap_remove(n)
}

/// Rogers–Szegő polynomials by the three-term recurrence
/// `r_n = (a+b) r_{n-1} + ab (q^{n-1} - 1) r_{n-2}`.
pub fn rogers_szego_seq(upto: usize) -> Vec<Poly> {
    let ab_sum = Poly::a() + Poly::b();
    let ab = Poly::a() * Poly::b();
    let mut r: Vec<Poly> = vec![Poly::one()];
    for n in 1..=upto {
        let mut next = &ab_sum * &r[n - 1];
        if n >= 2 {
            let factor = &ab * &(Poly::q_pow(n as u32 - 1) - Poly::one());
            next += &(&factor * &r[n - 2]);
        }
        r.push(next);
    }
    r
}

pub fn rogers_szego(n: usize) -> Poly {
    rogers_szego_seq(n).swap_remove(n)
}

/// `sum_k [n k] a^k b^{n-k}`, the defining sum, for cross-checking the recurrence.
pub fn rogers_szego_by_definition(n: u32) -> Poly {
    (0..=n)
        .map(|k| qbinom(n, i64::from(k)) * Poly::a().pow(k) * Poly::b().pow(n - k))
        .sum()
}

/// q-Gould polynomials `G(k, n, r)` for a fixed `r`.
///
/// Uses the telescoped form `G(k, n, r) = sum_{m<n} q^m G(k-1, m+r, r)` with
/// `G(0, n, r) = 1`. Entries are filled level by level on demand.
#[derive(Clone, Debug)]
pub struct GouldTable {
    r: u32,
    levels: Vec<BTreeMap<u32, Poly>>,
}

impl GouldTable {
    pub fn new(r: u32) -> Self {
        GouldTable {
            r,
            levels: Vec::new(),
        }
    }

    pub fn get(&mut self, k: u32, n: u32) -> Poly {
        if k == 0 {
            return Poly::one();
        }
        if n == 0 {
            return Poly::zero();
        }
        let ku = k as usize;
        if self.levels.len() < ku {
            self.levels.resize(ku, BTreeMap::new());
        }
        if let Some(p) = self.levels[ku - 1].get(&n) {
            return p.clone();
        }
        // Extend the running sum from the largest cached n' < n.
        let (start, mut acc) = match self.levels[ku - 1].range(..n).next_back() {
            Some((&m, p)) => (m, p.clone()),
            None => (0, Poly::zero()),
        };
        for m in start..n {
            let inner = self.get(k - 1, m + self.r);
            acc += &inner.mul_monomial(&Monomial::new(m, 0, 0));
            self.levels[ku - 1].insert(m + 1, acc.clone());
        }
        acc
    }
}

pub fn gould(k: u32, n: u32, r: u32) -> Poly {
    GouldTable::new(r).get(k, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{binomial, tri};
    use crate::polyring::{Substitution, Var};
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> Poly {
        Poly::from_q_coeffs(c.iter().copied())
    }

    #[test]
    fn qcatalan_values() {
        let c = qcatalan_seq(4);
        assert_eq!(
            c,
            [
                p(&[1]),
                p(&[1]),
                p(&[1, 1]),
                p(&[1, 2, 1, 1]),
                p(&[1, 3, 3, 3, 2, 1, 1])
            ]
        );
        assert_eq!(qcatalan(0), Poly::one());
    }

    #[test]
    fn qnarayana_values() {
        let (a, b) = (Poly::a(), Poly::b());
        let c = qnarayana_seq(5);
        assert_eq!(c[1], &a + &b);
        assert_eq!(c[2], a.pow(2) + p(&[2, 1]) * &a * &b + p(&[1, 1]) * b.pow(2));
        for (n, cn) in c.iter().enumerate() {
            assert_eq!(cn.at_q(0), (&a + &b).pow(n as u32));
        }
    }

    #[test]
    fn narayana_triangle_matches_table() {
        let t = narayana_triangle(6);
        assert_eq!(t.row(0), [p(&[1])]);
        assert_eq!(t.row(3), [p(&[]), p(&[1]), p(&[2, 1]), p(&[1])]);
        assert_eq!(t.row(4), [p(&[]), p(&[1]), p(&[3, 3]), p(&[3, 2, 1]), p(&[1])]);
        assert_eq!(t.get(5, 2), &p(&[4, 6, 1, -1]));
        assert_eq!(t.get(5, 3), &p(&[6, 8, 5, 1]));
        assert_eq!(t.get(5, 4), &p(&[4, 3, 2, 1]));
        for n in 0..6 {
            let back: Poly = (0..=n)
                .map(|k| t.get(n, k) * narayana_basis(n as u32, k as u32))
                .sum();
            assert_eq!(back, qnarayana_poly(n));
        }
        for n in 1..6 {
            for k in 0..=n {
                let expect = binomial(n as i64 - 1, k as i64 - 1);
                assert_eq!(t.get(n, k).at_q(0), Poly::constant(expect));
            }
        }
    }

    #[test]
    fn cstar_values() {
        let (a, b) = (Poly::a(), Poly::b());
        let c = cstar_seq(4);
        assert_eq!(c[1], a);
        assert_eq!(c[2], &a * &b + a.pow(2));
        assert_eq!(c[3], &a * b.pow(2) + p(&[2, 1]) * a.pow(2) * &b + a.pow(3));
        let pg = Substitution::new().with(Var::A, Poly::one());
        assert_eq!(c[3].substitute(&pg), Poly::one() + p(&[2, 1]) * &b + b.pow(2));
    }

    #[test]
    fn nstar_table_and_symmetry() {
        let t = nstar_triangle(6);
        assert_eq!(t.row(4), [p(&[]), p(&[1]), p(&[3, 2, 1]), p(&[3, 2, 1]), p(&[1])]);
        assert_eq!(t.get(5, 3), &p(&[6, 6, 5, 2, 1]));
        for n in 1..6 {
            for k in 1..=n {
                assert_eq!(t.get(n, k), t.get(n, n - k + 1));
            }
        }
    }

    #[test]
    fn motzkin_values() {
        let m = qmotzkin_seq(5);
        assert_eq!(m[2], p(&[1, 1]));
        assert_eq!(m[3], p(&[1, 2, 1]));
        assert_eq!(m[4], p(&[1, 3, 3, 1, 1]));
        assert_eq!(m[5], p(&[1, 4, 6, 4, 3, 2, 1]));
        // q = 1 gives the Motzkin numbers
        let ints: Vec<BigInt> = m.iter().map(|x| x.at_q(1).as_constant().unwrap()).collect();
        assert_eq!(ints, [1, 1, 2, 4, 9, 21].map(BigInt::from));
    }

    #[test]
    fn rogers_szego_routes_agree() {
        let r = rogers_szego_seq(8);
        for (n, rn) in r.iter().enumerate() {
            assert_eq!(rn, &rogers_szego_by_definition(n as u32));
        }
        let gauss = Substitution::new()
            .with(Var::A, Poly::one())
            .with(Var::B, Poly::constant(-1));
        assert_eq!(r[3].substitute(&gauss), Poly::zero());
        assert_eq!(r[2].substitute(&gauss), p(&[1, -1]));
    }

    #[test]
    fn gould_special_values() {
        for k in 0..6u32 {
            for n in 0..6u32 {
                assert_eq!(
                    gould(k, n, 0),
                    qbinom(n, i64::from(k)).mul_monomial(&Monomial::new(tri(k), 0, 0))
                );
                let top = (n + k).saturating_sub(1);
                let expect = if n == 0 && k > 0 {
                    Poly::zero()
                } else {
                    qbinom(top, i64::from(k))
                };
                assert_eq!(gould(k, n, 1), expect, "G({k},{n},1)");
            }
        }
        assert_eq!(gould(3, 1, 2), qcatalan(3));
    }
}
