//! q-binomials, dotted rising products and friends.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{Monomial, Poly};

/// `binom(n, 2)`, the exponent that keeps showing up in `q^{binom(k,2)}`.
pub fn tri(n: u32) -> u32 {
    u32::try_from(u64::from(n) * u64::from(n.saturating_sub(1)) / 2).expect("exponent overflow")
}

/// Integer binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Gaussian binomial `[n k]` via the q-Pascal rule `[n k] = [n-1 k-1] + q^k [n-1 k]`.
/// Zero for `k < 0` or `k > n`.
pub fn qbinom(n: u32, k: i64) -> Poly {
    if k < 0 || k > i64::from(n) {
        return Poly::zero();
    }
    let k = k as usize;
    // dense coefficient rows in q; row[j] = [m j]
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for m in 1..=n as usize {
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(m + 1);
        for j in 0..=m.min(k) {
            let deg = j * (m - j);
            let mut c = vec![BigInt::zero(); deg + 1];
            if j >= 1 {
                for (e, x) in row[j - 1].iter().enumerate() {
                    c[e] += x;
                }
            }
            if j < m {
                for (e, x) in row[j].iter().enumerate() {
                    c[e + j] += x;
                }
            }
            next.push(c);
        }
        row = next;
    }
    Poly::from_q_coeffs(row.swap_remove(k))
}

/// `[m r]` extended to `m = -1`: one when `r = 0`, zero for `r < 0` or `r > m`.
///
/// The explicit orthogonal-polynomial sums reach `[-1 0]` at their corner
/// index; this is the only extension they need.
pub fn qbinom_ext(m: i64, r: i64) -> Poly {
    if r == 0 && m >= -1 {
        return Poly::one();
    }
    if m < 0 || r < 0 || r > m {
        return Poly::zero();
    }
    qbinom(u32::try_from(m).expect("exponent overflow"), r)
}

/// `(x ∔ y)^k = (x + y)(x + q y)...(x + q^{k-1} y)`.
pub fn qrising(x: &Poly, y: &Poly, k: u32) -> Poly {
    (0..k)
        .map(|i| x + &y.mul_monomial(&Monomial::new(i, 0, 0)))
        .product()
}

/// `(1 - q)(1 - q^2)...(1 - q^k)`.
pub fn q_pochhammer(k: u32) -> Poly {
    (1..=k).fold(Poly::one(), |acc, i| acc.mul_one_minus_q_pow(i))
}

/// `sum_{i=0}^{d} x^i y^{d-i}`, the division-free form of `(x^{d+1} - y^{d+1}) / (x - y)`.
pub fn complete_homogeneous(x: &Poly, y: &Poly, d: u32) -> Poly {
    (0..=d).map(|i| x.pow(i) * y.pow(d - i)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Var;

    /// Independent oracle: the product formula prod (1-q^{n-i}) / (1-q^{i+1})
    /// evaluated with repeated exact division.
    fn qbinom_by_products(n: u32, k: u32) -> Poly {
        let mut num = Poly::one();
        for i in 0..k {
            num = num.mul_one_minus_q_pow(n - i);
        }
        for i in 0..k {
            num = num.div_one_minus_q_pow(i + 1).unwrap();
        }
        num
    }

    #[test]
    fn qbinom_values() {
        assert_eq!(qbinom(5, 0), Poly::one());
        assert_eq!(qbinom(0, 0), Poly::one());
        assert_eq!(qbinom(2, 1), Poly::from_q_coeffs([1, 1]));
        assert_eq!(qbinom(4, 2), Poly::from_q_coeffs([1, 1, 2, 1, 1]));
        assert_eq!(qbinom(3, -1), Poly::zero());
        assert_eq!(qbinom(3, 4), Poly::zero());
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(qbinom(n, k as i64), qbinom_by_products(n, k), "[{n} {k}]");
            }
        }
    }

    #[test]
    fn qbinom_symmetry_and_q1() {
        for n in 0..=12u32 {
            for k in 0..=n {
                let p = qbinom(n, i64::from(k));
                assert_eq!(p, qbinom(n, i64::from(n - k)));
                assert_eq!(
                    p.at_q(1).as_constant().unwrap(),
                    binomial(i64::from(n), i64::from(k))
                );
            }
        }
    }

    #[test]
    fn extended_qbinom() {
        assert_eq!(qbinom_ext(-1, 0), Poly::one());
        assert_eq!(qbinom_ext(-1, -1), Poly::zero());
        assert_eq!(qbinom_ext(-1, 1), Poly::zero());
        assert_eq!(qbinom_ext(4, 2), qbinom(4, 2));
    }

    #[test]
    fn rising_products() {
        let (a, b, q) = (Poly::a(), Poly::b(), Poly::q());
        assert_eq!(qrising(&a, &b, 0), Poly::one());
        assert_eq!(
            qrising(&a, &b, 2),
            a.pow(2) + (Poly::one() + &q) * &a * &b + &q * b.pow(2)
        );
        for k in 0..8 {
            assert_eq!(qrising(&Poly::zero(), &Poly::one(), k), Poly::q_pow(tri(k)));
        }
    }

    #[test]
    fn homogeneous_sum_is_divided_difference() {
        let (a, b) = (Poly::a(), Poly::b());
        for d in 0..6 {
            let lhs = complete_homogeneous(&a, &b, d) * (&a - &b);
            assert_eq!(lhs, a.pow(d + 1) - b.pow(d + 1));
        }
        assert!(complete_homogeneous(&a, &b, 3).is_free_of(Var::Q));
    }

    #[test]
    fn tri_values() {
        assert_eq!((0..7).map(tri).collect::<Vec<_>>(), [0, 0, 1, 3, 6, 10, 15]);
    }
}
