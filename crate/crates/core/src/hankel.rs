//! Hankel determinants `det(mu_{i+j+shift})_{i,j=0..n}` and their closed forms.

use alloc::vec::Vec;

use crate::error::HankelError;
use crate::jfraction::JFraction;
use crate::polyring::{complete_homogeneous, tri, Poly};
use crate::sequences::{cstar_seq, qcatalan_seq, qmotzkin_seq, qnarayana_seq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HankelFamily {
    QCatalan,
    Narayana,
    CStar,
    Motzkin,
}

impl HankelFamily {
    pub const ALL: [HankelFamily; 4] = [
        HankelFamily::QCatalan,
        HankelFamily::Narayana,
        HankelFamily::CStar,
        HankelFamily::Motzkin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HankelFamily::QCatalan => "qcatalan",
            HankelFamily::Narayana => "narayana",
            HankelFamily::CStar => "cstar",
            HankelFamily::Motzkin => "motzkin",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        HankelFamily::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Shifts with a closed form.
    pub fn shifts(self) -> &'static [usize] {
        match self {
            HankelFamily::CStar => &[0, 1, 2],
            _ => &[0, 1],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelReport {
    pub family: HankelFamily,
    pub shift: usize,
    pub n: usize,
    pub computed: Poly,
    pub expected: Poly,
    pub matched: bool,
}

/// Determinant by fraction-free Bareiss elimination with row pivoting.
/// Every division is exact.
pub fn determinant(mut m: Vec<Vec<Poly>>) -> Poly {
    let size = m.len();
    if size == 0 {
        return Poly::one();
    }
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..size).find(|&r| !m[r][k].is_zero()) else {
                return Poly::zero();
            };
            m.swap(k, r);
            negate = !negate;
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = core::mem::take(&mut row[k]);
            for j in k + 1..size {
                let mut num = &row[j] * pivot;
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    num -= &(&lead * &pivot_row[j]);
                }
                row[j] = num.exact_div(&prev).expect("Bareiss quotients are exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `det(seq[i+j+shift])_{i,j=0..n}`.
pub fn hankel_det(seq: &[Poly], shift: usize, n: usize) -> Result<Poly, HankelError> {
    let needed = 2 * n + shift + 1;
    if seq.len() < needed {
        return Err(HankelError::InsufficientMoments {
            needed,
            available: seq.len(),
        });
    }
    let matrix = (0..=n)
        .map(|i| (0..=n).map(|j| seq[i + j + shift].clone()).collect())
        .collect();
    Ok(determinant(matrix))
}

/// `(1, 1, 0, -1, -1, 0)` repeated: the Motzkin d-sequence at `q = 1`.
pub fn motzkin_delta(n: usize) -> i64 {
    [1, 1, 0, -1, -1, 0][n % 6]
}

/// `d_0 .. d_upto` with `d_0 = 1`, `d_1 = s_0`, `d_n = s_{n-1} d_{n-1} - t_{n-2} d_{n-2}`.
pub fn d_sequence(jf: &JFraction, upto: usize) -> Result<Vec<Poly>, HankelError> {
    let need_s = upto;
    let need_t = upto.saturating_sub(1);
    if jf.s.len() < need_s {
        return Err(HankelError::InsufficientCoefficients {
            needed: need_s,
            available: jf.s.len(),
        });
    }
    if jf.t.len() < need_t {
        return Err(HankelError::InsufficientCoefficients {
            needed: need_t,
            available: jf.t.len(),
        });
    }
    let mut d = Vec::with_capacity(upto + 1);
    d.push(Poly::one());
    for n in 1..=upto {
        let mut next = &jf.s[n - 1] * &d[n - 1];
        if n >= 2 {
            next -= &(&jf.t[n - 2] * &d[n - 2]);
        }
        d.push(next);
    }
    Ok(d)
}

fn q_pow(e: usize) -> Poly {
    Poly::q_pow(u32::try_from(e).expect("q exponent fits in u32"))
}

/// `prod_{j=lo}^{hi} (a + q^j b)^{m(j)}`.
fn a_plus_qb_product(a: &Poly, b: &Poly, lo: u32, hi: u32, m: impl Fn(u32) -> u32) -> Poly {
    (lo..=hi)
        .map(|j| (a + &(b * &Poly::q_pow(j))).pow(m(j)))
        .product()
}

/// Closed forms for the moments `C*_{n+1} / a` of `f*`:
/// shift 0 gives `(ab)^{binom(n+1,2)} q^{n(n+1)(2n+1)/6}`, shift 1 gives
/// `(abq)^{binom(n+1,2)} q^{n(n+1)(2n+1)/6} (a^{n+2} - b^{n+2})/(a - b)`.
pub fn fstar_hankel(shift: usize, n: usize, a: &Poly, b: &Poly) -> Result<Poly, HankelError> {
    let n32 = n as u32;
    let pairs = tri(n32 + 1);
    let squares = n * (n + 1) * (2 * n + 1) / 6;
    let ab = a * b;
    match shift {
        0 => Ok(ab.pow(pairs) * q_pow(squares)),
        1 => Ok(ab.pow(pairs) * q_pow(squares + pairs as usize) * complete_homogeneous(a, b, n32 + 1)),
        _ => Err(HankelError::UnsupportedCombination { shift }),
    }
}

/// Closed form of `det(mu_{i+j+shift})_{i,j=0..n}` for the family's moments.
///
/// * q-Catalan: `q^{n(n+1)(4n-1)/6}`, `q^{n(n+1)(4n+5)/6}`.
/// * q-Narayana: `q^{n^2(n+1)/2} b^{binom(n+1,2)} prod_{j=0}^{n-1} (a+q^j b)^{n-j}` and
///   `q^{n(n+1)^2/2} b^{binom(n+1,2)} prod_{j=0}^{n} (a+q^j b)^{n+1-j}`.
/// * C*: shift 0 is `(ab)^{binom(n+1,2)} q^{n(n+1)(n-1)/3}`; shifts 1 and 2 are
///   `a^{n+1}` times [`fstar_hankel`] at shift 0 and 1, since `C*_{k+1} = a mu_k(f*)`.
/// * Motzkin: `q^{n(n+1)(2n+1)/6}` and `q^{2 binom(n+2,3)} delta_{n+1}`.
pub fn expected_hankel(
    family: HankelFamily,
    shift: usize,
    n: usize,
    a: &Poly,
    b: &Poly,
) -> Result<Poly, HankelError> {
    let n32 = n as u32;
    let unsupported = Err(HankelError::UnsupportedCombination { shift });
    match (family, shift) {
        (HankelFamily::QCatalan, 0) => Ok(q_pow(n * (n + 1) * (4 * n).saturating_sub(1) / 6)),
        (HankelFamily::QCatalan, 1) => Ok(q_pow(n * (n + 1) * (4 * n + 5) / 6)),
        (HankelFamily::Narayana, 0) => Ok(q_pow(n * n * (n + 1) / 2)
            * b.pow(tri(n32 + 1))
            * if n == 0 {
                Poly::one()
            } else {
                a_plus_qb_product(a, b, 0, n32 - 1, |j| n32 - j)
            }),
        (HankelFamily::Narayana, 1) => Ok(q_pow(n * (n + 1) * (n + 1) / 2)
            * b.pow(tri(n32 + 1))
            * a_plus_qb_product(a, b, 0, n32, |j| n32 + 1 - j)),
        (HankelFamily::CStar, 0) => {
            Ok((a * b).pow(tri(n32 + 1)) * q_pow(n * (n + 1) * n.saturating_sub(1) / 3))
        }
        (HankelFamily::CStar, 1 | 2) => Ok(a.pow(n32 + 1) * fstar_hankel(shift - 1, n, a, b)?),
        (HankelFamily::Motzkin, 0) => Ok(q_pow(n * (n + 1) * (2 * n + 1) / 6)),
        (HankelFamily::Motzkin, 1) => {
            let e = 2 * ((n + 2) * (n + 1) * n / 6);
            Ok(q_pow(e).scale(&motzkin_delta(n + 1).into()))
        }
        _ => unsupported,
    }
}

/// `mu_0 .. mu_{len-1}` of the family, symbolic in `a, b` where it has them.
pub fn family_sequence(family: HankelFamily, len: usize) -> Vec<Poly> {
    if len == 0 {
        return Vec::new();
    }
    match family {
        HankelFamily::QCatalan => qcatalan_seq(len - 1),
        HankelFamily::Narayana => qnarayana_seq(len - 1),
        HankelFamily::CStar => cstar_seq(len - 1),
        HankelFamily::Motzkin => qmotzkin_seq(len - 1),
    }
}

pub fn hankel_report(family: HankelFamily, shift: usize, n: usize) -> Result<HankelReport, HankelError> {
    let expected = expected_hankel(family, shift, n, &Poly::a(), &Poly::b())?;
    let seq = family_sequence(family, 2 * n + shift + 1);
    let computed = hankel_det(&seq, shift, n)?;
    let matched = computed == expected;
    Ok(HankelReport {
        family,
        shift,
        n,
        computed,
        expected,
        matched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jfraction::{closed_jfraction, ClosedFamily};
    use crate::polyring::{Substitution, Var};
    use crate::sequences::qcatalan;
    use alloc::vec;

    /// Leibniz expansion over all permutations.
    fn leibniz(m: &[Vec<Poly>]) -> Poly {
        fn go(m: &[Vec<Poly>], row: usize, used: &mut Vec<bool>, sign: i64, acc: Poly, out: &mut Poly) {
            if row == m.len() {
                *out += &acc.scale(&sign.into());
                return;
            }
            for c in 0..m.len() {
                if used[c] {
                    continue;
                }
                let inversions = used[c + 1..].iter().filter(|u| **u).count();
                let s = if inversions % 2 == 1 { -sign } else { sign };
                used[c] = true;
                go(m, row + 1, used, s, &acc * &m[row][c], out);
                used[c] = false;
            }
        }
        let mut out = Poly::zero();
        go(m, 0, &mut vec![false; m.len()], 1, Poly::one(), &mut out);
        out
    }

    fn hankel_matrix(seq: &[Poly], shift: usize, n: usize) -> Vec<Vec<Poly>> {
        (0..=n)
            .map(|i| (0..=n).map(|j| seq[i + j + shift].clone()).collect())
            .collect()
    }

    #[test]
    fn bareiss_matches_leibniz() {
        for family in HankelFamily::ALL {
            let seq = family_sequence(family, 10);
            for shift in 0..=2 {
                for n in 0..=3 {
                    let m = hankel_matrix(&seq, shift, n);
                    assert_eq!(determinant(m.clone()), leibniz(&m), "{family:?} {shift} {n}");
                }
            }
        }
        // needs a pivot swap
        let m = vec![vec![Poly::zero(), Poly::one()], vec![Poly::a(), Poly::b()]];
        assert_eq!(determinant(m), -Poly::a());
    }

    #[test]
    fn spec_examples() {
        let cat: Vec<Poly> = (0..5).map(qcatalan).collect();
        assert_eq!(hankel_det(&cat, 0, 1).unwrap(), Poly::q());
        assert_eq!(hankel_det(&cat, 3, 0).unwrap(), cat[3]);
        let mot = family_sequence(HankelFamily::Motzkin, 5);
        assert_eq!(hankel_det(&mot, 1, 1).unwrap(), Poly::zero());
        assert_eq!(
            hankel_det(&mot, 1, 2),
            Err(HankelError::InsufficientMoments {
                needed: 6,
                available: 5
            })
        );
        let (a, b, q) = (Poly::a(), Poly::b(), Poly::q());
        assert_eq!(
            expected_hankel(HankelFamily::Narayana, 0, 1, &a, &b).unwrap(),
            &q * &b * (&a + &b)
        );
        assert_eq!(
            expected_hankel(HankelFamily::Motzkin, 1, 2, &a, &b).unwrap(),
            -Poly::q_pow(8)
        );
        assert_eq!(
            expected_hankel(HankelFamily::QCatalan, 2, 1, &a, &b),
            Err(HankelError::UnsupportedCombination { shift: 2 })
        );
    }

    #[test]
    fn closed_forms_match_determinants() {
        for family in HankelFamily::ALL {
            for &shift in family.shifts() {
                for n in 0..=3 {
                    let r = hankel_report(family, shift, n).unwrap();
                    assert!(
                        r.matched,
                        "{family:?} shift {shift} n {n}: {} vs {}",
                        r.computed, r.expected
                    );
                }
            }
        }
    }

    #[test]
    fn fstar_forms_on_normalized_moments() {
        let a = Poly::a();
        let normalized: Vec<Poly> = cstar_seq(10)[1..]
            .iter()
            .map(|c| c.exact_div(&a).unwrap())
            .collect();
        for shift in 0..=1 {
            for n in 0..=3 {
                assert_eq!(
                    hankel_det(&normalized, shift, n).unwrap(),
                    fstar_hankel(shift, n, &a, &Poly::b()).unwrap()
                );
            }
        }
        // C*_1 = a, and the raw 2x2 shifted determinant carries a^2.
        let raw = cstar_seq(4);
        assert_eq!(hankel_det(&raw, 1, 0).unwrap(), a);
        assert_eq!(hankel_det(&raw, 1, 1).unwrap(), Poly::q() * a.pow(3) * Poly::b());
    }

    #[test]
    fn d_sequence_values() {
        let (a, b, q) = (Poly::a(), Poly::b(), Poly::q());
        let jf = closed_jfraction(ClosedFamily::Narayana, 4, &a, &b);
        let d = d_sequence(&jf, 3).unwrap();
        assert_eq!(d[0], Poly::one());
        assert_eq!(d[1], jf.s[0]);
        assert_eq!(d[2], &q * (&a + &b) * (&a + &q * &b));
        assert!(matches!(
            d_sequence(&jf, 6),
            Err(HankelError::InsufficientCoefficients { .. })
        ));

        let jf = closed_jfraction(ClosedFamily::Motzkin, 13, &a, &b);
        let at1 = Substitution::new().with(Var::Q, Poly::one());
        let d = d_sequence(&jf, 12).unwrap();
        for (n, dn) in d.iter().enumerate() {
            assert_eq!(dn.substitute(&at1), Poly::constant(motzkin_delta(n)));
        }
    }

    #[test]
    fn catalan_exponents_from_narayana_forms() {
        let (zero, one) = (Poly::zero(), Poly::one());
        for n in 0..=6 {
            for shift in 0..=1 {
                assert_eq!(
                    expected_hankel(HankelFamily::Narayana, shift, n, &zero, &one).unwrap(),
                    expected_hankel(HankelFamily::QCatalan, shift, n, &zero, &one).unwrap()
                );
            }
        }
    }
}
