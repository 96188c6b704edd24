// Check names double as registry keys, so a few keep upper-case letters.
#![allow(non_snake_case)]

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::{Ctx, Failure};
use crate::hankel::{d_sequence, expected_hankel, fstar_hankel, hankel_det, motzkin_delta, HankelFamily};
use crate::jfraction::{
    closed_jfraction, jfraction_from_moments, moments_from_jfraction, orthopoly_explicit, orthopolys,
    ClosedFamily, ExplicitFamily, JFraction, MomentFunctional, ZPoly,
};
use crate::polyring::{binomial, qbinom, qbinom_ext, tri, Poly, QFrac, Substitution, Var};
use crate::sequences::{
    cstar_seq, narayana_basis, narayana_triangle, nstar_triangle, rogers_szego_by_definition,
    rogers_szego_seq, GouldTable,
};
use crate::series::{gould_series, h_series, hstar_series, q_exponential, ratio_series, RatioKind, Series};

use HankelFamily::{CStar, Motzkin, Narayana, QCatalan};

type Outcome = Result<(), Failure>;
type At = Vec<(String, i64)>;

macro_rules! at {
    ($($k:ident = $v:expr),* $(,)?) => {
        vec![$((String::from(stringify!($k)), ($v) as i64)),*]
    };
}

trait AtExt<T> {
    fn at(self, at: At) -> Result<T, Failure>;
}

impl<T, E: fmt::Display> AtExt<T> for Result<T, E> {
    fn at(self, at: At) -> Result<T, Failure> {
        self.map_err(|e| Failure::error(at, e))
    }
}

fn same<T: PartialEq + fmt::Display>(at: At, lhs: &T, rhs: &T) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Failure::mismatch(at, lhs, rhs))
    }
}

fn same_series(mut at: At, lhs: &Series, rhs: &Series) -> Outcome {
    debug_assert_eq!(lhs.order(), rhs.order());
    match lhs.first_mismatch(rhs) {
        None => Ok(()),
        Some(k) => {
            at.push(("k".into(), k as i64));
            Err(Failure::mismatch(at, lhs.coeff(k), rhs.coeff(k)))
        }
    }
}

fn same_seq(label: &str, lhs: &[Poly], rhs: &[Poly]) -> Outcome {
    for (i, (x, y)) in lhs.iter().zip(rhs).enumerate() {
        if x != y {
            return Err(Failure::mismatch(vec![(label.to_string(), i as i64)], x, y));
        }
    }
    Ok(())
}

fn a() -> Poly {
    Poly::a()
}

fn b() -> Poly {
    Poly::b()
}

fn q() -> Poly {
    Poly::q()
}

fn qp(e: usize) -> Poly {
    Poly::q_pow(e as u32)
}

fn int(c: impl Into<BigInt>) -> Poly {
    Poly::constant(c)
}

fn qpoly(c: &[i64]) -> Poly {
    Poly::from_q_coeffs(c.iter().copied())
}

fn subst(pairs: &[(Var, Poly)]) -> Substitution {
    pairs
        .iter()
        .fold(Substitution::new(), |s, (v, p)| s.with(*v, p.clone()))
}

fn z2(s: &Series) -> Series {
    s.mul_z().mul_z()
}

fn one(order: usize) -> Series {
    Series::one(order)
}

fn sum(terms: &[Series]) -> Series {
    let mut it = terms.iter();
    let first = it.next().expect("at least one term").clone();
    it.fold(first, |acc, t| &acc + t)
}

fn zpow(m: usize) -> ZPoly {
    let mut c = vec![Poly::zero(); m + 1];
    c[m] = Poly::one();
    ZPoly::new(c)
}

/// `prod_{k<n} t_k^{n-k}`.
fn t_product(jf: &JFraction, n: usize) -> Poly {
    (0..n).map(|k| jf.t[k].pow((n - k) as u32)).product()
}

fn gould_family(r: u32, upto: usize, order: usize) -> Result<Vec<Series>, Failure> {
    (0..=upto)
        .map(|n| gould_series(r, n as u32, order).at(at!(r = r, n = n)))
        .collect()
}

fn ratio(kind: RatioKind, order: usize) -> Result<Series, Failure> {
    Ok(ratio_series(kind, &a(), &b(), order)?)
}

const CATALAN_PRINTED: [&[i64]; 5] = [&[1], &[1], &[1, 1], &[1, 2, 1, 1], &[1, 3, 3, 3, 2, 1, 1]];

pub(super) fn eq1_catalan_ratio(ctx: &Ctx, d: usize) -> Outcome {
    let rec = ctx.seq(QCatalan, d);
    for (n, c) in CATALAN_PRINTED.iter().enumerate().take(d + 1) {
        same(at!(n = n), &rec[n], &qpoly(c))?;
    }
    let f = ratio(RatioKind::FCatalan, d + 1)?.to_polys()?;
    same_seq("n", &f, &rec)
}

pub(super) fn eq3_er_functional(_: &Ctx, d: usize) -> Outcome {
    for r in 0..=3 {
        let e = q_exponential(r, d + 1);
        same_series(at!(r = r), &(&e - &e.scale_z(1)), &e.scale_z(r).mul_z())?;
    }
    Ok(())
}

pub(super) fn eq5_gr_recurrence(_: &Ctx, d: usize) -> Outcome {
    for r in 0..=3u32 {
        let gs = gould_family(r, d + r.max(1) as usize, d + 1)?;
        for n in 0..=d {
            let rhs = &gs[n] + &gs[n + r as usize].mul_z().mul_poly(&qp(n));
            same_series(at!(r = r, n = n), &gs[n + 1], &rhs)?;
        }
    }
    Ok(())
}

pub(super) fn eq6_gould_coeffs(_: &Ctx, d: usize) -> Outcome {
    let order = d + 1;
    for r in 0..=3u32 {
        let gs = gould_family(r, d + 1 + r as usize, order)?;
        let mut table = GouldTable::new(r);
        for (n, g) in gs.iter().enumerate().take(d + 2) {
            for k in 0..order {
                let expected = table.get(k as u32, n as u32);
                same(at!(r = r, k = k, n = n), g.coeff(k), &QFrac::from(expected))?;
            }
        }
        for n in 0..=d {
            for k in 1..order {
                let lhs = gs[n + 1].coeff(k) - gs[n].coeff(k);
                let rhs = gs[n + r as usize].coeff(k - 1).mul_poly(&qp(n));
                same(at!(r = r, k = k, n = n), &lhs, &rhs)?;
            }
        }
        for k in 0..order {
            let boundary = if k == 0 { Poly::one() } else { Poly::zero() };
            same(at!(r = r, k = k, n = 0), gs[0].coeff(k), &QFrac::from(boundary))?;
        }
        for (n, g) in gs.iter().enumerate() {
            same(at!(r = r, k = 0, n = n), g.coeff(0), &QFrac::one())?;
        }
    }
    Ok(())
}

pub(super) fn eq7_gr1(_: &Ctx, d: usize) -> Outcome {
    let order = d + 1;
    for r in 0..=3u32 {
        let gs = gould_family(r, r.max(1) as usize, order)?;
        same_series(at!(r = r), &gs[1], &(&one(order) + &gs[r as usize].mul_z()))?;
    }
    let g21 = gould_series(2, 1, order)?;
    same_series(at!(r = 2, n = 1), &g21, &ratio(RatioKind::FCatalan, order)?)
}

pub(super) fn eq8_eq9_products(_: &Ctx, d: usize) -> Outcome {
    let order = d + 1;
    for r in 0..=3u32 {
        let gs = gould_family(r, 2 * d, order)?;
        for n in 0..=d {
            let prod = (0..n).fold(one(order), |acc, i| &acc * &gs[1].scale_z(i as u32));
            same_series(at!(r = r, n = n), &prod, &gs[n])?;
        }
        for m in 0..=d {
            for n in 0..=d {
                let rhs = &gs[m] * &gs[n].scale_z(m as u32);
                same_series(at!(r = r, m = m, n = n), &gs[m + n], &rhs)?;
            }
        }
    }
    Ok(())
}

pub(super) fn eq12_f_functional(_: &Ctx, d: usize) -> Outcome {
    let order = d + 1;
    let f = ratio(RatioKind::FNarayana, order)?;
    let rhs = sum(&[
        one(order),
        f.mul_z().mul_poly(&a()),
        (&f * &f.scale_z(1)).mul_z().mul_poly(&b()),
    ]);
    same_series(at!(part = 0), &f, &rhs)?;
    let h = h_series(&a(), &b(), order);
    let lhs = &h - &h.scale_z(1);
    let rhs = -&(&h.scale_z(1).mul_z().mul_poly(&a()) + &h.scale_z(2).mul_z().mul_poly(&b()));
    same_series(at!(part = 1), &lhs, &rhs)
}

pub(super) fn eq13_15_recurrence_vs_ratio(ctx: &Ctx, d: usize) -> Outcome {
    let rec = ctx.seq(Narayana, d);
    let printed = [
        Poly::one(),
        a() + b(),
        a() * a() + (int(2) + q()) * a() * b() + (int(1) + q()) * b() * b(),
    ];
    for (n, p) in printed.iter().enumerate().take(d + 1) {
        same(at!(n = n), &rec[n], p)?;
    }
    let f = ratio(RatioKind::FNarayana, d + 1)?.to_polys()?;
    same_seq("n", &rec, &f)
}

fn narayana_number(n: usize, k: usize) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    binomial(n, k) * binomial(n, k - 1) / BigInt::from(n)
}

pub(super) fn eq14_q1_closed_form(ctx: &Ctx, d: usize) -> Outcome {
    let rec = ctx.seq(Narayana, d);
    for n in 1..=d {
        let closed: Poly = (1..=n)
            .map(|k| {
                Poly::constant(narayana_number(n, k)) * b().pow((n - k) as u32) * (a() + b()).pow(k as u32)
            })
            .sum();
        same(at!(n = n), &rec[n].at_q(1), &closed)?;
    }
    let at01 = subst(&[
        (Var::A, Poly::zero()),
        (Var::B, Poly::one()),
        (Var::Q, Poly::one()),
    ]);
    for (n, c) in rec.iter().enumerate() {
        let catalan = binomial(2 * n as i64, n as i64) / BigInt::from(n + 1);
        same(at!(n = n), &c.substitute(&at01), &Poly::constant(catalan))?;
    }
    Ok(())
}

fn narayana_printed() -> [Vec<Poly>; 6] {
    let r = |rows: &[&[i64]]| rows.iter().map(|c| qpoly(c)).collect::<Vec<_>>();
    [
        r(&[&[1]]),
        r(&[&[0], &[1]]),
        r(&[&[0], &[1], &[1]]),
        r(&[&[0], &[1], &[2, 1], &[1]]),
        r(&[&[0], &[1], &[3, 3], &[3, 2, 1], &[1]]),
        r(&[&[0], &[1], &[4, 6, 1, -1], &[6, 8, 5, 1], &[4, 3, 2, 1], &[1]]),
    ]
}

pub(super) fn eq16_triangle_roundtrip(ctx: &Ctx, d: usize) -> Outcome {
    let rec = ctx.seq(Narayana, d);
    let tri = narayana_triangle(d + 1);
    for (n, row) in narayana_printed().iter().enumerate().take(d + 1) {
        for (k, p) in row.iter().enumerate() {
            same(at!(n = n, k = k), tri.get(n, k), p)?;
        }
    }
    for (n, c) in rec.iter().enumerate() {
        let back: Poly = (0..=n)
            .map(|k| tri.get(n, k) * &narayana_basis(n as u32, k as u32))
            .sum();
        same(at!(n = n), &back, c)?;
        if n >= 1 {
            for k in 0..=n {
                let expect = if k == 0 {
                    BigInt::from(0)
                } else {
                    narayana_number(n, k)
                };
                same(at!(n = n, k = k), &tri.get(n, k).at_q(1), &Poly::constant(expect))?;
            }
        }
    }
    Ok(())
}

pub(super) fn eq17_ratio_identity(_: &Ctx, d: usize) -> Outcome {
    let order = d + 1;
    let f = ratio(RatioKind::FNarayana, order)?;
    let f_qb = f.substitute(&subst(&[(Var::B, q() * b())]))?;
    let lhs = &(&f.scale_z(1) - &one(order)) * &f;
    let rhs = (&f_qb.scale_z(1) * &(&f - &one(order))).mul_poly(&q());
    same_series(at!(part = 0), &lhs, &rhs)?;
    let h = h_series(&a(), &b(), order);
    let h_qb = h_series(&a(), &(q() * b()), order);
    let lhs = &h - &h.scale_z(1);
    let rhs = -&h_qb.scale_z(1).mul_z().mul_poly(&(a() + b()));
    same_series(at!(part = 1), &lhs, &rhs)
}

pub(super) fn eq21_23_g_chain(_: &Ctx, d: usize) -> Outcome {
    let order = d + 1;
    let (a, b, q) = (a(), b(), q());
    let ab = &a + &b;
    let g = ratio(RatioKind::G, order)?;
    let gp = g.to_polys()?;
    let fp = ratio(RatioKind::FNarayana, order + 1)?.to_polys()?;
    for n in 0..order {
        same(at!(part = 0, n = n), &(&fp[n + 1] * &qp(n)), &(&gp[n] * &ab))?;
    }
    let f = ratio(RatioKind::FNarayana, order)?;
    let rhs_f = sum(&[
        one(order),
        f.mul_z().mul_poly(&ab),
        z2(&(&f * &g)).mul_poly(&(&q * &ab * &b)),
    ]);
    same_series(at!(part = 1), &f, &rhs_f)?;
    let gq = g.scale_z(1);
    let rhs_mid = sum(&[
        one(order),
        g.mul_z().mul_poly(&(&q * &ab)),
        gq.mul_z().mul_poly(&(qp(2) * &b)),
        z2(&(&g * &gq)).mul_poly(&(qp(3) * &b * &ab)),
    ]);
    same_series(at!(part = 2), &g, &rhs_mid)?;
    let g_qb = g.substitute(&subst(&[(Var::B, &q * &b)]))?.scale_z(1);
    let rhs_g = sum(&[
        one(order),
        g.mul_z().mul_poly(&(&q * &(&ab + &(&q * &b)))),
        z2(&(&g * &g_qb)).mul_poly(&(qp(4) * &b * (&a + &(&q * &b)))),
    ]);
    same_series(at!(part = 3), &g, &rhs_g)?;
    let jf = closed_jfraction(ClosedFamily::Narayana, order + 1, &a, &b);
    let tail = JFraction::new(jf.s[1..].to_vec(), jf.t[1..].to_vec());
    let mu = moments_from_jfraction(&tail, order)?;
    same_seq("n", &mu, &gp)
}

pub(super) fn thm_eq18_eq19_hankel(ctx: &Ctx, d: usize) -> Outcome {
    let (zero, one_) = (Poly::zero(), Poly::one());
    for (fi, family) in [Narayana, QCatalan].into_iter().enumerate() {
        let seq = ctx.seq(family, 2 * d + 1);
        for shift in 0..=1 {
            for n in 0..=d {
                let det = hankel_det(&seq, shift, n)?;
                let expected = expected_hankel(family, shift, n, &a(), &b())?;
                same(at!(family = fi, shift = shift, n = n), &det, &expected)?;
            }
        }
    }
    for shift in 0..=1 {
        for n in 0..=d {
            let specialized = expected_hankel(Narayana, shift, n, &zero, &one_)?;
            let catalan = expected_hankel(QCatalan, shift, n, &zero, &one_)?;
            same(at!(shift = shift, n = n), &specialized, &catalan)?;
        }
    }
    let jf = closed_jfraction(ClosedFamily::Narayana, d + 1, &a(), &b());
    let ds = d_sequence(&jf, d + 1)?;
    for n in 0..=d {
        let closed = qp(tri(n as u32 + 1) as usize)
            * (0..=n as u32)
                .map(|j| a() + b() * Poly::q_pow(j))
                .product::<Poly>();
        same(at!(n = n + 1), &ds[n + 1], &closed)?;
    }
    Ok(())
}

fn lemma_fractions(depth: usize) -> Vec<JFraction> {
    let (a, b) = (a(), b());
    let mut out: Vec<JFraction> = ClosedFamily::ALL
        .iter()
        .map(|f| closed_jfraction(*f, depth, &a, &b))
        .collect();
    let patterns: [(fn(i64) -> i64, fn(i64) -> i64); 3] = [
        (|k| k % 3 - 1, |k| k + 1),
        (|k| 2 * k - 3, |k| -(k + 2)),
        (|k| if k % 2 == 0 { k + 1 } else { -k - 1 }, |k| (k * k) % 5 - 2),
    ];
    for (s, t) in patterns {
        out.push(JFraction::new(
            (0..depth as i64).map(|k| int(s(k))).collect(),
            (0..depth as i64).map(|k| int(t(k))).collect(),
        ));
    }
    out.push(JFraction::new(
        (0..depth).map(|k| qp(k) + a.clone()).collect(),
        (0..depth).map(|k| &b * &qp(k)).collect(),
    ));
    out
}

pub(super) fn lemma_product_law(_: &Ctx, d: usize) -> Outcome {
    for (i, jf) in lemma_fractions(d + 1).iter().enumerate() {
        let mu = moments_from_jfraction(jf, 2 * d + 1)?;
        for n in 0..=d {
            same(
                at!(fraction = i, n = n),
                &hankel_det(&mu, 0, n)?,
                &t_product(jf, n),
            )?;
        }
    }
    Ok(())
}

pub(super) fn lemma_shifted_law(_: &Ctx, d: usize) -> Outcome {
    for (i, jf) in lemma_fractions(d + 1).iter().enumerate() {
        let mu = moments_from_jfraction(jf, 2 * d + 2)?;
        let ds = d_sequence(jf, d + 1)?;
        for n in 0..=d {
            let rhs = &ds[n + 1] * &t_product(jf, n);
            same(at!(fraction = i, n = n), &hankel_det(&mu, 1, n)?, &rhs)?;
        }
    }
    Ok(())
}

pub(super) fn lemma_orthogonality(_: &Ctx, d: usize) -> Outcome {
    for (i, jf) in lemma_fractions(d + 1).iter().enumerate() {
        let fun = MomentFunctional::new(moments_from_jfraction(jf, 2 * d + 1)?);
        let ps = orthopolys(jf, d)?;
        for n in 0..=d {
            for m in 0..=d {
                let lhs = fun.apply(&ps[n].mul(&ps[m]))?;
                let rhs = if n == m { jf.norm(n) } else { Poly::zero() };
                same(at!(fraction = i, n = n, m = m), &lhs, &rhs)?;
            }
        }
    }
    Ok(())
}

/// Explicit formula against the recurrence, then orthogonality of the
/// explicit polynomials against the given moment sequence.
fn explicit_family(index: usize, family: ExplicitFamily, moments: &[Poly], d: usize) -> Outcome {
    let ps = orthopolys(&family.jfraction(d + 1), d)?;
    let fun = MomentFunctional::new(moments.to_vec());
    for (n, p) in ps.iter().enumerate() {
        let explicit = orthopoly_explicit(family, n);
        same(at!(family = index, n = n), &explicit, p)?;
        for m in 0..n {
            let value = fun.apply(&explicit.mul(&zpow(m)))?;
            same(at!(family = index, n = n, m = m), &value, &Poly::zero())?;
        }
    }
    Ok(())
}

pub(super) fn remark_orthopoly_explicit(ctx: &Ctx, d: usize) -> Outcome {
    explicit_family(0, ExplicitFamily::NarayanaAb, &ctx.seq(Narayana, 2 * d), d)?;
    explicit_family(1, ExplicitFamily::Narayana01, &ctx.seq(QCatalan, 2 * d), d)?;
    let at01 = subst(&[(Var::A, Poly::zero()), (Var::B, Poly::one())]);
    for n in 0..=d {
        let general = orthopoly_explicit(ExplicitFamily::NarayanaAb, n).substitute(&at01);
        same(
            at!(n = n),
            &general,
            &orthopoly_explicit(ExplicitFamily::Narayana01, n),
        )?;
    }
    Ok(())
}

fn normalized_cstar(raw: &[Poly]) -> Result<Vec<Poly>, Failure> {
    raw[1..]
        .iter()
        .enumerate()
        .map(|(n, c)| c.exact_div(&a()).at(at!(n = n + 1)))
        .collect()
}

pub(super) fn cstar_orthopoly_explicit(ctx: &Ctx, d: usize) -> Outcome {
    let raw = ctx.seq(CStar, 2 * d + 1);
    explicit_family(0, ExplicitFamily::CStarShift1, &normalized_cstar(&raw)?, d)?;
    explicit_family(1, ExplicitFamily::CStarShift0, &raw, d)
}

pub(super) fn eq24_26_hstar_functional(_: &Ctx, d: usize) -> Outcome {
    let order = d + 1;
    let (a, b, q) = (a(), b(), q());
    let h = hstar_series(&a, &b, order);
    let lhs = &h - &h.scale_z(1);
    let rhs = -&(&h.scale_z(1).mul_z().mul_poly(&(&a + &b)) + &z2(&h.scale_z(2)).mul_poly(&(&q * &a * &b)));
    same_series(at!(part = 0), &lhs, &rhs)?;
    let f = ratio(RatioKind::FStar, order)?;
    let rhs = sum(&[
        one(order),
        f.mul_z().mul_poly(&(&a + &b)),
        z2(&(&f * &f.scale_z(1))).mul_poly(&(&q * &a * &b)),
    ]);
    same_series(at!(part = 1), &f, &rhs)
}

pub(super) fn rogers_szego_definition(_: &Ctx, d: usize) -> Outcome {
    let rec = rogers_szego_seq(d);
    for (n, r) in rec.iter().enumerate() {
        same(at!(n = n), r, &rogers_szego_by_definition(n as u32))?;
    }
    Ok(())
}

fn nstar_printed() -> [Vec<Poly>; 5] {
    let r = |rows: &[&[i64]]| rows.iter().map(|c| qpoly(c)).collect::<Vec<_>>();
    [
        r(&[&[1]]),
        r(&[&[1], &[1]]),
        r(&[&[1], &[2, 1], &[1]]),
        r(&[&[1], &[3, 2, 1], &[3, 2, 1], &[1]]),
        r(&[&[1], &[4, 3, 2, 1], &[6, 6, 5, 2, 1], &[4, 3, 2, 1], &[1]]),
    ]
}

pub(super) fn eq27_29_cstar(ctx: &Ctx, d: usize) -> Outcome {
    let order = d + 1;
    let rec = ctx.seq(CStar, d + 1);
    let (a, b, q) = (a(), b(), q());
    let printed = [
        Poly::one(),
        a.clone(),
        &a * &b + &a * &a,
        &a * &b.pow(2) + (int(2) + q.clone()) * a.pow(2) * &b + a.pow(3),
        &a * &b.pow(3)
            + qpoly(&[3, 2, 1]) * a.pow(2) * b.pow(2)
            + qpoly(&[3, 2, 1]) * a.pow(3) * &b
            + a.pow(4),
    ];
    for (n, p) in printed.iter().enumerate().take(d + 1) {
        same(at!(n = n), &rec[n], p)?;
    }
    let tri = nstar_triangle(d + 1);
    for (i, row) in nstar_printed().iter().enumerate().take(d) {
        let n = i + 1;
        for (j, p) in row.iter().enumerate() {
            same(at!(n = n, k = j + 1), tri.get(n, j + 1), p)?;
        }
    }
    for n in 0..=d {
        let back: Poly = (0..=n as u32)
            .map(|k| tri.get(n, k as usize) * &a.pow(k) * b.pow(n as u32 - k))
            .sum();
        same(at!(n = n), &back, &rec[n])?;
    }
    let fstar = ratio(RatioKind::FStar, order)?.to_polys()?;
    let shifted: Vec<Poly> = fstar.iter().map(|c| c * &a).collect();
    same_seq("n", &shifted, &rec[1..])?;
    let capital = ratio(RatioKind::CapitalF, order)?.to_polys()?;
    same_seq("n", &capital, &rec)
}

pub(super) fn eq28_F_identity(_: &Ctx, d: usize) -> Outcome {
    let order = d + 1;
    let (a, b, q) = (a(), b(), q());
    let f = ratio(RatioKind::CapitalF, order)?;
    let fq = f.scale_z(1);
    let rhs = sum(&[
        one(order),
        f.mul_z().mul_poly(&a),
        -&fq.mul_z().mul_poly(&b),
        (&f * &fq).mul_z().mul_poly(&b),
    ]);
    same_series(at!(part = 0), &f, &rhs)?;
    let swap = subst(&[(Var::A, b.clone()), (Var::B, &q * &a)]);
    let f_swapped = f.substitute(&swap)?;
    let rhs = &one(order) + &(&f * &f_swapped).mul_z().mul_poly(&a);
    same_series(at!(part = 1), &f, &rhs)?;
    let fstar_swapped = ratio(RatioKind::FStar, order)?.substitute(&swap)?;
    let rhs = sum(&[
        one(order),
        f.mul_z().mul_poly(&a),
        z2(&(&f * &fstar_swapped)).mul_poly(&(&a * &b)),
    ]);
    same_series(at!(part = 2), &f, &rhs)
}

pub(super) fn eq30_31_hankel_cstar(ctx: &Ctx, d: usize) -> Outcome {
    let raw = ctx.seq(CStar, 2 * d + 2);
    let normalized = normalized_cstar(&raw)?;
    for shift in 0..=1 {
        for n in 0..=d {
            let det = hankel_det(&normalized, shift, n)?;
            same(
                at!(moments = 0, shift = shift, n = n),
                &det,
                &fstar_hankel(shift, n, &a(), &b())?,
            )?;
        }
    }
    for shift in 1..=2 {
        for n in 0..=d {
            let det = hankel_det(&raw, shift, n)?;
            let expected = expected_hankel(CStar, shift, n, &a(), &b())?;
            same(at!(moments = 1, shift = shift, n = n), &det, &expected)?;
        }
    }
    Ok(())
}

pub(super) fn cstar_shift0_hankel(ctx: &Ctx, d: usize) -> Outcome {
    let raw = ctx.seq(CStar, 2 * d);
    for n in 0..=d {
        let expected = expected_hankel(CStar, 0, n, &a(), &b())?;
        same(at!(n = n), &hankel_det(&raw, 0, n)?, &expected)?;
    }
    Ok(())
}

pub(super) fn polya_gessel_values(ctx: &Ctx, d: usize) -> Outcome {
    let upto = d.min(4);
    let rec = ctx.seq(CStar, upto);
    let s = b();
    let qs = q() * &s;
    let printed = [
        Poly::one(),
        Poly::one(),
        int(1) + &s,
        int(1) + int(2) * &s + &qs + s.pow(2),
        int(1)
            + int(3) * &s
            + int(2) * &qs
            + qp(2) * &s
            + int(3) * s.pow(2)
            + int(2) * &qs * &s
            + qp(2) * s.pow(2)
            + s.pow(3),
    ];
    let at_a1 = subst(&[(Var::A, Poly::one())]);
    for (n, c) in rec.iter().enumerate() {
        same(at!(n = n), &c.substitute(&at_a1), &printed[n])?;
    }
    Ok(())
}

pub(super) fn cn_eq_cstar_1_q_q2(ctx: &Ctx, d: usize) -> Outcome {
    let cat = ctx.seq(QCatalan, d);
    let cs = ctx.seq(CStar, d);
    let spec = subst(&[(Var::A, Poly::one()), (Var::B, q()), (Var::Q, qp(2))]);
    for n in 0..=d {
        same(at!(n = n), &cat[n], &cs[n].substitute(&spec))?;
    }
    let order = d + 1;
    let capital = ratio_series(RatioKind::CapitalF, &Poly::one(), &b(), order)?
        .substitute(&subst(&[(Var::Q, qp(2)), (Var::B, q())]))?;
    same_series(at!(part = 0), &ratio(RatioKind::FCatalan, order)?, &capital)
}

pub(super) fn hstar_is_E2(_: &Ctx, d: usize) -> Outcome {
    let order = d + 1;
    let h = hstar_series(&Poly::one(), &b(), order).substitute(&subst(&[(Var::Q, qp(2)), (Var::B, q())]))?;
    let e2 = q_exponential(2, order).subst_z(&int(-1));
    same_series(at!(part = 0), &h, &e2)?;
    for k in 0..=d as u32 {
        let inner: Poly = (0..=k)
            .map(|j| qbinom(k, i64::from(j)).rescale_q(2) * Poly::q_pow(j))
            .sum();
        let product: Poly = (1..=k).map(|i| Poly::one() + Poly::q_pow(i)).product();
        same(at!(k = k), &inner, &product)?;
    }
    Ok(())
}

pub(super) fn gauss_specialization(ctx: &Ctx, d: usize) -> Outcome {
    let at1m1 = subst(&[(Var::A, Poly::one()), (Var::B, int(-1))]);
    let rs = rogers_szego_seq(2 * d + 1);
    for n in 0..=d {
        same(
            at!(n = 2 * n + 1),
            &rs[2 * n + 1].substitute(&at1m1),
            &Poly::zero(),
        )?;
        let product: Poly = (1..=n).map(|i| Poly::one() - qp(2 * i - 1)).product();
        same(at!(n = 2 * n), &rs[2 * n].substitute(&at1m1), &product)?;
    }
    let cs = ctx.seq(CStar, 2 * d + 2);
    let cat = ctx.seq(QCatalan, d);
    for n in 0..=d {
        let sign = if n % 2 == 1 { -1 } else { 1 };
        let rhs = (cat[n].rescale_q(2) * qp(n)).scale(&sign.into());
        same(at!(n = 2 * n + 1), &cs[2 * n + 1].substitute(&at1m1), &rhs)?;
        same(
            at!(n = 2 * n + 2),
            &cs[2 * n + 2].substitute(&at1m1),
            &Poly::zero(),
        )?;
    }
    Ok(())
}

pub(super) fn nstar_symmetry(ctx: &Ctx, d: usize) -> Outcome {
    let tri = nstar_triangle(d + 1);
    let rec = ctx.seq(CStar, d);
    for n in 1..=d {
        for k in 1..=n {
            same(at!(n = n, k = k), tri.get(n, k), tri.get(n, n - k + 1))?;
            let expect = Poly::constant(binomial(n as i64 - 1, k as i64 - 1));
            same(at!(n = n, k = k), &tri.get(n, k).at_q(0), &expect)?;
        }
        let at110 = subst(&[
            (Var::A, Poly::one()),
            (Var::B, Poly::one()),
            (Var::Q, Poly::zero()),
        ]);
        same(
            at!(n = n),
            &rec[n].substitute(&at110),
            &Poly::constant(BigInt::from(1) << (n - 1)),
        )?;
    }
    let f = ratio(RatioKind::FStar, d + 1)?;
    let swapped = f.substitute(&subst(&[(Var::A, b()), (Var::B, a())]))?;
    same_series(at!(part = 0), &f, &swapped)
}

pub(super) fn narayana_q0(ctx: &Ctx, d: usize) -> Outcome {
    let rec = ctx.seq(Narayana, d);
    let tri = narayana_triangle(d + 1);
    for (n, c) in rec.iter().enumerate() {
        same(at!(n = n), &c.at_q(0), &(a() + b()).pow(n as u32))?;
        if n >= 1 {
            for k in 0..=n {
                let expect = Poly::constant(binomial(n as i64 - 1, k as i64 - 1));
                same(at!(n = n, k = k), &tri.get(n, k).at_q(0), &expect)?;
            }
        }
    }
    Ok(())
}

/// Reduces `p(a, b)` modulo `a + b = 1`, `ab = 1`, i.e. evaluates at the
/// primitive sixth roots of unity `(1 ± sqrt(-3))/2`. Returns `c_0 + c_1 a`.
fn reduce_at_sixth_roots(p: &Poly) -> Poly {
    let p = p.substitute(&subst(&[(Var::B, Poly::one() - a())]));
    let top = p.degree_in(Var::A).unwrap_or(0);
    let mut by_a: Vec<Poly> = (0..=top).map(|e| p.coeff_ab(e, 0)).collect();
    // a^2 = a - 1
    for e in (2..by_a.len()).rev() {
        let c = core::mem::take(&mut by_a[e]);
        by_a[e - 1] += &c;
        by_a[e - 2] -= &c;
    }
    let linear = by_a.get(1).cloned().unwrap_or_default() * a();
    by_a[0].clone() + linear
}

const MOTZKIN_PRINTED: [&[i64]; 5] = [&[1], &[1], &[1, 1], &[1, 2, 1], &[1, 3, 3, 1, 1]];

pub(super) fn motzkin_values(ctx: &Ctx, d: usize) -> Outcome {
    let rec = ctx.seq(Motzkin, d);
    for (n, c) in MOTZKIN_PRINTED.iter().enumerate().take(d + 1) {
        same(at!(n = n), &rec[n], &qpoly(c))?;
    }
    let order = d + 1;
    let m = Series::from_polys(rec.iter().cloned());
    let rhs = sum(&[one(order), m.mul_z(), z2(&(&m * &m.scale_z(1))).mul_poly(&q())]);
    same_series(at!(part = 0), &m, &rhs)?;
    let jf = closed_jfraction(ClosedFamily::Motzkin, order, &a(), &b());
    same_seq("n", &moments_from_jfraction(&jf, order)?, &rec)?;
    let cs = cstar_seq(d + 1);
    for n in 0..=d {
        let fstar_moment = cs[n + 1].exact_div(&a()).at(at!(n = n))?;
        same(at!(n = n), &reduce_at_sixth_roots(&fstar_moment), &rec[n])?;
    }
    Ok(())
}

pub(super) fn motzkin_hankel(ctx: &Ctx, d: usize) -> Outcome {
    let seq = ctx.seq(Motzkin, 2 * d + 1);
    let jf = closed_jfraction(ClosedFamily::Motzkin, d + 1, &a(), &b());
    let ds = d_sequence(&jf, d + 1)?;
    for shift in 0..=1 {
        for n in 0..=d {
            let det = hankel_det(&seq, shift, n)?;
            same(
                at!(shift = shift, n = n),
                &det,
                &expected_hankel(Motzkin, shift, n, &a(), &b())?,
            )?;
            let lemma = if shift == 0 {
                t_product(&jf, n)
            } else {
                &ds[n + 1] * &t_product(&jf, n)
            };
            same(at!(shift = shift, n = n), &det, &lemma)?;
        }
    }
    Ok(())
}

pub(super) fn motzkin_d_periodic(_: &Ctx, d: usize) -> Outcome {
    let terms = 3 * d;
    let jf = closed_jfraction(ClosedFamily::Motzkin, terms, &a(), &b());
    let ds = d_sequence(&jf, terms - 1)?;
    for (n, dn) in ds.iter().enumerate() {
        let delta = motzkin_delta(n);
        same(at!(n = n), &dn.at_q(1), &int(delta))?;
        same(at!(n = n), dn, &qp(tri(n as u32) as usize).scale(&delta.into()))?;
    }
    Ok(())
}

pub(super) fn gould_special_values(_: &Ctx, d: usize) -> Outcome {
    let mut tables: Vec<GouldTable> = (0..=3).map(GouldTable::new).collect();
    for k in 0..=d as u32 {
        for n in 0..=d as u32 {
            let (ki, ni) = (i64::from(k), i64::from(n));
            let g0 = tables[0].get(k, n);
            same(
                at!(r = 0, k = k, n = n),
                &g0,
                &(qbinom(n, ki) * Poly::q_pow(tri(k))),
            )?;
            let g1 = tables[1].get(k, n);
            same(at!(r = 1, k = k, n = n), &g1, &qbinom_ext(ni + ki - 1, ki))?;
            if n == 0 {
                continue;
            }
            for (r, table) in tables.iter_mut().enumerate() {
                let top = ni + r as i64 * ki;
                let closed = binomial(top, ki) * BigInt::from(n) / BigInt::from(top);
                same(
                    at!(r = r, k = k, n = n),
                    &table.get(k, n).at_q(1),
                    &Poly::constant(closed),
                )?;
            }
        }
    }
    Ok(())
}

fn same_jfraction(family: usize, got: &JFraction, want: &JFraction) -> Outcome {
    for k in 0..want.depth() {
        same(at!(family = family, s = k), &got.s[k], &want.s[k])?;
        same(at!(family = family, t = k), &got.t[k], &want.t[k])?;
    }
    Ok(())
}

pub(super) fn jfraction_extraction(ctx: &Ctx, d: usize) -> Outcome {
    let (a, b) = (a(), b());
    let cases = [
        (ctx.seq(Narayana, 2 * d), ClosedFamily::Narayana),
        (
            normalized_cstar(&ctx.seq(CStar, 2 * d + 1))?,
            ClosedFamily::CStarShift1,
        ),
        (ctx.seq(CStar, 2 * d), ClosedFamily::CStarShift0),
        (ctx.seq(Motzkin, 2 * d), ClosedFamily::Motzkin),
    ];
    for (i, (mu, family)) in cases.into_iter().enumerate() {
        let got = jfraction_from_moments(&MomentFunctional::new(mu), d).at(at!(family = i))?;
        same_jfraction(i, &got, &closed_jfraction(family, d, &a, &b))?;
    }
    Ok(())
}
