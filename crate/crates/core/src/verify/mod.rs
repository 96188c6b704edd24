//! Named identity checks, each parameterized by a single depth `d`: sequence
//! indices, matrix sizes `n` and series orders (`d + 1` coefficients) all run
//! up to `d`.

mod checks;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::VerifyError;
use crate::hankel::{family_sequence, HankelFamily};
use crate::polyring::Poly;

/// First counterexample of a failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Index tuple, e.g. `[("r", 2), ("k", 3)]`.
    pub at: Vec<(String, i64)>,
    pub lhs: String,
    pub rhs: String,
    /// Set when an arithmetic error stopped the check.
    pub error: Option<String>,
}

impl Failure {
    pub(crate) fn mismatch(at: Vec<(String, i64)>, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Failure {
            at,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            error: None,
        }
    }

    pub(crate) fn error(at: Vec<(String, i64)>, err: impl fmt::Display) -> Self {
        Failure {
            at,
            lhs: String::new(),
            rhs: String::new(),
            error: Some(err.to_string()),
        }
    }

    pub fn location(&self) -> String {
        let parts: Vec<String> = self.at.iter().map(|(k, v)| alloc::format!("{k}={v}")).collect();
        parts.join(", ")
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}", self.location())?;
        match &self.error {
            Some(e) => write!(f, ": {e}"),
            None => write!(f, ": lhs = {}; rhs = {}", self.lhs, self.rhs),
        }
    }
}

macro_rules! impl_failure_from {
    ($($err:ty),*) => {$(
        impl From<$err> for Failure {
            fn from(e: $err) -> Self {
                Failure::error(Vec::new(), e)
            }
        }
    )*};
}

impl_failure_from!(
    crate::error::PolyError,
    crate::error::SeriesError,
    crate::error::HankelError,
    crate::error::JFractionError
);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub depth: usize,
    pub passed: bool,
    pub failure: Option<Failure>,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} (depth {})", self.name, self.depth),
            Some(fail) => write!(f, "FAIL {} (depth {}) {fail}", self.name, self.depth),
        }
    }
}

/// Test fixture: adds 1 to the recurrence value of `family` at `index`
/// wherever a check consumes that sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Defect {
    pub family: HankelFamily,
    pub index: usize,
}

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Ctx {
    defect: Option<Defect>,
}

impl Ctx {
    /// `0..=upto` of the family's recurrence sequence.
    pub(crate) fn seq(&self, family: HankelFamily, upto: usize) -> Vec<Poly> {
        let mut s = family_sequence(family, upto + 1);
        if let Some(d) = self.defect {
            if d.family == family && d.index <= upto {
                s[d.index] += &Poly::one();
            }
        }
        s
    }
}

type CheckFn = fn(&Ctx, usize) -> Result<(), Failure>;

#[derive(Clone, Copy)]
pub struct CheckInfo {
    pub name: &'static str,
    pub anchor: &'static str,
    run: CheckFn,
}

impl fmt::Debug for CheckInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckInfo")
            .field("name", &self.name)
            .field("anchor", &self.anchor)
            .finish()
    }
}

macro_rules! registry {
    ($($name:ident => $anchor:expr),* $(,)?) => {
        const REGISTRY: &[CheckInfo] = &[
            $(CheckInfo { name: stringify!($name), anchor: $anchor, run: checks::$name },)*
        ];
    };
}

registry! {
    eq1_catalan_ratio => "f(z,q) = E_2(−qz)/E_2(−z)",
    eq3_er_functional => "E_r(z) − E_r(qz) = zE_r(q^r z)",
    eq5_gr_recurrence => "G_r(z,n+1) = G_r(z,n) + q^n z G_r(z,n+r)",
    eq6_gould_coeffs => "(G(k,n+1,r) − G(k,n,r))/q^n = G(k−1,n+r,r)",
    eq7_gr1 => "G_r(z,1) = 1 + zG_r(z,r)",
    eq8_eq9_products => "G_r(z,n) = G_r(z,1)G_r(qz,1)⋯G_r(q^{n−1}z,1); G_r(z,m+n) = G_r(z,m)G_r(q^m z,n)",
    eq12_f_functional => "f(z,a,b,q) = 1 + azf(z,a,b,q) + bzf(z,a,b,q)f(qz,a,b,q)",
    eq13_15_recurrence_vs_ratio => "C_n(a,b,q) = aC_{n−1} + b Σ q^k C_k C_{n−k−1}",
    eq14_q1_closed_form => "C_n(a,b) = (1/n) Σ binom(n,k) binom(n,k−1) b^{n−k} (a+b)^k",
    eq16_triangle_roundtrip => "C_n(a,b,q) = Σ N(n,k,q) (a∔b)^k b^{n−k}",
    eq17_ratio_identity => "(f(qz)−1)/(f(z)−1) = q f(qz,a,qb,q)/f(z,a,b,q)",
    eq21_23_g_chain => "g(z) = 1 + q(a+b+qb)zg(z) + q^4 b(a+qb)z^2 g(z)g(qz,a,qb,q)",
    thm_eq18_eq19_hankel => "det(C_{i+j}(a,b,q)) = q^{n^2(n+1)/2} b^{binom(n+1,2)} (a+b)^n (a+qb)^{n−1} ⋯ (a+q^{n−1}b)",
    lemma_product_law => "det(μ_{i+j}) = t_0^n t_1^{n−1} ⋯ t_{n−1}",
    lemma_shifted_law => "det(μ_{i+j+1}) = d_{n+1} t_0^n t_1^{n−1} ⋯ t_{n−1}",
    lemma_orthogonality => "F(p_n p_m) = t_0 ⋯ t_{n−1} [n = m]",
    remark_orthopoly_explicit => "p_n(z,a,b,q) = Σ_k (−1)^{n−k} q^{binom(n−k,2)} z^k Σ_j q^{binom(n+1,2)−binom(n+k+1−j,2)} [n+k−j, k][j−1, k−1] b^{j−k} (a∔b)^{n−j}",
    eq24_26_hstar_functional => "f*(z) = 1 + (a+b)zf*(z) + qabz^2 f*(z)f*(qz)",
    eq27_29_cstar => "C*_n = aC*_{n−1} + b Σ_{k=0}^{n−2} q^k C*_k C*_{n−1−k}",
    eq28_F_identity => "F(z,a,b,q) = 1 + azF(z,a,b,q)F(z,b,qa,q)",
    eq30_31_hankel_cstar => "det(C*_{i+j+1}(a,b,q)) = (ab)^{binom(n+1,2)} q^{n(n+1)(2n+1)/6}",
    cstar_shift0_hankel => "det(C*_{i+j}(a,b,q)) = (ab)^{binom(n+1,2)} q^{n(n+1)(n−1)/3}",
    polya_gessel_values => "C*_n(1,s,q) = 1, 1, 1+s, 1+2s+qs+s^2, …",
    cn_eq_cstar_1_q_q2 => "C_n(q) = C*_n(1, q, q²)",
    hstar_is_E2 => "h*(z,1,q,q²) = E_2(−z)",
    gauss_specialization => "From Gauss's formula r_{2n+1}(1,−1) = 0, r_{2n}(1,−1) = (1−q)(1−q^3)⋯(1−q^{2n−1})",
    nstar_symmetry => "N*(n,k,q) = N*(n,n−k+1,q)",
    narayana_q0 => "C_n(a,b,0) = (a+b)^n, N(n,k,0) = binom(n−1,k−1)",
    motzkin_values => "M(z) = 1 + zM(z) + qz^2 M(z)M(qz)",
    motzkin_hankel => "The Hankel determinants are easily seen to be det(M_{i+j}(q)) = q^{n(n+1)(2n+1)/6}",
    motzkin_d_periodic => "(d_n) = (1, 1, 0, −1, −1, 0, 1, 1, 0, …) is periodic with period 6",
    gould_special_values => "special values are G(k,n,0) = q^{binom(k,2)}[n, k] and G(k,n,1) = [n+k−1, k]",
    jfraction_extraction => "s_n = q^n(a+q^{n−1}b+q^n b), t_n = q^{3n+1}b(q^n b+a)",
    cstar_orthopoly_explicit => "p_n(z,a,b) = Σ_k (−1)^{n−k} q^{binom(n−k,2)} z^k Σ_j [n+k−j, k][j, k] a^{j−k} b^{n−j}",
    rogers_szego_definition => "r_n = (a+b)r_{n−1} + ab(q^{n−1} − 1)r_{n−2}",
}

/// Every registered check with its formula anchor.
pub fn list_checks() -> &'static [CheckInfo] {
    REGISTRY
}

/// Runs checks with an optional injected defect.
#[derive(Clone, Copy, Debug, Default)]
pub struct Verifier {
    ctx: Ctx,
}

impl Verifier {
    pub fn new() -> Self {
        Verifier::default()
    }

    pub fn with_defect(defect: Defect) -> Self {
        Verifier {
            ctx: Ctx { defect: Some(defect) },
        }
    }

    pub fn run(&self, name: &str, depth: usize) -> Result<CheckReport, VerifyError> {
        if depth == 0 {
            return Err(VerifyError::ZeroDepth);
        }
        let info = REGISTRY
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| VerifyError::UnknownCheck { name: name.into() })?;
        let failure = (info.run)(&self.ctx, depth).err();
        Ok(CheckReport {
            name: info.name.into(),
            depth,
            passed: failure.is_none(),
            failure,
        })
    }

    pub fn run_all(&self, depth: usize) -> Result<Vec<CheckReport>, VerifyError> {
        REGISTRY.iter().map(|c| self.run(c.name, depth)).collect()
    }
}

pub fn run_check(name: &str, depth: usize) -> Result<CheckReport, VerifyError> {
    Verifier::new().run(name, depth)
}

pub fn run_all(depth: usize) -> Result<Vec<CheckReport>, VerifyError> {
    Verifier::new().run_all(depth)
}
