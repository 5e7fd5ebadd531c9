//! Supersymmetric shift operator, the discrete Sturm–Liouville operator and
//! the Hill equation
//!
//! ```text
//! Vᵢ = aᵢ·Vᵢ₋₁ − Vᵢ₋₂ − βᵢ·Wᵢ₋₁
//! Wᵢ = Wᵢ₋₁ + βᵢ·Vᵢ₋₁
//! ```
//!
//! with coefficients extended by `aᵢ₊ₙ = aᵢ`, `βᵢ₊ₙ = −βᵢ`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::grassmann::{Parity, SuperScalar};
use crate::supermatrix::{MatrixError, SuperMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HillError {
    #[error("parity mismatch: {0}")]
    ParityMismatch(String),
    #[error("input sequence has too small a support for this operator")]
    InsufficientSupport,
    #[error("period must be at least {min}, got {got}")]
    PeriodTooSmall { min: usize, got: usize },
    #[error("coefficient lists have lengths {a} and {beta}")]
    LengthMismatch { a: usize, beta: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// `V + ξW` as two index-keyed maps. Each component is known on its own
/// set of indices; operators produce values exactly where their inputs are
/// known.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SuperSequencePair {
    pub v: BTreeMap<i64, SuperScalar>,
    pub w: BTreeMap<i64, SuperScalar>,
}

impl SuperSequencePair {
    #[must_use]
    pub fn new(v: BTreeMap<i64, SuperScalar>, w: BTreeMap<i64, SuperScalar>) -> Self {
        SuperSequencePair { v, w }
    }

    /// Both components on `start..start+len`.
    #[must_use]
    pub fn from_vecs(start: i64, v: Vec<SuperScalar>, w: Vec<SuperScalar>) -> Self {
        let index = |k: usize| start + k as i64;
        SuperSequencePair {
            v: v.into_iter().enumerate().map(|(k, x)| (index(k), x)).collect(),
            w: w.into_iter().enumerate().map(|(k, x)| (index(k), x)).collect(),
        }
    }

    pub fn v_at(&self, i: i64) -> Option<&SuperScalar> {
        self.v.get(&i)
    }

    pub fn w_at(&self, i: i64) -> Option<&SuperScalar> {
        self.w.get(&i)
    }

    pub fn is_empty(&self) -> bool {
        self.v.is_empty() && self.w.is_empty()
    }

    /// True if the pair vanishes wherever it is defined.
    pub fn is_zero(&self) -> bool {
        self.v.values().chain(self.w.values()).all(SuperScalar::is_zero)
    }

    /// Equality on the indices where both pairs are defined, provided the
    /// overlap is nonempty in each component that either pair defines.
    pub fn agrees_with(&self, other: &SuperSequencePair) -> bool {
        fn component(a: &BTreeMap<i64, SuperScalar>, b: &BTreeMap<i64, SuperScalar>) -> bool {
            let mut overlap = false;
            for (i, x) in a {
                if let Some(y) = b.get(i) {
                    overlap = true;
                    if x != y {
                        return false;
                    }
                }
            }
            overlap || (a.is_empty() && b.is_empty())
        }
        component(&self.v, &other.v) && component(&self.w, &other.w)
    }

    /// Component-wise sum where both summands are known.
    #[must_use]
    pub fn add(&self, other: &SuperSequencePair) -> SuperSequencePair {
        fn zip(
            a: &BTreeMap<i64, SuperScalar>,
            b: &BTreeMap<i64, SuperScalar>,
        ) -> BTreeMap<i64, SuperScalar> {
            a.iter()
                .filter_map(|(i, x)| b.get(i).map(|y| (*i, x + y)))
                .collect()
        }
        SuperSequencePair {
            v: zip(&self.v, &other.v),
            w: zip(&self.w, &other.w),
        }
    }

    #[must_use]
    pub fn negate(&self) -> SuperSequencePair {
        SuperSequencePair {
            v: self.v.iter().map(|(i, x)| (*i, -x)).collect(),
            w: self.w.iter().map(|(i, x)| (*i, -x)).collect(),
        }
    }

    /// Multiplies both components on the left by a constant.
    #[must_use]
    pub fn scale(&self, c: &SuperScalar) -> SuperSequencePair {
        SuperSequencePair {
            v: self.v.iter().map(|(i, x)| (*i, c * x)).collect(),
            w: self.w.iter().map(|(i, x)| (*i, c * x)).collect(),
        }
    }
}

fn shifted(map: &BTreeMap<i64, SuperScalar>, by: i64) -> BTreeMap<i64, SuperScalar> {
    map.iter().map(|(i, x)| (i + by, x.clone())).collect()
}

/// `(T s)ᵢ = sᵢ₋₁` on both components.
#[must_use]
pub fn shift_t(s: &SuperSequencePair) -> SuperSequencePair {
    SuperSequencePair {
        v: shifted(&s.v, 1),
        w: shifted(&s.w, 1),
    }
}

/// The supersymmetric shift `∂/∂ξ − ξT`: `V + ξW ↦ W − ξ·TV`.
#[must_use]
pub fn super_shift(s: &SuperSequencePair) -> SuperSequencePair {
    SuperSequencePair {
        v: s.w.clone(),
        w: s.v.iter().map(|(i, x)| (i + 1, -x)).collect(),
    }
}

/// Parity swap `V + ξW ↦ W + ξV`.
#[must_use]
pub fn parity_swap(s: &SuperSequencePair) -> SuperSequencePair {
    SuperSequencePair {
        v: s.w.clone(),
        w: s.v.clone(),
    }
}

/// Action of the element `(k, λ)` of ℤ × odd constants:
/// `V + ξW ↦ Vᵢ₊ₖ − λWᵢ₊ₖ + ξ(λVᵢ₊ₖ₋₁ + Wᵢ₊ₖ)`.
pub fn group_action(
    k: i64,
    lambda: &SuperScalar,
    s: &SuperSequencePair,
) -> Result<SuperSequencePair, HillError> {
    if !lambda.is_odd() {
        return Err(HillError::ParityMismatch("group parameter λ must be odd".into()));
    }
    let mut out = SuperSequencePair::default();
    for (&j, vj) in &s.v {
        if let Some(wj) = s.w.get(&j) {
            out.v.insert(j - k, vj - lambda * wj);
        }
        if let Some(wnext) = s.w.get(&(j + 1)) {
            out.w.insert(j + 1 - k, lambda * vj + wnext);
        }
    }
    Ok(out)
}

/// `s + ε·T s` for an even constant `ε`; for nilpotent `ε` this is the
/// first-order translation by `ε` that appears when two group actions are
/// composed.
pub fn nilpotent_translate(
    epsilon: &SuperScalar,
    s: &SuperSequencePair,
) -> Result<SuperSequencePair, HillError> {
    if !epsilon.is_even() {
        return Err(HillError::ParityMismatch("translation parameter must be even".into()));
    }
    Ok(s.add(&shift_t(s).scale(epsilon)))
}

/// Multiplication by a sequence-valued potential `P = p + ξq` where `p` has
/// parity `p_parity`: `P·(V + ξW) = pV + ξ(±pW + qV)`.
fn multiply_potential(
    p_parity: Parity,
    p: impl Fn(i64) -> SuperScalar,
    q: impl Fn(i64) -> SuperScalar,
    s: &SuperSequencePair,
) -> SuperSequencePair {
    let mut out = SuperSequencePair::default();
    for (&i, vi) in &s.v {
        out.v.insert(i, p(i) * vi);
        if let Some(wi) = s.w.get(&i) {
            let pw = p(i) * wi;
            let signed = match p_parity {
                Parity::Even => pw,
                Parity::Odd => -pw,
            };
            out.w.insert(i, signed + q(i) * vi);
        }
    }
    out
}

fn require_nonempty(s: SuperSequencePair) -> Result<SuperSequencePair, HillError> {
    if s.v.is_empty() || s.w.is_empty() {
        Err(HillError::InsufficientSupport)
    } else {
        Ok(s)
    }
}

/// Coefficients `a₁..aₙ` (even) and `β₁..βₙ` (odd) of a Hill equation.
///
/// The first list element carries index `start` (1 unless stated).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HillCoefficients {
    n: usize,
    a: Vec<SuperScalar>,
    beta: Vec<SuperScalar>,
    #[serde(default = "default_start", skip_serializing_if = "is_default_start")]
    start: i64,
}

fn default_start() -> i64 {
    1
}

#[allow(clippy::trivially_copy_pass_by_ref)]
fn is_default_start(s: &i64) -> bool {
    *s == 1
}

impl HillCoefficients {
    pub fn new(a: Vec<SuperScalar>, beta: Vec<SuperScalar>) -> Result<Self, HillError> {
        Self::with_start(1, a, beta)
    }

    pub fn with_start(
        start: i64,
        a: Vec<SuperScalar>,
        beta: Vec<SuperScalar>,
    ) -> Result<Self, HillError> {
        if a.len() != beta.len() {
            return Err(HillError::LengthMismatch {
                a: a.len(),
                beta: beta.len(),
            });
        }
        if a.len() < 3 {
            return Err(HillError::PeriodTooSmall {
                min: 3,
                got: a.len(),
            });
        }
        for (k, x) in a.iter().enumerate() {
            if !x.is_even() {
                return Err(HillError::ParityMismatch(format!(
                    "a{} = {x} is not even",
                    start + k as i64
                )));
            }
        }
        for (k, x) in beta.iter().enumerate() {
            if !x.is_odd() {
                return Err(HillError::ParityMismatch(format!(
                    "beta{} = {x} is not odd",
                    start + k as i64
                )));
            }
        }
        Ok(HillCoefficients {
            n: a.len(),
            a,
            beta,
            start,
        })
    }

    /// Free generators `a₁..aₙ` (even) and `b₁..bₙ` (odd).
    #[must_use]
    pub fn symbolic(n: usize) -> Self {
        let a = (1..=n as i64).map(|i| SuperScalar::even("a", i)).collect();
        let beta = (1..=n as i64).map(|i| SuperScalar::odd("b", i)).collect();
        Self::new(a, beta).expect("symbolic coefficients are homogeneous")
    }

    /// Re-validates coefficients after deserialization.
    pub fn validated(self) -> Result<Self, HillError> {
        if self.n != self.a.len() {
            return Err(HillError::LengthMismatch {
                a: self.a.len(),
                beta: self.n,
            });
        }
        Self::with_start(self.start, self.a, self.beta)
    }

    pub fn period(&self) -> usize {
        self.n
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn a_list(&self) -> &[SuperScalar] {
        &self.a
    }

    pub fn beta_list(&self) -> &[SuperScalar] {
        &self.beta
    }

    fn locate(&self, i: i64) -> (usize, bool) {
        let k = i - self.start;
        let n = self.n as i64;
        (k.rem_euclid(n) as usize, k.div_euclid(n) % 2 != 0)
    }

    /// `aᵢ` for any integer `i`.
    #[must_use]
    pub fn a(&self, i: i64) -> SuperScalar {
        self.a[self.locate(i).0].clone()
    }

    /// `βᵢ` for any integer `i`, antiperiodic with period `n`.
    #[must_use]
    pub fn beta(&self, i: i64) -> SuperScalar {
        let (r, flip) = self.locate(i);
        if flip {
            -&self.beta[r]
        } else {
            self.beta[r].clone()
        }
    }

    /// The same coefficients listed from index `start`.
    #[must_use]
    pub fn reindexed(&self, start: i64) -> HillCoefficients {
        let period = start..start + self.n as i64;
        HillCoefficients {
            n: self.n,
            a: period.clone().map(|i| self.a(i)).collect(),
            beta: period.map(|i| self.beta(i)).collect(),
            start,
        }
    }

    /// Applies a substitution to every coefficient.
    pub fn substitute(
        &self,
        values: &BTreeMap<crate::grassmann::GeneratorId, SuperScalar>,
    ) -> Result<HillCoefficients, crate::grassmann::GrassmannError> {
        Ok(HillCoefficients {
            n: self.n,
            a: self
                .a
                .iter()
                .map(|x| x.substitute(values))
                .collect::<Result<_, _>>()?,
            beta: self
                .beta
                .iter()
                .map(|x| x.substitute(values))
                .collect::<Result<_, _>>()?,
            start: self.start,
        })
    }
}

/// `ℒ(V + ξW)` written out:
/// `Wᵢ − Wᵢ₋₁ − βᵢVᵢ₋₁ + ξ(Vᵢ − aᵢVᵢ₋₁ + Vᵢ₋₂ + βᵢWᵢ₋₁)`.
pub fn apply_sturm_liouville(
    c: &HillCoefficients,
    s: &SuperSequencePair,
) -> Result<SuperSequencePair, HillError> {
    let mut out = SuperSequencePair::default();
    for (&i, wi) in &s.w {
        if let (Some(wp), Some(vp)) = (s.w.get(&(i - 1)), s.v.get(&(i - 1))) {
            out.v.insert(i, wi - wp - c.beta(i) * vp);
        }
    }
    for (&i, vi) in &s.v {
        if let (Some(v1), Some(v2), Some(w1)) =
            (s.v.get(&(i - 1)), s.v.get(&(i - 2)), s.w.get(&(i - 1)))
        {
            out.w.insert(i, vi - c.a(i) * v1 + v2 + c.beta(i) * w1);
        }
    }
    require_nonempty(out)
}

/// `ℒ = 𝕿³ + U𝕿² + Π` with potential `Uᵢ = βᵢ + ξaᵢ`, evaluated by
/// composing the operators.
pub fn apply_sturm_liouville_composed(
    c: &HillCoefficients,
    s: &SuperSequencePair,
) -> Result<SuperSequencePair, HillError> {
    let t2 = super_shift(&super_shift(s));
    let t3 = super_shift(&t2);
    let ut2 = multiply_potential(Parity::Odd, |i| c.beta(i), |i| c.a(i), &t2);
    require_nonempty(t3.add(&ut2).add(&parity_swap(s)))
}

/// The matrix `Aᵢ = ((0,1,0), (−1,aᵢ,−βᵢ), (0,βᵢ,1))` with block (2,1).
pub fn transfer_matrix(a: &SuperScalar, beta: &SuperScalar) -> Result<SuperMatrix, HillError> {
    if !a.is_even() {
        return Err(HillError::ParityMismatch(format!("a = {a} is not even")));
    }
    if !beta.is_odd() {
        return Err(HillError::ParityMismatch(format!("beta = {beta} is not odd")));
    }
    let z = SuperScalar::zero;
    Ok(SuperMatrix::new(
        2,
        1,
        vec![
            vec![z(), SuperScalar::one(), z()],
            vec![SuperScalar::from_integer(-1), a.clone(), -beta],
            vec![z(), beta.clone(), SuperScalar::one()],
        ],
    )?)
}

fn check_init_parity(vs: &[&SuperScalar], ws: &[&SuperScalar]) -> Result<(), HillError> {
    let fits = |p: Parity| {
        vs.iter().all(|x| x.has_parity(p)) && ws.iter().all(|x| x.has_parity(p.flip()))
    };
    if fits(Parity::Even) || fits(Parity::Odd) {
        Ok(())
    } else {
        Err(HillError::ParityMismatch(
            "initial V values and W values must be homogeneous of opposite parity".into(),
        ))
    }
}

/// Runs the recurrence from `(Vᵢ₋₂, Vᵢ₋₁, Wᵢ₋₁)` at `i = from` for `steps`
/// steps. The result holds V on `from−2 .. from+steps−1` and W on
/// `from−1 .. from+steps−1`.
pub fn propagate(
    c: &HillCoefficients,
    init: [SuperScalar; 3],
    from: i64,
    steps: usize,
) -> Result<SuperSequencePair, HillError> {
    let [v2, v1, w1] = init;
    check_init_parity(&[&v2, &v1], &[&w1])?;
    let mut out = SuperSequencePair::default();
    out.v.insert(from - 2, v2.clone());
    out.v.insert(from - 1, v1.clone());
    out.w.insert(from - 1, w1.clone());
    let (mut v_prev2, mut v_prev, mut w_prev) = (v2, v1, w1);
    for i in from..from + steps as i64 {
        let a = c.a(i);
        let beta = c.beta(i);
        let v = &a * &v_prev - &v_prev2 - &beta * &w_prev;
        let w = &w_prev + &beta * &v_prev;
        out.v.insert(i, v.clone());
        out.w.insert(i, w.clone());
        v_prev2 = std::mem::replace(&mut v_prev, v);
        w_prev = w;
    }
    Ok(out)
}

/// A Hill equation with its transfer matrices for one period.
#[derive(Debug, Clone)]
pub struct HillSystem {
    coeffs: HillCoefficients,
    transfer: Vec<SuperMatrix>,
    monodromy_base: i64,
}

impl HillSystem {
    pub fn new(coeffs: HillCoefficients) -> Result<Self, HillError> {
        let base = coeffs.start();
        Self::with_base(coeffs, base)
    }

    pub fn with_base(coeffs: HillCoefficients, base: i64) -> Result<Self, HillError> {
        let transfer = (base..base + coeffs.period() as i64)
            .map(|i| transfer_matrix(&coeffs.a(i), &coeffs.beta(i)))
            .collect::<Result<_, _>>()?;
        Ok(HillSystem {
            coeffs,
            transfer,
            monodromy_base: base,
        })
    }

    pub fn coefficients(&self) -> &HillCoefficients {
        &self.coeffs
    }

    pub fn period(&self) -> usize {
        self.coeffs.period()
    }

    pub fn base(&self) -> i64 {
        self.monodromy_base
    }

    /// `Aᵢ` for any integer `i`.
    #[must_use]
    pub fn transfer(&self, i: i64) -> SuperMatrix {
        let k = i - self.monodromy_base;
        if (0..self.transfer.len() as i64).contains(&k) {
            return self.transfer[k as usize].clone();
        }
        transfer_matrix(&self.coeffs.a(i), &self.coeffs.beta(i))
            .expect("coefficients were validated as homogeneous")
    }

    /// `Mᵢ = Aᵢ₊ₙ₋₁ ⋯ Aᵢ₊₁ Aᵢ`.
    #[must_use]
    pub fn monodromy_at(&self, i: i64) -> SuperMatrix {
        let mut acc = self.transfer(i);
        for k in i + 1..i + self.period() as i64 {
            acc = self
                .transfer(k)
                .mat_mul(&acc)
                .expect("transfer matrices share block (2,1)");
        }
        acc
    }

    #[must_use]
    pub fn monodromy(&self) -> SuperMatrix {
        self.monodromy_at(self.monodromy_base)
    }

    pub fn satisfies_hill_condition(&self) -> bool {
        check_hill_condition(&self.monodromy())
    }
}

/// `M = diag(−1, −1, 1)`, i.e. every solution has `Vᵢ₊ₙ = −Vᵢ`, `Wᵢ₊ₙ = Wᵢ`.
pub fn check_hill_condition(m: &SuperMatrix) -> bool {
    *m == SuperMatrix::hill_target()
}

/// Scales an equation so that its greatest monomial has coefficient 1.
#[must_use]
pub fn normalize_equation(eq: &SuperScalar) -> SuperScalar {
    match eq.terms().last() {
        None => SuperScalar::zero(),
        Some((_, q)) => eq.scale(&q.recip()),
    }
}

/// Entries of `Mᵢ − diag(−1,−1,1)` for symbolic coefficients, at monodromy
/// base `i`.
#[must_use]
pub fn monodromy_defect(n: usize, base: i64) -> SuperMatrix {
    let sys = HillSystem::with_base(HillCoefficients::symbolic(n), base)
        .expect("symbolic coefficients are homogeneous");
    let m = sys.monodromy();
    let target = SuperMatrix::hill_target();
    SuperMatrix::from_fn(2, 1, |r, c| m.get(r, c) - target.get(r, c))
}

/// Nonzero, normalized, deduplicated entries of the monodromy defect at
/// base 1 for free generators `a₁..aₙ`, `b₁..bₙ`.
#[must_use]
pub fn supervariety_equations(n: usize) -> Vec<SuperScalar> {
    supervariety_equations_at(n, 1)
}

#[must_use]
pub fn supervariety_equations_at(n: usize, base: i64) -> Vec<SuperScalar> {
    let defect = monodromy_defect(n, base);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for row in defect.rows() {
        for e in row {
            let eq = normalize_equation(e);
            if !eq.is_zero() && seen.insert(eq.clone()) {
                out.push(eq);
            }
        }
    }
    out
}

/// Coefficients `aᵢ, a′ᵢ` (even) and `βᵢ, β′ᵢ` (odd) of the order-5/2
/// recurrence, all periodic with period `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FifthHalfCoefficients {
    pub n: usize,
    pub a: Vec<SuperScalar>,
    pub a_prime: Vec<SuperScalar>,
    pub beta: Vec<SuperScalar>,
    pub beta_prime: Vec<SuperScalar>,
}

impl FifthHalfCoefficients {
    pub fn new(
        a: Vec<SuperScalar>,
        a_prime: Vec<SuperScalar>,
        beta: Vec<SuperScalar>,
        beta_prime: Vec<SuperScalar>,
    ) -> Result<Self, HillError> {
        let c = FifthHalfCoefficients {
            n: a.len(),
            a,
            a_prime,
            beta,
            beta_prime,
        };
        c.validated()
    }

    pub fn validated(self) -> Result<Self, HillError> {
        let n = self.a.len();
        if n == 0 {
            return Err(HillError::PeriodTooSmall { min: 1, got: 0 });
        }
        if self.n != n
            || self.a_prime.len() != n
            || self.beta.len() != n
            || self.beta_prime.len() != n
        {
            return Err(HillError::LengthMismatch {
                a: n,
                beta: self.beta.len(),
            });
        }
        let even_ok = self.a.iter().chain(&self.a_prime).all(SuperScalar::is_even);
        let odd_ok = self.beta.iter().chain(&self.beta_prime).all(SuperScalar::is_odd);
        if !even_ok || !odd_ok {
            return Err(HillError::ParityMismatch(
                "a, a' must be even and beta, beta' odd".into(),
            ));
        }
        Ok(self)
    }

    fn at(list: &[SuperScalar], i: i64) -> SuperScalar {
        list[i.rem_euclid(list.len() as i64) as usize].clone()
    }

    /// Values `(aᵢ, a′ᵢ, βᵢ, β′ᵢ)`; list position 0 is index 0.
    #[must_use]
    pub fn at_index(&self, i: i64) -> [SuperScalar; 4] {
        [
            Self::at(&self.a, i),
            Self::at(&self.a_prime, i),
            Self::at(&self.beta, i),
            Self::at(&self.beta_prime, i),
        ]
    }

    /// The 5×5 step matrix acting on `(Vᵢ₋₃, Vᵢ₋₂, Vᵢ₋₁, Wᵢ₋₂, Wᵢ₋₁)`.
    #[must_use]
    pub fn step_matrix(&self, i: i64) -> SuperMatrix {
        let [a, ap, b, bp] = self.at_index(i);
        let z = SuperScalar::zero;
        let one = SuperScalar::one;
        SuperMatrix::new(
            3,
            2,
            vec![
                vec![z(), one(), z(), z(), z()],
                vec![z(), z(), one(), z(), z()],
                vec![one(), -&ap, a, z(), b],
                vec![z(), z(), z(), z(), one()],
                vec![z(), z(), bp, SuperScalar::from_integer(-1), ap - one()],
            ],
        )
        .expect("step matrix is 5x5")
    }
}

/// Runs the order-5/2 recurrence from `(Vᵢ₋₃, Vᵢ₋₂, Vᵢ₋₁, Wᵢ₋₂, Wᵢ₋₁)` at
/// `i = from`.
pub fn propagate_5_2(
    c: &FifthHalfCoefficients,
    init: [SuperScalar; 5],
    from: i64,
    steps: usize,
) -> Result<SuperSequencePair, HillError> {
    let [v3, v2, v1, w2, w1] = init;
    if !(v3.is_even() && v2.is_even() && v1.is_even() && w2.is_odd() && w1.is_odd()) {
        return Err(HillError::ParityMismatch(
            "initial values must be three even then two odd".into(),
        ));
    }
    let mut out = SuperSequencePair::default();
    for (k, x) in [&v3, &v2, &v1].into_iter().enumerate() {
        out.v.insert(from - 3 + k as i64, x.clone());
    }
    out.w.insert(from - 2, w2.clone());
    out.w.insert(from - 1, w1.clone());
    let mut state = vec![v3, v2, v1, w2, w1];
    for i in from..from + steps as i64 {
        state = c.step_matrix(i).apply(&state)?;
        out.v.insert(i, state[2].clone());
        out.w.insert(i, state[4].clone());
    }
    Ok(out)
}

/// Residual of the order-5/2 recurrence: zero exactly on its solutions.
pub fn fifth_half_residual(
    c: &FifthHalfCoefficients,
    s: &SuperSequencePair,
) -> Result<SuperSequencePair, HillError> {
    let mut out = SuperSequencePair::default();
    for (&i, vi) in &s.v {
        let [a, ap, b, _] = c.at_index(i);
        if let (Some(v1), Some(v2), Some(v3), Some(w1)) = (
            s.v.get(&(i - 1)),
            s.v.get(&(i - 2)),
            s.v.get(&(i - 3)),
            s.w.get(&(i - 1)),
        ) {
            out.v.insert(i, vi - (v3 - &ap * v2 + a * v1 + b * w1));
        }
    }
    for (&i, wi) in &s.w {
        let [_, ap, _, bp] = c.at_index(i);
        if let (Some(v1), Some(w1), Some(w2)) =
            (s.v.get(&(i - 1)), s.w.get(&(i - 1)), s.w.get(&(i - 2)))
        {
            out.w.insert(i, wi - (bp * v1 - w2 + (ap - SuperScalar::one()) * w1));
        }
    }
    require_nonempty(out)
}

/// The operator `𝕿⁵ + 𝕿⁴ + F𝕿³ + G𝕿² − Π` with `Fᵢ = a′ᵢ − 1 + ξ(βᵢ + β′ᵢ)`
/// and `Gᵢ = β′ᵢ + ξaᵢ`, evaluated literally by composition.
pub fn apply_fifth_half_operator(
    c: &FifthHalfCoefficients,
    s: &SuperSequencePair,
) -> Result<SuperSequencePair, HillError> {
    let t1 = super_shift(s);
    let t2 = super_shift(&t1);
    let t3 = super_shift(&t2);
    let t4 = super_shift(&t3);
    let t5 = super_shift(&t4);
    let f = multiply_potential(
        Parity::Even,
        |i| {
            let [_, ap, _, _] = c.at_index(i);
            ap - SuperScalar::one()
        },
        |i| {
            let [_, _, b, bp] = c.at_index(i);
            b + bp
        },
        &t3,
    );
    let g = multiply_potential(
        Parity::Odd,
        |i| c.at_index(i)[3].clone(),
        |i| c.at_index(i)[0].clone(),
        &t2,
    );
    require_nonempty(
        t5.add(&t4)
            .add(&f)
            .add(&g)
            .add(&parity_swap(s).negate()),
    )
}
