//! Superfriezes: construction from the first rows or from a Hill equation,
//! the frieze rule on elementary diamonds, closure, glide symmetry,
//! periodicity and the Laurent phenomenon.
//!
//! Index conventions. `f_{i,j}` has integer indices and sits on row `j − i`
//! of the even rows; row −2 holds 0's, row −1 holds 1's and
//! `aᵢ = f_{i,i}` form row 0. `φ_{i,j}` has both indices integer or both
//! half-integer and sits on odd row `j − i`; row −1 holds 0's and
//! `βᵢ = φ_{i,i} = φ_{i+½,i+½}` form row 0. The first index numbers
//! South-East diagonals.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::grassmann::{GrassmannError, Parity, SuperScalar};
use crate::hill::{propagate, HillCoefficients, HillError, HillSystem, SuperSequencePair};
use crate::supermatrix::SuperMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FriezeError {
    #[error("parity mismatch: {0}")]
    ParityMismatch(String),
    #[error("frieze is not generic: even entry {0} is not invertible")]
    NotGeneric(FriezeIndex),
    #[error("diamond violates the frieze rule")]
    RuleViolation,
    #[error("frieze is not closed")]
    NotClosed,
    #[error("monodromy is not diag(-1, -1, 1)")]
    NotHill,
    #[error("width must be at least 1, got period {period}")]
    WidthTooSmall { period: usize },
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("diagonal is missing entry {0}")]
    MissingEntry(String),
    #[error(transparent)]
    Hill(#[from] HillError),
    #[error(transparent)]
    NotInvertible(#[from] GrassmannError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EntryKind {
    #[serde(rename = "f")]
    Even,
    #[serde(rename = "phi")]
    Odd,
}

/// Position of an entry with doubled indices: the entry is `f_{i,j}` or
/// `φ_{i,j}` with `(i, j) = (i2/2, j2/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FriezeIndex {
    pub kind: EntryKind,
    pub i2: i64,
    pub j2: i64,
}

impl FriezeIndex {
    /// `f_{i,j}`.
    #[must_use]
    pub fn f(i: i64, j: i64) -> Self {
        FriezeIndex {
            kind: EntryKind::Even,
            i2: 2 * i,
            j2: 2 * j,
        }
    }

    /// `φ_{i,j}` with integer indices.
    #[must_use]
    pub fn phi(i: i64, j: i64) -> Self {
        FriezeIndex {
            kind: EntryKind::Odd,
            i2: 2 * i,
            j2: 2 * j,
        }
    }

    /// `φ_{i+½,j+½}`.
    #[must_use]
    pub fn phi_half(i: i64, j: i64) -> Self {
        FriezeIndex {
            kind: EntryKind::Odd,
            i2: 2 * i + 1,
            j2: 2 * j + 1,
        }
    }

    /// Odd entry from doubled indices of equal parity.
    #[must_use]
    pub fn phi2(i2: i64, j2: i64) -> Self {
        FriezeIndex {
            kind: EntryKind::Odd,
            i2,
            j2,
        }
    }

    /// Row number `j − i`.
    #[must_use]
    pub fn row(&self) -> i64 {
        (self.j2 - self.i2) / 2
    }

    /// Whether the indices are consistent with the kind.
    #[must_use]
    pub fn is_valid(&self) -> bool {
        let parities_agree = (self.i2 - self.j2) % 2 == 0;
        match self.kind {
            EntryKind::Even => parities_agree && self.i2 % 2 == 0,
            EntryKind::Odd => parities_agree,
        }
    }

    fn shifted(&self, by2: i64) -> Self {
        FriezeIndex {
            kind: self.kind,
            i2: self.i2 + by2,
            j2: self.j2 + by2,
        }
    }
}

fn half(x2: i64) -> String {
    if x2 % 2 == 0 {
        (x2 / 2).to_string()
    } else {
        format!("{x2}/2")
    }
}

impl fmt::Display for FriezeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            EntryKind::Even => "f",
            EntryKind::Odd => "phi",
        };
        write!(f, "{name}[{},{}]", half(self.i2), half(self.j2))
    }
}

/// Elementary diamond with top `B`, left `A`, right `D`, bottom `C` and
/// odd entries `Ξ` (upper left), `Ψ` (upper right), `Φ` (lower left),
/// `Σ` (lower right).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diamond {
    pub a: SuperScalar,
    pub b: SuperScalar,
    pub c: SuperScalar,
    pub d: SuperScalar,
    pub xi: SuperScalar,
    pub psi: SuperScalar,
    pub phi: SuperScalar,
    pub sigma: SuperScalar,
}

impl Diamond {
    /// `A = D = 1`, `B = C = 0`, odd entries 0.
    #[must_use]
    pub fn trivial() -> Self {
        Diamond {
            a: SuperScalar::one(),
            b: SuperScalar::zero(),
            c: SuperScalar::zero(),
            d: SuperScalar::one(),
            xi: SuperScalar::zero(),
            psi: SuperScalar::zero(),
            phi: SuperScalar::zero(),
            sigma: SuperScalar::zero(),
        }
    }

    fn check_parity(&self) -> Result<(), FriezeError> {
        for (name, x, p) in [
            ("A", &self.a, Parity::Even),
            ("B", &self.b, Parity::Even),
            ("C", &self.c, Parity::Even),
            ("D", &self.d, Parity::Even),
            ("Xi", &self.xi, Parity::Odd),
            ("Psi", &self.psi, Parity::Odd),
            ("Phi", &self.phi, Parity::Odd),
            ("Sigma", &self.sigma, Parity::Odd),
        ] {
            if !x.has_parity(p) {
                return Err(FriezeError::ParityMismatch(format!("{name} = {x} is not {p}")));
            }
        }
        Ok(())
    }
}

/// The frieze rule `AD − BC = 1 + ΣΞ`, `AΣ − CΞ = Φ`, `BΣ − DΞ = Ψ`.
pub fn check_diamond(d: &Diamond) -> Result<bool, FriezeError> {
    d.check_parity()?;
    let one = SuperScalar::one();
    Ok(&d.a * &d.d - &d.b * &d.c == &one + &(&d.sigma * &d.xi)
        && &d.a * &d.sigma - &d.c * &d.xi == d.phi
        && &d.b * &d.sigma - &d.d * &d.xi == d.psi)
}

/// The OSp(1|2) element `(a b γ; c d δ; α β e)` with `a = −B`, `b = A`,
/// `c = −D`, `d = C`, `γ = Ξ`, `δ = Σ`, `α = Ψ`, `β = −Φ`, `e = 1 + αβ`.
pub fn diamond_to_osp(d: &Diamond) -> Result<SuperMatrix, FriezeError> {
    if !check_diamond(d)? {
        return Err(FriezeError::RuleViolation);
    }
    let alpha = d.psi.clone();
    let beta = -&d.phi;
    let e = SuperScalar::one() + &alpha * &beta;
    let entries = vec![
        vec![-&d.b, d.a.clone(), d.xi.clone()],
        vec![-&d.d, d.c.clone(), d.sigma.clone()],
        vec![alpha, beta, e],
    ];
    let m = SuperMatrix::new(2, 1, entries).map_err(|_| FriezeError::RuleViolation)?;
    if m.is_osp12() {
        Ok(m)
    } else {
        Err(FriezeError::RuleViolation)
    }
}

/// Inverse of [`diamond_to_osp`].
pub fn osp_to_diamond(m: &SuperMatrix) -> Result<Diamond, FriezeError> {
    if !m.is_osp12() {
        return Err(FriezeError::RuleViolation);
    }
    let g = |r: usize, c: usize| m.get(r, c).clone();
    Ok(Diamond {
        b: -g(0, 0),
        a: g(0, 1),
        xi: g(0, 2),
        d: -g(1, 0),
        c: g(1, 1),
        sigma: g(1, 2),
        psi: g(2, 0),
        phi: -g(2, 1),
    })
}

/// A residual of one closure equation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub equation: String,
    pub residual: SuperScalar,
}

/// Coefficients `aᵢ, βᵢ` read off one diagonal, for
/// `i = start .. start + a.len()`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalCoefficients {
    pub start: i64,
    pub a: Vec<SuperScalar>,
    pub beta: Vec<SuperScalar>,
}

/// Entries of a superfrieze over `2n + 1` consecutive South-East diagonals
/// `base ..= base + 2n`, rows −2 to `m + 1`, and the half-integer diagonals
/// between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Superfrieze {
    m: usize,
    base: i64,
    entries: BTreeMap<FriezeIndex, SuperScalar>,
}

/// One South-East diagonal: `f_{j,i}` and `φ_{j,i}` keyed by `i`.
struct Diagonal {
    f: BTreeMap<i64, SuperScalar>,
    phi: BTreeMap<i64, SuperScalar>,
}

fn diagonal_from_recurrence(c: &HillCoefficients, j: i64, m: usize) -> Diagonal {
    let init = [SuperScalar::zero(), SuperScalar::one(), SuperScalar::zero()];
    let seq = propagate(c, init, j, m + 2).expect("initial values are homogeneous");
    let mut phi = seq.w;
    phi.insert(j - 2, SuperScalar::zero());
    Diagonal { f: seq.v, phi }
}

impl Superfrieze {
    fn assemble(
        m: usize,
        base: i64,
        diagonal: impl Fn(i64) -> Diagonal,
    ) -> Superfrieze {
        let n = (m + 3) as i64;
        let mut entries = BTreeMap::new();
        let diagonals: Vec<(i64, Diagonal)> = (base..=base + 2 * n).map(|j| (j, diagonal(j))).collect();
        for (j, d) in &diagonals {
            for (&i, v) in &d.f {
                if i >= j - 2 {
                    entries.insert(FriezeIndex::f(*j, i), v.clone());
                }
            }
            for (&i, v) in &d.phi {
                if i >= j - 1 {
                    entries.insert(FriezeIndex::phi(*j, i), v.clone());
                }
            }
        }
        for pair in diagonals.windows(2) {
            let ((_, left), (j, right)) = (&pair[0], &pair[1]);
            for i in j - 2..=j + m as i64 {
                let value = &right.f[&i] * &left.phi[&i] - &left.f[&i] * &right.phi[&i];
                entries.insert(FriezeIndex::phi_half(j - 1, i), value);
            }
        }
        Superfrieze { m, base, entries }
    }

    fn width_for(n: usize) -> Result<usize, FriezeError> {
        if n < 4 {
            return Err(FriezeError::WidthTooSmall { period: n });
        }
        Ok(n - 3)
    }

    /// Builds the frieze whose first rows are `aᵢ = f_{i,i}` and
    /// `βᵢ = φ_{i,i}` from the recurrence along South-East diagonals.
    /// Closure is not required.
    pub fn from_first_rows(coeffs: &HillCoefficients) -> Result<Superfrieze, FriezeError> {
        let m = Self::width_for(coeffs.period())?;
        let f = Self::assemble(m, coeffs.start(), |j| diagonal_from_recurrence(coeffs, j, m));
        if let Some(idx) = f.first_non_invertible() {
            return Err(FriezeError::NotGeneric(idx));
        }
        Ok(f)
    }

    /// Frieze with first rows `a` and `β` indexed from 0 and width `m`.
    pub fn from_lists(
        a: Vec<SuperScalar>,
        beta: Vec<SuperScalar>,
        m: usize,
    ) -> Result<Superfrieze, FriezeError> {
        for got in [a.len(), beta.len()] {
            if got != m + 3 {
                return Err(FriezeError::LengthMismatch { expected: m + 3, got });
            }
        }
        let c = HillCoefficients::with_start(0, a, beta)?;
        Self::from_first_rows(&c)
    }

    /// The frieze whose South-East diagonals `(φ_{j,i}, f_{j,i})` are the
    /// solutions of the Hill equation with initial values
    /// `(V_{j−2}, W_{j−1}, V_{j−1}) = (0, 0, 1)`.
    pub fn from_hill(sys: &HillSystem) -> Result<Superfrieze, FriezeError> {
        if !sys.satisfies_hill_condition() {
            return Err(FriezeError::NotHill);
        }
        let c = sys.coefficients();
        let m = Self::width_for(c.period())?;
        let frieze = Self::assemble(m, c.start(), |j| diagonal_from_recurrence(c, j, m));
        if frieze.check_closure() {
            Ok(frieze)
        } else {
            Err(FriezeError::NotClosed)
        }
    }

    /// Rebuilds a frieze from a list of entries. The entries must cover the
    /// same domain as a constructed frieze.
    pub fn from_entries(
        m: usize,
        entries: BTreeMap<FriezeIndex, SuperScalar>,
    ) -> Result<Superfrieze, FriezeError> {
        if m == 0 {
            return Err(FriezeError::WidthTooSmall { period: 3 });
        }
        for (idx, v) in &entries {
            if !idx.is_valid() {
                return Err(FriezeError::MissingEntry(format!("invalid index {idx:?}")));
            }
            let p = match idx.kind {
                EntryKind::Even => Parity::Even,
                EntryKind::Odd => Parity::Odd,
            };
            if !v.has_parity(p) {
                return Err(FriezeError::ParityMismatch(format!("{idx} = {v}")));
            }
        }
        let base = entries
            .keys()
            .filter(|k| k.kind == EntryKind::Even)
            .map(|k| k.i2 / 2)
            .min()
            .ok_or_else(|| FriezeError::MissingEntry("no even entries".into()))?;
        let frieze = Superfrieze { m, base, entries };
        for i in base..base + frieze.period() as i64 {
            for idx in [FriezeIndex::f(i, i), FriezeIndex::phi(i, i)] {
                if frieze.get(&idx).is_none() {
                    return Err(FriezeError::MissingEntry(idx.to_string()));
                }
            }
        }
        Ok(frieze)
    }

    #[must_use]
    pub fn width(&self) -> usize {
        self.m
    }

    #[must_use]
    pub fn period(&self) -> usize {
        self.m + 3
    }

    /// First stored South-East diagonal.
    #[must_use]
    pub fn base(&self) -> i64 {
        self.base
    }

    #[must_use]
    pub fn entries(&self) -> &BTreeMap<FriezeIndex, SuperScalar> {
        &self.entries
    }

    #[must_use]
    pub fn get(&self, idx: &FriezeIndex) -> Option<&SuperScalar> {
        self.entries.get(idx)
    }

    /// `f_{i,j}` if stored.
    #[must_use]
    pub fn f(&self, i: i64, j: i64) -> Option<&SuperScalar> {
        self.get(&FriezeIndex::f(i, j))
    }

    /// `φ_{i2/2, j2/2}` if stored.
    #[must_use]
    pub fn phi2(&self, i2: i64, j2: i64) -> Option<&SuperScalar> {
        self.get(&FriezeIndex::phi2(i2, j2))
    }

    /// `aᵢ = f_{i,i}` and `βᵢ = φ_{i,i}` for one period from the base.
    pub fn first_rows(&self) -> Result<HillCoefficients, FriezeError> {
        let period = self.base..self.base + self.period() as i64;
        let read = |idx: FriezeIndex| {
            self.get(&idx)
                .cloned()
                .ok_or_else(|| FriezeError::MissingEntry(idx.to_string()))
        };
        let a = period.clone().map(|i| read(FriezeIndex::f(i, i))).collect::<Result<_, _>>()?;
        let beta = period.map(|i| read(FriezeIndex::phi(i, i))).collect::<Result<_, _>>()?;
        Ok(HillCoefficients::with_start(self.base, a, beta)?)
    }

    fn first_non_invertible(&self) -> Option<FriezeIndex> {
        self.entries
            .iter()
            .find(|(k, v)| {
                k.kind == EntryKind::Even
                    && (0..self.m as i64).contains(&k.row())
                    && v.body().is_zero()
            })
            .map(|(k, _)| *k)
    }

    /// Every nontrivial even entry has a nonzero body.
    pub fn ensure_generic(&self) -> Result<(), FriezeError> {
        match self.first_non_invertible() {
            Some(idx) => Err(FriezeError::NotGeneric(idx)),
            None => Ok(()),
        }
    }

    /// Elementary diamonds with every entry stored, keyed by the top entry
    /// `B = f_{i,j}`.
    #[must_use]
    pub fn diamonds(&self) -> Vec<(FriezeIndex, Diamond)> {
        let mut out = Vec::new();
        for k in self.entries.keys().filter(|k| k.kind == EntryKind::Even) {
            let (i, j) = (k.i2 / 2, k.j2 / 2);
            if let Some(d) = self.diamond_at(i, j) {
                out.push((*k, d));
            }
        }
        out
    }

    /// The diamond with top `f_{i,j}`, left `f_{i−1,j}`, right `f_{i,j+1}`
    /// and bottom `f_{i−1,j+1}`.
    #[must_use]
    pub fn diamond_at(&self, i: i64, j: i64) -> Option<Diamond> {
        Some(Diamond {
            b: self.f(i, j)?.clone(),
            a: self.f(i - 1, j)?.clone(),
            d: self.f(i, j + 1)?.clone(),
            c: self.f(i - 1, j + 1)?.clone(),
            xi: self.phi2(2 * i - 1, 2 * j + 1)?.clone(),
            psi: self.phi2(2 * i, 2 * j + 2)?.clone(),
            phi: self.phi2(2 * i - 2, 2 * j + 2)?.clone(),
            sigma: self.phi2(2 * i - 1, 2 * j + 3)?.clone(),
        })
    }

    /// Diamonds violating the frieze rule.
    #[must_use]
    pub fn rule_violations(&self) -> Vec<FriezeIndex> {
        self.diamonds()
            .into_iter()
            .filter(|(_, d)| !check_diamond(d).unwrap_or(false))
            .map(|(k, _)| k)
            .collect()
    }

    /// `B(Φ − Φ̃) = A(Ψ − Ψ̃)` and `B(Σ − Σ̃) = D(Ξ − Ξ̃)` where `Ψ̃ = φ_{i,j}`,
    /// `Ξ̃ = φ_{i+½,j+½}`, `Φ̃ = φ_{i−1,j}` and `Σ̃ = φ_{i+½,j+3/2}`. Returns
    /// the number of configurations checked, or the first failure.
    pub fn check_neighbor_relations(&self) -> Result<usize, FriezeIndex> {
        let mut checked = 0;
        for (k, d) in self.diamonds() {
            let (i2, j2) = (k.i2, k.j2);
            let (Some(psi_t), Some(xi_t), Some(phi_t), Some(sigma_t)) = (
                self.phi2(i2, j2),
                self.phi2(i2 + 1, j2 + 1),
                self.phi2(i2 - 2, j2),
                self.phi2(i2 + 1, j2 + 3),
            ) else {
                continue;
            };
            let left = &d.b * &(&d.phi - phi_t) == &d.a * &(&d.psi - psi_t);
            let right = &d.b * &(&d.sigma - sigma_t) == &d.d * &(&d.xi - xi_t);
            if !(left && right) {
                return Err(k);
            }
            checked += 1;
        }
        Ok(checked)
    }

    /// Residuals of `f_{j,j+m} = 1`, `f_{j,j+m+1} = 0`, `φ_{j,j+m+1} = 0`
    /// for one period of `j`.
    #[must_use]
    pub fn closure_residuals(&self) -> Vec<Residual> {
        let m = self.m as i64;
        let mut out = Vec::new();
        for j in self.base..self.base + self.period() as i64 {
            let rows = [
                (FriezeIndex::f(j, j + m), SuperScalar::one()),
                (FriezeIndex::f(j, j + m + 1), SuperScalar::zero()),
                (FriezeIndex::phi(j, j + m + 1), SuperScalar::zero()),
            ];
            for (idx, target) in rows {
                let value = self.get(&idx).cloned().unwrap_or_default();
                out.push(Residual {
                    equation: format!("{idx} = {target}"),
                    residual: &value - &target,
                });
            }
        }
        out
    }

    /// The closure equations hold for one period, and with them
    /// `φ_{j+½,j+m+3/2} = 0`.
    #[must_use]
    pub fn check_closure(&self) -> bool {
        let m = self.m as i64;
        self.closure_residuals().iter().all(|r| r.residual.is_zero())
            && (self.base..self.base + self.period() as i64).all(|j| {
                self.get(&FriezeIndex::phi_half(j, j + m + 1))
                    .is_some_and(SuperScalar::is_zero)
            })
    }

    fn compare_all(
        &self,
        image: impl Fn(&FriezeIndex) -> Option<(FriezeIndex, bool)>,
    ) -> (usize, Vec<FriezeIndex>) {
        let mut checked = 0;
        let mut failures = Vec::new();
        for (k, v) in &self.entries {
            let Some((target, negate)) = image(k) else {
                continue;
            };
            let Some(w) = self.get(&target) else {
                continue;
            };
            checked += 1;
            let expected = if negate { -w } else { w.clone() };
            if *v != expected {
                failures.push(*k);
            }
        }
        (checked, failures)
    }

    /// Glide relations `f_{i,j} = f_{j−m−1,i−2}`,
    /// `φ_{i,j} = φ_{j−m−3/2,i−3/2}`, `φ_{i+½,j+½} = −φ_{j−m−1,i−1}`, checked
    /// on every stored pair. Returns the number of pairs compared and the
    /// entries that fail.
    pub fn glide_report(&self) -> Result<(usize, Vec<FriezeIndex>), FriezeError> {
        if !self.check_closure() {
            return Err(FriezeError::NotClosed);
        }
        let m2 = 2 * self.m as i64;
        Ok(self.compare_all(|k| {
            let integer = k.i2 % 2 == 0;
            Some(match (k.kind, integer) {
                (EntryKind::Even, _) => (
                    FriezeIndex {
                        kind: EntryKind::Even,
                        i2: k.j2 - m2 - 2,
                        j2: k.i2 - 4,
                    },
                    false,
                ),
                (EntryKind::Odd, true) => (FriezeIndex::phi2(k.j2 - m2 - 3, k.i2 - 3), false),
                (EntryKind::Odd, false) => (FriezeIndex::phi2(k.j2 - m2 - 3, k.i2 - 3), true),
            })
        }))
    }

    pub fn check_glide(&self) -> Result<bool, FriezeError> {
        let (checked, failures) = self.glide_report()?;
        Ok(checked > 0 && failures.is_empty())
    }

    /// `f_{i+n,j+n} = f_{i,j}` and `φ_{i+n,j+n} = −φ_{i,j}` on every stored
    /// pair.
    pub fn periodicity_report(&self) -> Result<(usize, Vec<FriezeIndex>), FriezeError> {
        if !self.check_closure() {
            return Err(FriezeError::NotClosed);
        }
        let n2 = 2 * self.period() as i64;
        Ok(self.compare_all(|k| Some((k.shifted(n2), k.kind == EntryKind::Odd))))
    }

    pub fn check_periodicity(&self) -> Result<bool, FriezeError> {
        let (checked, failures) = self.periodicity_report()?;
        Ok(checked > 0 && failures.is_empty())
    }

    /// `φ_{i,i} = φ_{i+½,i+½}` on the first odd row and
    /// `φ_{i,i+m} = −φ_{i−½,i+m−½}` on the last, for one period.
    pub fn first_row_pairing(&self) -> Result<bool, FriezeError> {
        self.ensure_generic()?;
        let m = self.m as i64;
        let mut any = false;
        for i in self.base..self.base + self.period() as i64 {
            if let (Some(x), Some(y)) = (self.phi2(2 * i, 2 * i), self.phi2(2 * i + 1, 2 * i + 1)) {
                any = true;
                if x != y {
                    return Ok(false);
                }
            }
            if let (Some(x), Some(y)) = (
                self.phi2(2 * i, 2 * (i + m)),
                self.phi2(2 * i - 1, 2 * (i + m) - 1),
            ) {
                any = true;
                if *x != -y {
                    return Ok(false);
                }
            }
        }
        Ok(any)
    }

    fn a_at(&self, i: i64) -> Option<&SuperScalar> {
        self.f(i, i)
    }

    fn beta_at(&self, i: i64) -> Option<&SuperScalar> {
        self.phi2(2 * i, 2 * i)
    }

    /// The South-East diagonal `(Wᵢ, Vᵢ) = (φ_{j,i}, f_{j,i})` satisfies
    /// `Vᵢ = aᵢVᵢ₋₁ − Vᵢ₋₂ − βᵢWᵢ₋₁`, `Wᵢ = Wᵢ₋₁ + βᵢVᵢ₋₁` wherever its
    /// entries are stored. Returns the number of steps checked.
    pub fn se_diagonal_report(&self, j: i64) -> Result<Option<usize>, FriezeError> {
        self.ensure_generic()?;
        let mut checked = 0;
        for i in j - 1..=j + self.m as i64 + 1 {
            let (Some(v), Some(v1), Some(w), Some(w1), Some(a), Some(b)) = (
                self.f(j, i),
                self.f(j, i - 1),
                self.phi2(2 * j, 2 * i),
                self.phi2(2 * j, 2 * i - 2),
                self.a_at(i),
                self.beta_at(i),
            ) else {
                continue;
            };
            let v2 = if i - 2 == j - 3 {
                SuperScalar::from_integer(-1)
            } else {
                match self.f(j, i - 2) {
                    Some(x) => x.clone(),
                    None => continue,
                }
            };
            checked += 1;
            if *v != a * v1 - &v2 - b * w1 || *w != w1 + &(b * v1) {
                return Ok(None);
            }
        }
        Ok(Some(checked))
    }

    /// The North-East diagonal `(W*ᵢ, V*ᵢ) = (φ_{i+3/2,j+½}, f_{i+2,j})`
    /// satisfies `V*ᵢ = aᵢV*ᵢ₋₁ − V*ᵢ₋₂ + βᵢW*ᵢ₋₁`,
    /// `W*ᵢ = W*ᵢ₋₁ − βᵢV*ᵢ₋₁`. Returns the number of steps checked.
    pub fn ne_diagonal_report(&self, j: i64) -> Result<Option<usize>, FriezeError> {
        self.ensure_generic()?;
        let v_star = |i: i64| self.f(i + 2, j);
        let w_star = |i: i64| self.phi2(2 * i + 3, 2 * j + 1);
        let mut checked = 0;
        for i in j - self.m as i64 - 4..=j + 1 {
            let (Some(v), Some(v1), Some(v2), Some(w), Some(w1), Some(a), Some(b)) = (
                v_star(i),
                v_star(i - 1),
                v_star(i - 2),
                w_star(i),
                w_star(i - 1),
                self.a_at(i),
                self.beta_at(i),
            ) else {
                continue;
            };
            checked += 1;
            if *v != a * v1 - v2 + b * w1 || *w != w1 - &(b * v1) {
                return Ok(None);
            }
        }
        Ok(Some(checked))
    }

    /// Both the South-East and the North-East diagonal `j` satisfy their
    /// Hill equations.
    pub fn diagonal_satisfies_hill(&self, j: i64) -> Result<bool, FriezeError> {
        let se = self.se_diagonal_report(j)?;
        let ne = self.ne_diagonal_report(j)?;
        Ok(matches!((se, ne), (Some(a), Some(b)) if a > 0 && b > 0))
    }

    /// Staggered text layout covering two periods: even rows hold `f`, odd
    /// rows hold `φ`.
    #[must_use]
    pub fn render(&self) -> String {
        let m = self.m as i64;
        let n = self.period() as i64;
        let x0 = 2 * self.base + m + 1;
        let cols = (4 * x0)..(4 * (x0 + 2 * n) - 2);
        let column = |idx: &FriezeIndex| idx.i2 + idx.j2;
        let mut lines: BTreeMap<i64, BTreeMap<i64, String>> = BTreeMap::new();
        for (k, v) in &self.entries {
            let y = k.j2 - k.i2;
            let (x, line) = match k.kind {
                EntryKind::Even => (2 * column(k), 2 * y),
                EntryKind::Odd => (2 * column(k) - 2, 2 * y - 2),
            };
            if cols.contains(&x) {
                lines.entry(line).or_default().insert(x, v.to_string());
            }
        }
        let width = lines
            .values()
            .flat_map(|l| l.values().map(|s| s.chars().count()))
            .max()
            .unwrap_or(1)
            + 2;
        let mut out = String::new();
        for cells in lines.values() {
            let mut line = String::new();
            for x in cols.clone().step_by(2) {
                let cell = cells.get(&x).map_or("", String::as_str);
                line.push_str(&format!("{cell:^width$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    #[must_use]
    pub fn to_json(&self) -> FriezeJson {
        FriezeJson {
            m: self.m,
            n: self.period(),
            entries: self
                .entries
                .iter()
                .map(|(k, v)| EntryJson {
                    kind: k.kind,
                    i2: k.i2,
                    j2: k.j2,
                    value: v.clone(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: FriezeJson) -> Result<Superfrieze, FriezeError> {
        if json.n != json.m + 3 {
            return Err(FriezeError::LengthMismatch {
                expected: json.m + 3,
                got: json.n,
            });
        }
        let entries = json
            .entries
            .into_iter()
            .map(|e| {
                (
                    FriezeIndex {
                        kind: e.kind,
                        i2: e.i2,
                        j2: e.j2,
                    },
                    e.value,
                )
            })
            .collect();
        Self::from_entries(json.m, entries)
    }
}

/// Serialized form `{"m", "n", "entries": [{"kind", "i2", "j2", "value"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriezeJson {
    pub m: usize,
    pub n: usize,
    pub entries: Vec<EntryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub kind: EntryKind,
    pub i2: i64,
    pub j2: i64,
    pub value: SuperScalar,
}

impl Serialize for Superfrieze {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Superfrieze {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let json = FriezeJson::deserialize(d)?;
        Superfrieze::from_json(json).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Superfrieze {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Frieze from first rows `a`, `β` (indexed from 0) and width `m`.
pub fn frieze_from_first_rows(
    a: Vec<SuperScalar>,
    beta: Vec<SuperScalar>,
    m: usize,
) -> Result<Superfrieze, FriezeError> {
    Superfrieze::from_lists(a, beta, m)
}

pub fn frieze_from_hill(sys: &HillSystem) -> Result<Superfrieze, FriezeError> {
    Superfrieze::from_hill(sys)
}

/// Recovers `βᵢ = (Wᵢ − Wᵢ₋₁)/Vᵢ₋₁` and
/// `aᵢ = (Vᵢ + Vᵢ₋₂ + βᵢWᵢ₋₁)/Vᵢ₋₁` for `i = start .. start + count`.
pub fn coefficients_from_diagonal(
    diag: &SuperSequencePair,
    start: i64,
    count: usize,
) -> Result<DiagonalCoefficients, FriezeError> {
    let v = |i: i64| {
        diag.v_at(i)
            .ok_or_else(|| FriezeError::MissingEntry(format!("V{i}")))
    };
    let w = |i: i64| {
        diag.w_at(i)
            .ok_or_else(|| FriezeError::MissingEntry(format!("W{i}")))
    };
    let mut a = Vec::with_capacity(count);
    let mut beta = Vec::with_capacity(count);
    for i in start..start + count as i64 {
        let den = v(i - 1)?;
        let b = (w(i)? - w(i - 1)?).divide(den)?;
        let num = v(i)? + v(i - 2)? + &b * w(i - 1)?;
        a.push(num.divide(den)?);
        beta.push(b);
    }
    Ok(DiagonalCoefficients { start, a, beta })
}

/// The closed frieze of width `m` whose South-East diagonal `j` has
/// nontrivial entries `f_{j,j+k} = v[k]` (`k < m`) and `φ_{j,j+k} = w[k]`
/// (`k ≤ m`). Every entry is a Laurent polynomial in these values; only
/// divisions by the even `v[k]` occur, and they must be monomials.
pub fn laurent_expand_diagonal(
    j: i64,
    v: &[SuperScalar],
    w: &[SuperScalar],
) -> Result<Superfrieze, FriezeError> {
    let m = v.len();
    if m == 0 {
        return Err(FriezeError::WidthTooSmall { period: 3 });
    }
    if w.len() != m + 1 {
        return Err(FriezeError::LengthMismatch {
            expected: m + 1,
            got: w.len(),
        });
    }
    let mi = m as i64;
    let mut diag = SuperSequencePair::default();
    diag.v.insert(j - 2, SuperScalar::zero());
    diag.v.insert(j - 1, SuperScalar::one());
    diag.w.insert(j - 1, SuperScalar::zero());
    for (k, x) in v.iter().enumerate() {
        if !x.is_even() {
            return Err(FriezeError::ParityMismatch(format!("V{} = {x}", j + k as i64)));
        }
        diag.v.insert(j + k as i64, x.clone());
    }
    for (k, x) in w.iter().enumerate() {
        if !x.is_odd() {
            return Err(FriezeError::ParityMismatch(format!("W{} = {x}", j + k as i64)));
        }
        diag.w.insert(j + k as i64, x.clone());
    }
    diag.v.insert(j + mi, SuperScalar::one());
    diag.v.insert(j + mi + 1, SuperScalar::zero());
    diag.w.insert(j + mi + 1, SuperScalar::zero());
    let known = coefficients_from_diagonal(&diag, j, m + 2)?;

    // a_{j−1} = f_{j+1,j+m} and β_{j−1} = −φ_{j+½,j+m+½} by the glide,
    // both computable from a_j.., β_j.. alone.
    let at = |i: i64| (i - j) as usize;
    let mut next = SuperSequencePair::default();
    let (mut v2, mut v1, mut w1) = (SuperScalar::zero(), SuperScalar::one(), SuperScalar::zero());
    for i in j + 1..=j + mi {
        let (a, b) = (&known.a[at(i)], &known.beta[at(i)]);
        let vi = a * &v1 - &v2 - b * &w1;
        let wi = &w1 + &(b * &v1);
        next.v.insert(i, vi.clone());
        next.w.insert(i, wi.clone());
        v2 = std::mem::replace(&mut v1, vi);
        w1 = wi;
    }
    let top = j + mi;
    let a_prev = next.v[&top].clone();
    let half = &next.v[&top] * &diag.w[&top] - &diag.v[&top] * &next.w[&top];
    let beta_prev = -half;

    let mut a = vec![a_prev];
    a.extend(known.a);
    let mut beta = vec![beta_prev];
    beta.extend(known.beta);
    let coeffs = HillCoefficients::with_start(j - 1, a, beta)?;
    let frieze = Superfrieze::from_first_rows(&coeffs)?;
    let reproduces = (0..m).all(|k| frieze.f(j, j + k as i64) == Some(&v[k]))
        && (0..=m).all(|k| frieze.phi2(2 * j, 2 * (j + k as i64)) == Some(&w[k]));
    if !reproduces || !frieze.check_closure() {
        return Err(FriezeError::NotClosed);
    }
    Ok(frieze)
}

/// [`laurent_expand_diagonal`] on free generators `v_{j+k}` (even) and
/// `w_{j+k}` (odd) along diagonal `j = 0`.
pub fn laurent_expand(m: usize) -> Result<Superfrieze, FriezeError> {
    let v: Vec<_> = (0..m as i64).map(|k| SuperScalar::even("v", k)).collect();
    let w: Vec<_> = (0..=m as i64).map(|k| SuperScalar::odd("w", k)).collect();
    laurent_expand_diagonal(0, &v, &w)
}

/// Whether every entry is a Laurent polynomial with denominators only in
/// the given even generators.
#[must_use]
pub fn is_laurent_in(frieze: &Superfrieze, allowed: &BTreeSet<crate::grassmann::GeneratorId>) -> bool {
    frieze.entries().values().all(|v| {
        v.terms().all(|(mono, _)| {
            mono.even_factors()
                .iter()
                .all(|(g, e)| *e > 0 || allowed.contains(g))
        })
    })
}

/// Residuals of the `2n` even and `n` odd closure equations for first rows
/// `a`, `β`.
pub fn closure_report(coeffs: &HillCoefficients) -> Result<Vec<Residual>, FriezeError> {
    let m = Superfrieze::width_for(coeffs.period())?;
    let frieze = Superfrieze::assemble(m, coeffs.start(), |j| diagonal_from_recurrence(coeffs, j, m));
    Ok(frieze.closure_residuals())
}
