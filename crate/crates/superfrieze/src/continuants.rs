//! Classical continuants and the three supercontinuant families
//!
//! * even: `K(a₁ββ|…|aₙββ)`,
//! * odd: `K(a₁ββ|…|aₙ₋₁ββ|βₙ)`,
//! * bracket: `K(β₁|a₂ββ|…|aₙ₋₁ββ|βₙ)`,
//!
//! computed by recurrence, by Euler's rule on the slot word `β₁β₁β₂β₂…`,
//! by first-column determinants and, for the even family, as a Berezinian.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::grassmann::SuperScalar;
use crate::hill::HillCoefficients;
use crate::supermatrix::{determinant, MatrixError, SuperMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ContinuantError {
    #[error("parity mismatch: {0}")]
    ParityMismatch(String),
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{family} continuants need n >= 1, got {n}")]
    InvalidLength { family: Family, n: usize },
    #[error("unknown family {0:?}; expected even, odd or bracket")]
    UnknownFamily(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Even,
    Odd,
    Bracket,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Even, Family::Odd, Family::Bracket];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Even => "even",
            Family::Odd => "odd",
            Family::Bracket => "bracket",
        })
    }
}

impl FromStr for Family {
    type Err = ContinuantError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "even" => Ok(Family::Even),
            "odd" => Ok(Family::Odd),
            "bracket" => Ok(Family::Bracket),
            other => Err(ContinuantError::UnknownFamily(other.into())),
        }
    }
}

/// A supercontinuant of a family with `aᵢ` and `βᵢ` for `i = 1..=n`.
/// Entries a family does not use (`aₙ` for odd, `a₁` and `aₙ` for
/// bracket) are ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuantSpec {
    family: Family,
    a: Vec<SuperScalar>,
    beta: Vec<SuperScalar>,
}

impl ContinuantSpec {
    pub fn new(
        family: Family,
        a: Vec<SuperScalar>,
        beta: Vec<SuperScalar>,
    ) -> Result<Self, ContinuantError> {
        let n = beta.len();
        if n == 0 {
            return Err(ContinuantError::InvalidLength { family, n });
        }
        if a.len() != n {
            return Err(ContinuantError::LengthMismatch {
                expected: n,
                got: a.len(),
            });
        }
        for (k, x) in a.iter().enumerate() {
            if !x.is_even() {
                return Err(ContinuantError::ParityMismatch(format!("a{} = {x}", k + 1)));
            }
        }
        for (k, x) in beta.iter().enumerate() {
            if !x.is_odd() {
                return Err(ContinuantError::ParityMismatch(format!("beta{} = {x}", k + 1)));
            }
        }
        Ok(ContinuantSpec { family, a, beta })
    }

    /// Free generators `a₁..aₙ` (even) and `b₁..bₙ` (odd).
    pub fn symbolic(family: Family, n: usize) -> Result<Self, ContinuantError> {
        let a = (1..=n as i64).map(|i| SuperScalar::even("a", i)).collect();
        let beta = (1..=n as i64).map(|i| SuperScalar::odd("b", i)).collect();
        Self::new(family, a, beta)
    }

    #[must_use]
    pub fn family(&self) -> Family {
        self.family
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.beta.len()
    }

    #[must_use]
    pub fn a_list(&self) -> &[SuperScalar] {
        &self.a
    }

    #[must_use]
    pub fn beta_list(&self) -> &[SuperScalar] {
        &self.beta
    }

    /// `aᵢ`, 1-based.
    fn a(&self, i: usize) -> &SuperScalar {
        &self.a[i - 1]
    }

    /// `βᵢ`, 1-based.
    fn beta(&self, i: usize) -> &SuperScalar {
        &self.beta[i - 1]
    }

    /// Labels of the slot word: `1,1,…,n,n` (even), `1,1,…,n−1,n−1,n`
    /// (odd), `1,2,2,…,n−1,n−1,n` (bracket; empty for `n = 1`).
    #[must_use]
    pub fn slots(&self) -> Vec<usize> {
        slot_labels(self.family, self.n())
    }
}

#[must_use]
pub fn slot_labels(family: Family, n: usize) -> Vec<usize> {
    let doubled = |range: std::ops::RangeInclusive<usize>| range.flat_map(|i| [i, i]);
    match family {
        Family::Even => doubled(1..=n).collect(),
        Family::Odd => doubled(1..=n - 1).chain([n]).collect(),
        Family::Bracket if n == 1 => Vec::new(),
        Family::Bracket => [1].into_iter().chain(doubled(2..=n - 1)).chain([n]).collect(),
    }
}

/// `K() = 1`, `K(a₁) = a₁`, `K(a₁..aₙ) = aₙK(a₁..aₙ₋₁) − K(a₁..aₙ₋₂)`.
pub fn continuant_classical(a: &[SuperScalar]) -> Result<SuperScalar, ContinuantError> {
    let (mut prev, mut cur) = (SuperScalar::zero(), SuperScalar::one());
    for (k, x) in a.iter().enumerate() {
        if !x.is_even() {
            return Err(ContinuantError::ParityMismatch(format!("a{} = {x}", k + 1)));
        }
        let next = x * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `(vᵢ, wᵢ)` for `i = 0..=n` from `v₋₁ = 0`, `v₀ = 1`, `w₀ = 0`,
/// `vᵢ = aᵢvᵢ₋₁ − vᵢ₋₂ − βᵢwᵢ₋₁`, `wᵢ = wᵢ₋₁ + βᵢvᵢ₋₁`.
#[must_use]
pub fn even_odd_sequence(a: &[SuperScalar], beta: &[SuperScalar]) -> Vec<(SuperScalar, SuperScalar)> {
    let mut out = vec![(SuperScalar::one(), SuperScalar::zero())];
    let mut v_prev2 = SuperScalar::zero();
    for (x, b) in a.iter().zip(beta) {
        let (v_prev, w_prev) = out.last().cloned().expect("nonempty");
        let v = x * &v_prev - &v_prev2 - b * &w_prev;
        let w = &w_prev + &(b * &v_prev);
        v_prev2 = v_prev;
        out.push((v, w));
    }
    out
}

pub fn supercontinuant_recurrence(spec: &ContinuantSpec) -> SuperScalar {
    let n = spec.n();
    match spec.family {
        Family::Even => even_odd_sequence(&spec.a, &spec.beta)[n].0.clone(),
        Family::Odd => even_odd_sequence(&spec.a, &spec.beta)[n].1.clone(),
        Family::Bracket => {
            // L_k = K(β₁|a₂ββ|…|a_kββ), B_k = K(β₁|a₂ββ|…|β_k).
            let (mut l_prev, mut l) = (SuperScalar::zero(), spec.beta(1).clone());
            let mut bracket = SuperScalar::one();
            for k in 2..=n {
                let b = spec.beta(k);
                let next_bracket = -(b * &l) + &bracket;
                let next_l = spec.a(k) * &l - &l_prev + b * &bracket;
                l_prev = std::mem::replace(&mut l, next_l);
                bracket = next_bracket;
            }
            bracket
        }
    }
}

/// A piece of an Euler-rule tiling, by 1-based start slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Piece {
    /// A surviving `β`.
    Dot(usize),
    /// `βᵢβᵢ → aᵢ` or `βᵢβᵢ₊₁ → 1`.
    Dash(usize),
    /// `βᵢβᵢβᵢ₊₁βᵢ₊₁ → −1`.
    LongDash(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tiling {
    pub pieces: Vec<Piece>,
}

/// All tilings of the slot word by dots, dashes and long dashes, where a
/// long dash must cover labels `i, i, i+1, i+1`.
#[must_use]
pub fn tilings(labels: &[usize]) -> Vec<Tiling> {
    fn go(labels: &[usize], pos: usize, acc: &mut Vec<Piece>, out: &mut Vec<Tiling>) {
        if pos == labels.len() {
            out.push(Tiling { pieces: acc.clone() });
            return;
        }
        let slot = pos + 1;
        for piece in [Piece::Dot(slot), Piece::Dash(slot), Piece::LongDash(slot)] {
            let len = match piece {
                Piece::Dot(_) => 1,
                Piece::Dash(_) => 2,
                Piece::LongDash(_) => 4,
            };
            if pos + len > labels.len() {
                continue;
            }
            if let Piece::LongDash(_) = piece {
                let w = &labels[pos..pos + 4];
                if !(w[0] == w[1] && w[2] == w[3] && w[2] == w[0] + 1) {
                    continue;
                }
            }
            acc.push(piece);
            go(labels, pos + len, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(labels, 0, &mut Vec::new(), &mut out);
    out
}

/// Product of the substituted pieces in slot order.
#[must_use]
pub fn tiling_value(spec: &ContinuantSpec, labels: &[usize], tiling: &Tiling) -> SuperScalar {
    let mut acc = SuperScalar::one();
    for piece in &tiling.pieces {
        let factor = match *piece {
            Piece::Dot(s) => spec.beta(labels[s - 1]).clone(),
            Piece::Dash(s) => {
                let (i, j) = (labels[s - 1], labels[s]);
                if i == j {
                    spec.a(i).clone()
                } else {
                    SuperScalar::one()
                }
            }
            Piece::LongDash(_) => SuperScalar::from_integer(-1),
        };
        acc = &acc * &factor;
        if acc.is_zero() {
            break;
        }
    }
    acc
}

pub fn supercontinuant_euler(spec: &ContinuantSpec) -> SuperScalar {
    let labels = spec.slots();
    tilings(&labels)
        .iter()
        .map(|t| tiling_value(spec, &labels, t))
        .sum()
}

/// Even block `n×n`: `aᵢ` on the diagonal, `−1` below, `−1 + βᵢβᵢ₊₁`
/// above and `βᵢβⱼ` further up, on the given 1-based indices.
fn even_block(spec: &ContinuantSpec, rows: std::ops::RangeInclusive<usize>) -> Vec<Vec<SuperScalar>> {
    let idx: Vec<usize> = rows.collect();
    idx.iter()
        .map(|&i| {
            idx.iter()
                .map(|&j| {
                    if j == i {
                        spec.a(i).clone()
                    } else if j + 1 == i {
                        SuperScalar::from_integer(-1)
                    } else if j == i + 1 {
                        spec.beta(i) * spec.beta(j) - SuperScalar::one()
                    } else if j > i {
                        spec.beta(i) * spec.beta(j)
                    } else {
                        SuperScalar::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// The family's determinant matrix.
#[must_use]
pub fn continuant_matrix(spec: &ContinuantSpec) -> Vec<Vec<SuperScalar>> {
    let n = spec.n();
    match spec.family {
        Family::Even => even_block(spec, 1..=n),
        Family::Odd | Family::Bracket => {
            let mut grid = even_block(spec, 1..=n - 1);
            let mut last_row = vec![SuperScalar::zero(); n - 1];
            if n >= 2 {
                last_row[n - 2] = SuperScalar::from_integer(-1);
            }
            grid.push(last_row);
            for (i, row) in grid.iter_mut().enumerate() {
                row.push(spec.beta(i + 1).clone());
            }
            if spec.family == Family::Bracket && n >= 2 {
                let first: Vec<SuperScalar> = (1..n)
                    .map(|j| spec.beta(j).clone())
                    .chain([SuperScalar::one()])
                    .collect();
                grid[0] = first;
            }
            grid
        }
    }
}

/// First-column expansion of [`continuant_matrix`].
pub fn supercontinuant_determinant(spec: &ContinuantSpec) -> SuperScalar {
    if spec.family == Family::Bracket && spec.n() == 1 {
        return SuperScalar::one();
    }
    determinant(&continuant_matrix(spec))
}

/// The `2n × 2n` block matrix `(A B; C D)` with `A` tridiagonal
/// (`aᵢ`, `−1`), `B_{kl} = β_k` for `l ≥ k`, `C = diag(−βᵢ)`, `D = 1`.
pub fn berezinian_matrix(a: &[SuperScalar], beta: &[SuperScalar]) -> Result<SuperMatrix, ContinuantError> {
    let n = a.len();
    if beta.len() != n {
        return Err(ContinuantError::LengthMismatch {
            expected: n,
            got: beta.len(),
        });
    }
    Ok(SuperMatrix::from_fn(n, n, |r, c| match (r < n, c < n) {
        (true, true) => {
            if r == c {
                a[r].clone()
            } else if r.abs_diff(c) == 1 {
                SuperScalar::from_integer(-1)
            } else {
                SuperScalar::zero()
            }
        }
        (true, false) if c - n >= r => beta[r].clone(),
        (false, true) if r - n == c => -&beta[c],
        (false, false) if r == c => SuperScalar::one(),
        _ => SuperScalar::zero(),
    }))
}

/// `Ber` of [`berezinian_matrix`]; equals the even supercontinuant.
pub fn supercontinuant_berezinian(a: &[SuperScalar], beta: &[SuperScalar]) -> Result<SuperScalar, ContinuantError> {
    Ok(berezinian_matrix(a, beta)?.berezinian()?)
}

/// Number of monomials of the fully symbolic supercontinuant.
pub fn term_count(family: Family, n: usize) -> Result<usize, ContinuantError> {
    Ok(supercontinuant_recurrence(&ContinuantSpec::symbolic(family, n)?).term_count())
}

/// `(f_{j,i}, φ_{j,i})` as `(K(a_jββ|…|a_iββ), K(a_jββ|…|a_{i−1}ββ|β_i))`.
#[must_use]
pub fn frieze_entry_as_continuant(c: &HillCoefficients, j: i64, i: i64) -> (SuperScalar, SuperScalar) {
    if i < j - 1 {
        return (SuperScalar::zero(), SuperScalar::zero());
    }
    let a: Vec<_> = (j..=i).map(|k| c.a(k)).collect();
    let beta: Vec<_> = (j..=i).map(|k| c.beta(k)).collect();
    even_odd_sequence(&a, &beta).pop().expect("nonempty")
}
