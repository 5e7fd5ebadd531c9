//! Equations of the supervariety of Hill equations with antiperiodic
//! solutions, raw from the monodromy and in the reduced forms known for
//! small periods.

use std::collections::{BTreeMap, BTreeSet};

use crate::expr::parse_scalar;
use crate::grassmann::{GeneratorId, SuperScalar};
use crate::hill::{normalize_equation, supervariety_equations_at, HillCoefficients};
use crate::presets;

/// Normalized monodromy-defect equations over every base `1..=n`, for
/// free generators `a₁..aₙ`, `b₁..bₙ`.
#[must_use]
pub fn raw_equations(n: usize) -> Vec<SuperScalar> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for base in 1..=n as i64 {
        for eq in supervariety_equations_at(n, base) {
            if seen.insert(eq.clone()) {
                out.push(eq);
            }
        }
    }
    out
}

fn a(i: usize) -> SuperScalar {
    SuperScalar::even("a", i as i64)
}

fn b(i: usize) -> SuperScalar {
    SuperScalar::odd("b", i as i64)
}

/// The odd equations `M · (−βₙ, β₁, …, βₙ₋₁)ᵀ = 0` for a skew matrix `M`
/// given as rows of expressions.
fn linear_system(rows: &[&[&str]]) -> Vec<SuperScalar> {
    let n = rows.len();
    let mut target = vec![-b(n)];
    target.extend((1..n).map(b));
    rows.iter()
        .map(|row| {
            row.iter()
                .zip(&target)
                .map(|(m, x)| parse_scalar(m).expect("reference entry parses") * x)
                .sum()
        })
        .collect()
}

/// Shift `aᵢ ↦ aᵢ₊₁`, `βᵢ ↦ βᵢ₊₁` with `aₙ₊₁ = a₁`, `βₙ₊₁ = −β₁`.
fn cyclic_shift(eq: &SuperScalar, n: usize) -> SuperScalar {
    let mut values = BTreeMap::new();
    for i in 1..=n {
        let next = i % n + 1;
        values.insert(GeneratorId::even("a", i as i64), a(next));
        let beta = if i == n { -b(1) } else { b(next) };
        values.insert(GeneratorId::odd("b", i as i64), beta);
    }
    eq.substitute(&values).expect("parity-preserving shift")
}

/// Reduced equations for `n = 3..=6`. The wrap-around even equation for
/// `n = 4` carries `−β₄β₁`, as the antiperiodic extension requires.
#[must_use]
pub fn reference_equations(n: usize) -> Option<Vec<SuperScalar>> {
    let p = |s: &str| parse_scalar(s).expect("reference equation parses");
    let mut out = match n {
        3 => vec![p("a1 - 1"), p("a2 - 1"), p("a3 - 1")],
        4 => vec![
            p("a1 a2 - 2 + b1 b2"),
            p("a2 a3 - 2 + b2 b3"),
            p("a3 a4 - 2 + b3 b4"),
            p("a4 a1 - 2 - b4 b1"),
        ],
        5 => vec![
            p("a1 a2 - a4 - 1 + b1 b2"),
            p("a2 a3 - a5 - 1 + b2 b3"),
            p("a3 a4 - a1 - 1 + b3 b4"),
            p("a4 a5 - a2 - 1 + b4 b5"),
            p("a5 a1 - a3 - 1 - b5 b1"),
        ],
        6 => {
            let first = p("a1 + a3 + a5 - a3 a4 a5 - a3 b4 b5 - a5 b3 b4 - b3 b5");
            let mut eqs = vec![first];
            for _ in 1..6 {
                let next = cyclic_shift(eqs.last().expect("nonempty"), 6);
                eqs.push(next);
            }
            eqs
        }
        _ => return None,
    };
    let odd: &[&[&str]] = match n {
        3 => &[&["0", "1", "1"], &["-1", "0", "1"], &["-1", "-1", "0"]],
        4 => &[
            &["0", "1", "a1", "1"],
            &["-1", "0", "1", "a2"],
            &["-a1", "-1", "0", "1"],
            &["-1", "-a2", "-1", "0"],
        ],
        5 => &[
            &["0", "1", "a1", "a4", "1"],
            &["-1", "0", "1", "a2", "a5"],
            &["-a1", "-1", "0", "1", "a3"],
            &["-a4", "-a2", "-1", "0", "1"],
            &["-1", "-a5", "-a3", "-1", "0"],
        ],
        _ => &[
            &["0", "1", "a1", "a1 a2 - 1", "a5", "1"],
            &["-1", "0", "1", "a2", "a2 a3 - 1", "a6"],
            &["-a1", "-1", "0", "1", "a3", "a3 a4 - 1"],
            &["1 - a1 a2", "-a2", "-1", "0", "1", "a4"],
            &["-a5", "1 - a2 a3", "-a3", "-1", "0", "1"],
            &["-1", "-a6", "1 - a3 a4", "-a4", "-1", "0"],
        ],
    };
    out.extend(linear_system(odd));
    Some(out)
}

/// A closed instance with coefficients indexed from 1, for `n = 3, 4, 5`.
#[must_use]
pub fn reference_instance(n: usize) -> Option<HillCoefficients> {
    match n {
        3 => Some(presets::period_three()),
        4 => Some(presets::width_one().reindexed(1)),
        5 => Some(presets::pentagramma().reindexed(1)),
        _ => None,
    }
}

/// Substitutes `aᵢ ↦ c.a(i)`, `bᵢ ↦ c.beta(i)` for `i = 1..=n`.
#[must_use]
pub fn evaluate_at(eq: &SuperScalar, c: &HillCoefficients) -> SuperScalar {
    let mut values = BTreeMap::new();
    for i in 1..=c.period() as i64 {
        values.insert(GeneratorId::even("a", i), c.a(i));
        values.insert(GeneratorId::odd("b", i), c.beta(i));
    }
    eq.substitute(&values)
        .expect("coefficients are homogeneous of the right parity")
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ReferenceCheck {
    pub equation: SuperScalar,
    /// Equal, after normalization, to one of the raw equations.
    pub in_raw: bool,
    /// Vanishes on [`reference_instance`]; absent when there is none.
    pub vanishes: Option<bool>,
}

/// Checks every reference equation against the raw list and the closed
/// instance.
#[must_use]
pub fn check_reference(n: usize) -> Option<Vec<ReferenceCheck>> {
    let reference = reference_equations(n)?;
    let raw: BTreeSet<_> = raw_equations(n).into_iter().collect();
    let instance = reference_instance(n);
    Some(
        reference
            .into_iter()
            .map(|eq| ReferenceCheck {
                in_raw: raw.contains(&normalize_equation(&eq)),
                vanishes: instance.as_ref().map(|c| evaluate_at(&eq, c).is_zero()),
                equation: eq,
            })
            .collect(),
    )
}
