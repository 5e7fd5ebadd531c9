//! Algebraic invariants as seeded property runs shared by the property
//! tests and the acceptance summary.

use proptest::prelude::*;
use proptest::strategy::Strategy;
use proptest::test_runner::TestCaseResult;
use superfrieze::hill::{self, group_action, nilpotent_translate, shift_t, super_shift, HillSystem, SuperSequencePair};
use superfrieze::supermatrix::determinant;
use superfrieze::{Parity, SuperMatrix, SuperScalar, Superfrieze};

use super::gen::{self, runner, CASES};
use super::oracle::permutation_determinant;

/// Runs `test` on `CASES` seeded inputs; returns the number of cases.
pub fn check<S: Strategy>(strategy: S, test: impl Fn(S::Value) -> TestCaseResult) -> Result<u32, String>
where
    S::Value: std::fmt::Debug,
{
    runner().run(&strategy, test).map(|()| CASES).map_err(|e| e.to_string())
}

pub fn koszul_sign_rule() -> Result<u32, String> {
    check((gen::homogeneous(), gen::homogeneous()), |((p, u), (q, v))| {
        let lhs = &u * &v;
        let swapped = &v * &u;
        let rhs = if p == Parity::Odd && q == Parity::Odd { -swapped } else { swapped };
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

pub fn odd_squares_vanish() -> Result<u32, String> {
    check(gen::odd_scalar(), |u| {
        prop_assert!((&u * &u).is_zero());
        Ok(())
    })
}

pub fn mul_associative() -> Result<u32, String> {
    check((gen::scalar(), gen::scalar(), gen::scalar()), |(u, v, w)| {
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
        prop_assert_eq!(&(&u + &v) * &w, &(&u * &w) + &(&v * &w));
        Ok(())
    })
}

pub fn invert_correct() -> Result<u32, String> {
    check(gen::invertible(), |u| {
        let inv = u.invert().map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!((&u * &inv).is_one());
        prop_assert!((&inv * &u).is_one());
        Ok(())
    })
}

pub fn super_shift_squares_to_minus_t() -> Result<u32, String> {
    check(gen::sequence_pair(), |s| {
        prop_assert_eq!(super_shift(&super_shift(&s)), shift_t(&s).negate());
        Ok(())
    })
}

/// `(l, μ)·((k, λ)·s) = (k + l, λ + μ)·s` followed by the translation by
/// `λμ`.
pub fn group_action_composition() -> Result<u32, String> {
    check(
        (-3i64..=3, -3i64..=3, gen::odd_scalar(), gen::odd_scalar(), gen::sequence_pair()),
        |(k, l, lambda, mu, s)| {
            fn step(k: i64, lam: &SuperScalar, s: &SuperSequencePair) -> Result<SuperSequencePair, TestCaseError> {
                group_action(k, lam, s).map_err(|e| TestCaseError::fail(e.to_string()))
            }
            let first = step(k, &lambda, &s)?;
            let lhs = step(l, &mu, &first)?;
            let sum = step(k + l, &(&lambda + &mu), &s)?;
            let rhs = nilpotent_translate(&(&lambda * &mu), &sum).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert!(!lhs.v.is_empty() && !lhs.w.is_empty());
            prop_assert!(lhs.agrees_with(&rhs), "{:?} vs {:?}", lhs, rhs);
            Ok(())
        },
    )
}

fn product_of_transfers(pairs: &[(SuperScalar, SuperScalar)]) -> SuperMatrix {
    pairs
        .iter()
        .map(|(a, b)| hill::transfer_matrix(a, b).expect("parity-correct"))
        .reduce(|acc, m| m.mat_mul(&acc).expect("same block"))
        .expect("nonempty")
}

/// Products of transfer matrices stay in OSp(1|2) and satisfy
/// `γ = aβ − bα`, `δ = cβ − dα`, `αβ = γδ`.
pub fn osp_closure() -> Result<u32, String> {
    check(
        prop::collection::vec((gen::even_scalar(), gen::odd_scalar()), 1..4),
        |pairs| {
            let g = product_of_transfers(&pairs);
            prop_assert!(g.is_osp12());
            let e = |r, c| g.get(r, c).clone();
            let (a, b, gamma) = (e(0, 0), e(0, 1), e(0, 2));
            let (c, d, delta) = (e(1, 0), e(1, 1), e(1, 2));
            let (alpha, beta) = (e(2, 0), e(2, 1));
            prop_assert_eq!(&gamma, &(&a * &beta - &b * &alpha));
            prop_assert_eq!(&delta, &(&c * &beta - &d * &alpha));
            prop_assert_eq!(&alpha * &beta, &gamma * &delta);
            let inv = g.osp_inverse().map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert!(inv.is_osp12());
            prop_assert_eq!(g.mat_mul(&inv).unwrap(), SuperMatrix::identity(2, 1));
            Ok(())
        },
    )
}

/// `M_{i+1} = A_{i+n} M_i A_i⁻¹`.
pub fn monodromy_conjugation() -> Result<u32, String> {
    check((gen::hill_coefficients(3, 5), -3i64..=3), |(c, i)| {
        let n = c.period() as i64;
        let sys = HillSystem::new(c).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let a_i_inv = sys.transfer(i).osp_inverse().map_err(|e| TestCaseError::fail(e.to_string()))?;
        let rhs = sys
            .transfer(i + n)
            .mat_mul(&sys.monodromy_at(i))
            .and_then(|m| m.mat_mul(&a_i_inv))
            .unwrap();
        prop_assert_eq!(sys.monodromy_at(i + 1), rhs);
        Ok(())
    })
}

/// Every diamond of a generic frieze satisfies the rule (including
/// `ΞΣ = ΦΨ`) and the neighbour relations.
pub fn diamond_and_neighbor_relations() -> Result<u32, String> {
    check(gen::frieze_rows(4, 6), |c| {
        let f = match Superfrieze::from_first_rows(&c) {
            Ok(f) => f,
            Err(superfrieze::FriezeError::NotGeneric(_)) => return Err(TestCaseError::reject("not generic")),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let diamonds = f.diamonds();
        prop_assert!(!diamonds.is_empty());
        for (idx, d) in &diamonds {
            prop_assert_eq!(&d.xi * &d.sigma, &d.phi * &d.psi, "at {}", idx);
        }
        prop_assert!(f.rule_violations().is_empty());
        let checked = f.check_neighbor_relations().map_err(|i| TestCaseError::fail(format!("neighbor relation at {i}")))?;
        prop_assert!(checked > 0);
        Ok(())
    })
}

pub fn det_first_column_matches_permutations() -> Result<u32, String> {
    check(gen::even_square(4), |g| {
        let m = SuperMatrix::new(g.len(), 0, g.clone()).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let expected = permutation_determinant(&g);
        prop_assert_eq!(m.det_first_column(), expected.clone());
        prop_assert_eq!(determinant(&g), expected);
        Ok(())
    })
}

pub fn berezinian_multiplicative() -> Result<u32, String> {
    let blocks = prop_oneof![Just((1usize, 1usize)), Just((2, 1)), Just((1, 2)), Just((2, 2))];
    check(
        blocks.prop_flat_map(|(p, q)| (gen::supermatrix(p, q), gen::supermatrix(p, q))),
        |(m1, m2)| {
            let ber = |m: &SuperMatrix| m.berezinian().map_err(|e| TestCaseError::fail(e.to_string()));
            let prod = m1.mat_mul(&m2).unwrap();
            prop_assert_eq!(ber(&prod)?, ber(&m1)? * ber(&m2)?);
            Ok(())
        },
    )
}

type Property = (&'static str, fn() -> Result<u32, String>);

pub const ALL: &[Property] = &[
    ("Koszul sign rule", koszul_sign_rule),
    ("odd squares vanish", odd_squares_vanish),
    ("mul associativity", mul_associative),
    ("invert", invert_correct),
    ("super shift squared = -T", super_shift_squares_to_minus_t),
    ("group action composition", group_action_composition),
    ("OSp(1|2) closure and implied relations", osp_closure),
    ("monodromy conjugation", monodromy_conjugation),
    ("diamond and neighbor relations", diamond_and_neighbor_relations),
    ("det_first_column vs permutations", det_first_column_matches_permutations),
    ("Berezinian multiplicativity", berezinian_multiplicative),
];
