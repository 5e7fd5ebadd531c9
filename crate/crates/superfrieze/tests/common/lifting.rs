//! Lifts a classical closed frieze to a superfrieze with two odd
//! generators: odd parts from the kernel of the linearized odd monodromy,
//! even parts corrected by `θ₁θ₂` terms until the monodromy is exactly
//! `diag(−1, −1, 1)`.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superfrieze::hill::{HillCoefficients, HillSystem};
use superfrieze::{presets, GeneratorId, Rational, SuperMatrix, SuperScalar};

use super::oracle::{is_zero_vec, kernel, mat_vec, odd_coefficient, rational, solve};

const ODD_SLOTS: [(usize, usize); 4] = [(0, 2), (1, 2), (2, 0), (2, 1)];
const EVEN_SLOTS: [(usize, usize); 5] = [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)];

fn t1() -> GeneratorId {
    GeneratorId::odd("theta", 1)
}

fn t2() -> GeneratorId {
    GeneratorId::odd("theta", 2)
}

fn monodromy(a: Vec<SuperScalar>, beta: Vec<SuperScalar>) -> SuperMatrix {
    let c = HillCoefficients::with_start(0, a, beta).expect("homogeneous");
    HillSystem::new(c).expect("period at least 3").monodromy()
}

fn column(m: &SuperMatrix, slots: &[(usize, usize)], odd: &[GeneratorId]) -> Vec<Rational> {
    slots.iter().map(|&(r, c)| odd_coefficient(m.get(r, c), odd)).collect()
}

fn transpose(cols: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let rows = cols.first().map_or(0, Vec::len);
    (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

pub struct Lifted {
    pub quiddity: Vec<i64>,
    pub coefficients: HillCoefficients,
    pub odd_kernel_dim: usize,
}

/// Lift of `quiddity`, with the odd directions drawn by `rng`.
pub fn lift(quiddity: &[i64], rng: &mut ChaCha8Rng) -> Result<Lifted, String> {
    let n = quiddity.len();
    let c: Vec<SuperScalar> = quiddity.iter().map(|&q| SuperScalar::from_integer(q)).collect();
    let zero = vec![SuperScalar::zero(); n];
    let t1s = SuperScalar::generator(&t1());
    let t2s = SuperScalar::generator(&t2());
    let t12 = &t1s * &t2s;

    let odd_cols: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut beta = zero.clone();
            beta[i] = t1s.clone();
            column(&monodromy(c.clone(), beta), &ODD_SLOTS, &[t1()])
        })
        .collect();
    let odd_system = transpose(&odd_cols);
    let basis = kernel(&odd_system, n);
    if basis.is_empty() {
        return Err(format!("{quiddity:?}: trivial odd kernel"));
    }
    let mut draw = || loop {
        let mut u = vec![rational(0); n];
        for b in &basis {
            let r = rational(rng.random_range(-2i64..=2));
            for (x, y) in u.iter_mut().zip(b) {
                *x = &*x + &(&r * y);
            }
        }
        if !is_zero_vec(&u) {
            assert!(is_zero_vec(&mat_vec(&odd_system, &u)));
            return u;
        }
    };
    let (u, w) = (draw(), draw());
    let beta: Vec<SuperScalar> = u
        .iter()
        .zip(&w)
        .map(|(p, q)| SuperScalar::from_rational(p.clone()) * &t1s + SuperScalar::from_rational(q.clone()) * &t2s)
        .collect();

    let even_cols: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut a = c.clone();
            a[i] = &a[i] + &t12;
            column(&monodromy(a, zero.clone()), &EVEN_SLOTS, &[t1(), t2()])
        })
        .collect();
    let residual = column(&monodromy(c.clone(), beta.clone()), &EVEN_SLOTS, &[t1(), t2()]);
    let rhs: Vec<Rational> = residual.iter().map(|r| -r.clone()).collect();
    let e = solve(&transpose(&even_cols), &rhs).ok_or_else(|| format!("{quiddity:?}: even correction inconsistent"))?;
    let a: Vec<SuperScalar> = c
        .iter()
        .zip(&e)
        .map(|(ci, ei)| ci + &(SuperScalar::from_rational(ei.clone()) * &t12))
        .collect();

    let m = monodromy(a.clone(), beta.clone());
    if m != SuperMatrix::hill_target() {
        return Err(format!("{quiddity:?}: corrected monodromy is {m}"));
    }
    Ok(Lifted {
        quiddity: quiddity.to_vec(),
        coefficients: HillCoefficients::with_start(0, a, beta).expect("homogeneous"),
        odd_kernel_dim: basis.len(),
    })
}

/// Lift of a random triangulation quiddity of size `4..=7`.
pub fn random_lift(seed: u64) -> Result<Lifted, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(4usize..=7);
    let q = presets::triangulation_quiddity(n, |len| rng.random_range(0..len));
    lift(&q, &mut rng)
}
