//! Independent reference computations.

use num_traits::{One, Zero};
use superfrieze::{GeneratorId, Monomial, Rational, SuperScalar};

/// Leibniz expansion over all permutations; valid for commuting entries.
pub fn permutation_determinant(grid: &[Vec<SuperScalar>]) -> SuperScalar {
    let n = grid.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = SuperScalar::zero();
    permute(&mut perm, 0, &mut |p| {
        let mut term = SuperScalar::from_integer(sign(p));
        for (r, &c) in p.iter().enumerate() {
            term = term * &grid[r][c];
        }
        total += &term;
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

fn sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// Coefficient of the monomial `odd[0]·odd[1]⋯` (no even factors).
pub fn odd_coefficient(x: &SuperScalar, odd: &[GeneratorId]) -> Rational {
    if odd.is_empty() {
        return x.coefficient(&Monomial::one());
    }
    let (mono, negative) =
        Monomial::from_factors(std::iter::empty(), odd.iter().cloned()).expect("distinct odd generators");
    let c = x.coefficient(&mono);
    if negative {
        -c
    } else {
        c
    }
}

pub fn rational(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

/// Row-reduces `rows` in place; returns the pivot columns.
fn row_reduce(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &lead;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Basis of `{u : M u = 0}` for `M` with `cols` columns.
pub fn kernel(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut rows = m.to_vec();
    let pivots = row_reduce(&mut rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut u = vec![Rational::zero(); cols];
            u[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                u[p] = -rows[r][f].clone();
            }
            u
        })
        .collect()
}

/// One solution of `M u = rhs`, or `None` when inconsistent.
pub fn solve(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut rows, cols);
    if rows.iter().skip(pivots.len()).any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut u = vec![Rational::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        u[p] = rows[r][cols].clone();
    }
    Some(u)
}

pub fn mat_vec(m: &[Vec<Rational>], u: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(u).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

pub fn is_zero_vec(u: &[Rational]) -> bool {
    u.iter().all(|x| x.is_zero())
}
