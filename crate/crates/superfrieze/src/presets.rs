//! Named first rows of superfriezes and Hill coefficient families.

use crate::grassmann::SuperScalar;
use crate::hill::HillCoefficients;

fn even(name: &str) -> SuperScalar {
    SuperScalar::even(name, 0)
}

fn odd(name: &str) -> SuperScalar {
    SuperScalar::odd(name, 0)
}

fn over(num: &SuperScalar, den: &SuperScalar) -> SuperScalar {
    num.divide(den).expect("denominator is a monomial")
}

/// Width-1 closed superfrieze in the coordinates `(x, ξ, η)`, first row
/// indexed from 0: `a = (x, x′, x, x′)`, `β = (ξ, ξ′, ξ − xη, η)`.
#[must_use]
pub fn width_one() -> HillCoefficients {
    let (x, xi, eta) = (even("x"), odd("xi"), odd("eta"));
    let two = SuperScalar::from_integer(2);
    let x1 = over(&(&two + &(&eta * &xi)), &x);
    let xi1 = &eta - &over(&(&two * &xi), &x);
    let beta2 = &xi - &(&x * &eta);
    HillCoefficients::with_start(0, vec![x.clone(), x1.clone(), x, x1], vec![xi, xi1, beta2, eta])
        .expect("homogeneous")
}

/// Width-2 closed superfrieze in the coordinates `(x, y, ξ, η, ζ)`, first
/// row indexed from 0: `a = (x, x′, x″, y, y′)`, `β = (ξ, ξ′, ν, ζ*, ζ)` with
/// `ν = ξ + ζ − (1 + x)η/y`.
#[must_use]
pub fn pentagramma() -> HillCoefficients {
    let (x, y) = (even("x"), even("y"));
    let (xi, eta, zeta) = (odd("xi"), odd("eta"), odd("zeta"));
    let one = SuperScalar::one();
    let xy = &x * &y;
    let eta_xi = &eta * &xi;
    let x1 = over(&(&(&one + &y) + &eta_xi), &x);
    let y1 = over(&(&(&(&one + &x) + &y) + &eta_xi), &xy) + over(&(&zeta * &eta), &y);
    let x2 = over(&(&(&one + &x) + &eta_xi), &y)
        + &xi * &zeta
        + over(&(&(&x * &zeta) * &eta), &y);
    let xi1 = &eta - &over(&(&(&one + &y) * &xi), &x);
    let nu = &xi + &zeta - over(&(&(&one + &x) * &eta), &y);
    let zeta_star = &eta - &(&y * &zeta);
    HillCoefficients::with_start(0, vec![x, x1, x2, y, y1], vec![xi, xi1, nu, zeta_star, zeta])
        .expect("homogeneous")
}

/// Period-3 family `aᵢ = 1`, `βᵢ = (−1)ⁱ β`, indexed from 1.
#[must_use]
pub fn period_three() -> HillCoefficients {
    let beta = odd("beta");
    let one = SuperScalar::one();
    HillCoefficients::new(
        vec![one.clone(), one.clone(), one],
        vec![-&beta, beta.clone(), -&beta],
    )
    .expect("homogeneous")
}

/// First row `aᵢ = cᵢ`, `βᵢ = 0` of a classical frieze, indexed from 0.
pub fn classical(quiddity: &[i64]) -> Result<HillCoefficients, crate::hill::HillError> {
    HillCoefficients::with_start(
        0,
        quiddity.iter().map(|&c| SuperScalar::from_integer(c)).collect(),
        vec![SuperScalar::zero(); quiddity.len()],
    )
}

/// Quiddity of a triangulated `n`-gon grown from a triangle by gluing
/// triangles onto edges; `pick(len)` chooses the edge among `len`.
#[must_use]
pub fn triangulation_quiddity(n: usize, mut pick: impl FnMut(usize) -> usize) -> Vec<i64> {
    let mut c = vec![1, 1, 1];
    while c.len() < n {
        let k = pick(c.len()) % c.len();
        let next = (k + 1) % c.len();
        c[k] += 1;
        c[next] += 1;
        c.insert(k + 1, 1);
    }
    c
}
