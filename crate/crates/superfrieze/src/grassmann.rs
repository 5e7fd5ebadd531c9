//! Supercommutative Laurent polynomials over the rationals.
//!
//! Even generators commute with everything and may carry negative exponents.
//! Odd generators anticommute with each other and square to zero. Every
//! [`SuperScalar`] is kept in a canonical form: monomials with their odd
//! factors sorted, no zero coefficients, terms ordered by [`Monomial`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational coefficient.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrassmannError {
    #[error("element is not invertible: its body is not a single nonzero monomial")]
    NotInvertible,
    #[error("substitution for generator {0} does not preserve parity")]
    ParityMismatch(String),
    #[error("invalid generator name {0:?}")]
    InvalidName(String),
    #[error("invalid coefficient {0:?}")]
    InvalidCoefficient(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    #[must_use]
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// Parity of a product.
    #[must_use]
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Homogeneity of an element. Zero is reported as even.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityClass {
    Even,
    Odd,
    Mixed,
}

/// A named, indexed generator of fixed parity.
///
/// Ordered by parity (even first), then name, then index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId {
    parity: Parity,
    name: Arc<str>,
    index: i64,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(char::is_alphabetic)
}

impl GeneratorId {
    pub fn new(parity: Parity, name: &str, index: i64) -> Result<Self, GrassmannError> {
        if !valid_name(name) {
            return Err(GrassmannError::InvalidName(name.to_string()));
        }
        Ok(GeneratorId {
            parity,
            name: Arc::from(name),
            index,
        })
    }

    /// Even generator; panics on a name that is not purely alphabetic.
    #[must_use]
    pub fn even(name: &str, index: i64) -> Self {
        Self::new(Parity::Even, name, index).expect("generator names are alphabetic")
    }

    /// Odd generator; panics on a name that is not purely alphabetic.
    #[must_use]
    pub fn odd(name: &str, index: i64) -> Self {
        Self::new(Parity::Odd, name, index).expect("generator names are alphabetic")
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn index(&self) -> i64 {
        self.index
    }

    /// Key used in the JSON form: `name_index`.
    #[must_use]
    pub fn key(&self) -> String {
        format!("{}_{}", self.name, self.index)
    }

    pub fn from_key(key: &str, parity: Parity) -> Result<Self, GrassmannError> {
        let (name, index) = key
            .rsplit_once('_')
            .ok_or_else(|| GrassmannError::InvalidName(key.to_string()))?;
        let index = index
            .parse::<i64>()
            .map_err(|_| GrassmannError::InvalidName(key.to_string()))?;
        Self::new(parity, name, index)
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            0 => write!(f, "{}", self.name),
            i if i > 0 => write!(f, "{}{}", self.name, i),
            i => write!(f, "{}_{}", self.name, i),
        }
    }
}

/// Coefficient-free product of generators.
///
/// `even` holds nonzero exponents sorted by generator; `odd` holds strictly
/// increasing odd generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    even: Vec<(GeneratorId, i32)>,
    odd: Vec<GeneratorId>,
}

impl Monomial {
    #[must_use]
    pub fn one() -> Self {
        Monomial::default()
    }

    #[must_use]
    pub fn generator(g: &GeneratorId) -> Self {
        match g.parity {
            Parity::Even => Monomial {
                even: vec![(g.clone(), 1)],
                odd: Vec::new(),
            },
            Parity::Odd => Monomial {
                even: Vec::new(),
                odd: vec![g.clone()],
            },
        }
    }

    /// Builds a monomial from even exponents and an ordered list of odd
    /// factors. Returns the canonical monomial and the sign of the sorting
    /// permutation, or `None` when an odd factor repeats.
    pub fn from_factors(
        even: impl IntoIterator<Item = (GeneratorId, i32)>,
        odd: impl IntoIterator<Item = GeneratorId>,
    ) -> Option<(Monomial, bool)> {
        let mut exps: BTreeMap<GeneratorId, i32> = BTreeMap::new();
        for (g, e) in even {
            debug_assert_eq!(g.parity, Parity::Even);
            *exps.entry(g).or_insert(0) += e;
        }
        let mut odd: Vec<GeneratorId> = odd.into_iter().collect();
        let mut negative = false;
        // insertion sort counting transpositions
        for i in 1..odd.len() {
            let mut j = i;
            while j > 0 && odd[j - 1] > odd[j] {
                odd.swap(j - 1, j);
                negative = !negative;
                j -= 1;
            }
        }
        if odd.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let even = exps.into_iter().filter(|(_, e)| *e != 0).collect();
        Some((Monomial { even, odd }, negative))
    }

    pub fn is_one(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }

    pub fn even_factors(&self) -> &[(GeneratorId, i32)] {
        &self.even
    }

    pub fn odd_factors(&self) -> &[GeneratorId] {
        &self.odd
    }

    pub fn odd_degree(&self) -> usize {
        self.odd.len()
    }

    pub fn parity(&self) -> Parity {
        if self.odd.len().is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Product `self * other`: `None` if it vanishes, otherwise the monomial
    /// and whether the Koszul sign is negative.
    pub fn mul(&self, other: &Monomial) -> Option<(Monomial, bool)> {
        let mut odd = Vec::with_capacity(self.odd.len() + other.odd.len());
        let mut negative = false;
        let (mut i, mut j) = (0, 0);
        while i < self.odd.len() && j < other.odd.len() {
            match self.odd[i].cmp(&other.odd[j]) {
                std::cmp::Ordering::Less => {
                    odd.push(self.odd[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    // other.odd[j] moves past the remaining factors of self
                    if (self.odd.len() - i) % 2 == 1 {
                        negative = !negative;
                    }
                    odd.push(other.odd[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => return None,
            }
        }
        odd.extend_from_slice(&self.odd[i..]);
        odd.extend_from_slice(&other.odd[j..]);

        let mut even = Vec::with_capacity(self.even.len() + other.even.len());
        let (mut i, mut j) = (0, 0);
        while i < self.even.len() && j < other.even.len() {
            let (ga, ea) = &self.even[i];
            let (gb, eb) = &other.even[j];
            match ga.cmp(gb) {
                std::cmp::Ordering::Less => {
                    even.push((ga.clone(), *ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    even.push((gb.clone(), *eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    if ea + eb != 0 {
                        even.push((ga.clone(), ea + eb));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        even.extend_from_slice(&self.even[i..]);
        even.extend_from_slice(&other.even[j..]);
        Some((Monomial { even, odd }, negative))
    }

    fn even_inverse(&self) -> Option<Monomial> {
        if !self.odd.is_empty() {
            return None;
        }
        Some(Monomial {
            even: self.even.iter().map(|(g, e)| (g.clone(), -e)).collect(),
            odd: Vec::new(),
        })
    }

    fn generators(&self) -> impl Iterator<Item = &GeneratorId> {
        self.even.iter().map(|(g, _)| g).chain(self.odd.iter())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (g, e) in &self.even {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        for g in &self.odd {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Element of the supercommutative Laurent ring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SuperScalar {
    terms: BTreeMap<Monomial, Rational>,
}

impl SuperScalar {
    #[must_use]
    pub fn zero() -> Self {
        SuperScalar::default()
    }

    #[must_use]
    pub fn one() -> Self {
        Self::from_integer(1)
    }

    #[must_use]
    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    #[must_use]
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    #[must_use]
    pub fn from_rational(q: Rational) -> Self {
        Self::from_term(Monomial::one(), q)
    }

    #[must_use]
    pub fn from_term(m: Monomial, q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(m, q);
        }
        SuperScalar { terms }
    }

    #[must_use]
    pub fn generator(g: &GeneratorId) -> Self {
        Self::from_term(Monomial::generator(g), Rational::one())
    }

    #[must_use]
    pub fn even(name: &str, index: i64) -> Self {
        Self::generator(&GeneratorId::even(name, index))
    }

    #[must_use]
    pub fn odd(name: &str, index: i64) -> Self {
        Self::generator(&GeneratorId::odd(name, index))
    }

    /// Builds a canonical element from arbitrary (possibly repeated or
    /// unsorted) terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut out = SuperScalar::zero();
        for (m, q) in terms {
            out.add_term(m, q);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, q: Rational) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, q)| m.is_one() && q.is_one())
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The rational value if the element is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, q) = self.terms.iter().next()?;
                m.is_one().then(|| q.clone())
            }
            _ => None,
        }
    }

    /// Terms without odd factors.
    #[must_use]
    pub fn body(&self) -> SuperScalar {
        self.filtered(|m| m.odd.is_empty())
    }

    /// Terms with at least one odd factor.
    #[must_use]
    pub fn soul(&self) -> SuperScalar {
        self.filtered(|m| !m.odd.is_empty())
    }

    /// Terms of the given parity.
    #[must_use]
    pub fn part(&self, parity: Parity) -> SuperScalar {
        self.filtered(|m| m.parity() == parity)
    }

    /// Terms with exactly `degree` odd factors.
    #[must_use]
    pub fn odd_degree_part(&self, degree: usize) -> SuperScalar {
        self.filtered(|m| m.odd.len() == degree)
    }

    fn filtered(&self, keep: impl Fn(&Monomial) -> bool) -> SuperScalar {
        SuperScalar {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, q)| (m.clone(), q.clone()))
                .collect(),
        }
    }

    pub fn parity_class(&self) -> ParityClass {
        let mut even = false;
        let mut odd = false;
        for m in self.terms.keys() {
            match m.parity() {
                Parity::Even => even = true,
                Parity::Odd => odd = true,
            }
        }
        match (even, odd) {
            (_, false) => ParityClass::Even,
            (false, true) => ParityClass::Odd,
            (true, true) => ParityClass::Mixed,
        }
    }

    /// True if every term is even (zero included).
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.parity() == Parity::Even)
    }

    /// True if every term is odd (zero included).
    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|m| m.parity() == Parity::Odd)
    }

    pub fn has_parity(&self, parity: Parity) -> bool {
        match parity {
            Parity::Even => self.is_even(),
            Parity::Odd => self.is_odd(),
        }
    }

    /// True when the body is a single nonzero monomial, so that
    /// [`SuperScalar::invert`] succeeds.
    pub fn has_unit_body(&self) -> bool {
        self.terms.keys().filter(|m| m.odd.is_empty()).count() == 1
    }

    /// All generators occurring in the element.
    pub fn generators(&self) -> BTreeSet<GeneratorId> {
        self.terms
            .keys()
            .flat_map(|m| m.generators().cloned())
            .collect()
    }

    #[must_use]
    pub fn scale(&self, q: &Rational) -> SuperScalar {
        if q.is_zero() {
            return SuperScalar::zero();
        }
        SuperScalar {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * q))
                .collect(),
        }
    }

    fn mul_ref(&self, rhs: &SuperScalar) -> SuperScalar {
        let mut out = SuperScalar::zero();
        for (ma, qa) in &self.terms {
            for (mb, qb) in &rhs.terms {
                if let Some((m, negative)) = ma.mul(mb) {
                    let q = qa * qb;
                    out.add_term(m, if negative { -q } else { q });
                }
            }
        }
        out
    }

    /// Multiplicative inverse: `body⁻¹ · Σₖ (−body⁻¹·soul)ᵏ`.
    pub fn invert(&self) -> Result<SuperScalar, GrassmannError> {
        let mut body_terms = self.terms.iter().filter(|(m, _)| m.odd.is_empty());
        let (bm, bq) = body_terms.next().ok_or(GrassmannError::NotInvertible)?;
        if body_terms.next().is_some() {
            return Err(GrassmannError::NotInvertible);
        }
        let body_inv = SuperScalar::from_term(
            bm.even_inverse().ok_or(GrassmannError::NotInvertible)?,
            bq.recip(),
        );
        let step = -(&body_inv * &self.soul());
        let mut power = SuperScalar::one();
        let mut series = SuperScalar::one();
        loop {
            power = &power * &step;
            if power.is_zero() {
                break;
            }
            series += &power;
        }
        Ok(&body_inv * &series)
    }

    /// `self · other⁻¹`.
    pub fn divide(&self, other: &SuperScalar) -> Result<SuperScalar, GrassmannError> {
        Ok(self * &other.invert()?)
    }

    /// Integer power; negative exponents go through [`SuperScalar::invert`].
    pub fn pow(&self, exp: i32) -> Result<SuperScalar, GrassmannError> {
        let base = if exp < 0 {
            self.invert()?
        } else {
            self.clone()
        };
        let mut out = SuperScalar::one();
        let mut sq = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(out)
    }

    /// Replaces generators by values. Each replacement must have the parity
    /// of the generator it replaces; even generators with negative exponent
    /// need an invertible replacement.
    pub fn substitute(
        &self,
        values: &BTreeMap<GeneratorId, SuperScalar>,
    ) -> Result<SuperScalar, GrassmannError> {
        for (g, v) in values {
            if !v.has_parity(g.parity) {
                return Err(GrassmannError::ParityMismatch(g.to_string()));
            }
        }
        let mut out = SuperScalar::zero();
        for (m, q) in &self.terms {
            let mut acc = SuperScalar::from_rational(q.clone());
            for (g, e) in &m.even {
                match values.get(g) {
                    Some(v) => acc = &acc * &v.pow(*e)?,
                    None => {
                        acc = &acc
                            * &SuperScalar::from_term(
                                Monomial {
                                    even: vec![(g.clone(), *e)],
                                    odd: Vec::new(),
                                },
                                Rational::one(),
                            )
                    }
                }
            }
            for g in &m.odd {
                match values.get(g) {
                    Some(v) => acc = &acc * v,
                    None => acc = &acc * &SuperScalar::generator(g),
                }
                if acc.is_zero() {
                    break;
                }
            }
            out += &acc;
        }
        Ok(out)
    }
}

impl From<i64> for SuperScalar {
    fn from(n: i64) -> Self {
        SuperScalar::from_integer(n)
    }
}

impl From<&GeneratorId> for SuperScalar {
    fn from(g: &GeneratorId) -> Self {
        SuperScalar::generator(g)
    }
}

impl AddAssign<&SuperScalar> for SuperScalar {
    fn add_assign(&mut self, rhs: &SuperScalar) {
        for (m, q) in &rhs.terms {
            self.add_term(m.clone(), q.clone());
        }
    }
}

impl SubAssign<&SuperScalar> for SuperScalar {
    fn sub_assign(&mut self, rhs: &SuperScalar) {
        for (m, q) in &rhs.terms {
            self.add_term(m.clone(), -q.clone());
        }
    }
}

impl Neg for &SuperScalar {
    type Output = SuperScalar;
    fn neg(self) -> SuperScalar {
        SuperScalar {
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), -q.clone()))
                .collect(),
        }
    }
}

impl Neg for SuperScalar {
    type Output = SuperScalar;
    fn neg(mut self) -> SuperScalar {
        for q in self.terms.values_mut() {
            *q = -q.clone();
        }
        self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&SuperScalar> for &SuperScalar {
            type Output = SuperScalar;
            fn $method(self, rhs: &SuperScalar) -> SuperScalar {
                let f: fn(&SuperScalar, &SuperScalar) -> SuperScalar = $body;
                f(self, rhs)
            }
        }
        impl $trait<SuperScalar> for SuperScalar {
            type Output = SuperScalar;
            fn $method(self, rhs: SuperScalar) -> SuperScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&SuperScalar> for SuperScalar {
            type Output = SuperScalar;
            fn $method(self, rhs: &SuperScalar) -> SuperScalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<SuperScalar> for &SuperScalar {
            type Output = SuperScalar;
            fn $method(self, rhs: SuperScalar) -> SuperScalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| {
    let mut out = a.clone();
    out += b;
    out
});
binop!(Sub, sub, |a, b| {
    let mut out = a.clone();
    out -= b;
    out
});
binop!(Mul, mul, |a, b| a.mul_ref(b));

impl std::iter::Sum for SuperScalar {
    fn sum<I: Iterator<Item = SuperScalar>>(iter: I) -> Self {
        let mut out = SuperScalar::zero();
        for x in iter {
            out += &x;
        }
        out
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, m: &Monomial, q: &Rational) -> fmt::Result {
    if m.is_one() {
        return write!(f, "{q}");
    }
    if q.is_one() {
        write!(f, "{m}")
    } else if (-q).is_one() {
        write!(f, "-{m}")
    } else {
        write!(f, "{q}*{m}")
    }
}

impl fmt::Display for SuperScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| a.odd.len().cmp(&b.odd.len()).then_with(|| a.cmp(b)));
        for (k, (m, q)) in ordered.into_iter().enumerate() {
            if k == 0 {
                fmt_term(f, m, q)?;
            } else if q.is_negative() {
                f.write_str(" - ")?;
                fmt_term(f, m, &-q.clone())?;
            } else {
                f.write_str(" + ")?;
                fmt_term(f, m, q)?;
            }
        }
        Ok(())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, GrassmannError> {
    let bad = || GrassmannError::InvalidCoefficient(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    #[serde(default)]
    even: BTreeMap<String, i32>,
    #[serde(default)]
    odd: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for SuperScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(m, q)| TermRepr {
                coeff: q.to_string(),
                even: m.even.iter().map(|(g, e)| (g.key(), *e)).collect(),
                odd: m.odd.iter().map(GeneratorId::key).collect(),
            })
            .collect();
        ScalarRepr { terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SuperScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = ScalarRepr::deserialize(deserializer)?;
        let mut out = SuperScalar::zero();
        for t in repr.terms {
            let q = parse_rational(&t.coeff).map_err(D::Error::custom)?;
            let even = t
                .even
                .iter()
                .map(|(k, e)| Ok((GeneratorId::from_key(k, Parity::Even)?, *e)))
                .collect::<Result<Vec<_>, GrassmannError>>()
                .map_err(D::Error::custom)?;
            let odd = t
                .odd
                .iter()
                .map(|k| GeneratorId::from_key(k, Parity::Odd))
                .collect::<Result<Vec<_>, GrassmannError>>()
                .map_err(D::Error::custom)?;
            if let Some((m, negative)) = Monomial::from_factors(even, odd) {
                out.add_term(m, if negative { -q } else { q });
            }
        }
        Ok(out)
    }
}
