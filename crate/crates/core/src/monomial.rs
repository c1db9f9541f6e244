//! Monomials x^u and direction vectors c ∈ ℤⁿ.

use num_integer::Integer;

use crate::error::{Error, Result};

/// A monomial x^u, stored as its exponent vector u ∈ ℕⁿ.
///
/// The derived `Ord` (lexicographic on the exponent vector) is only a storage
/// order; term orders live in [`crate::order::TermOrder`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The monomial 1 in n variables.
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn variable(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// self / other, when other divides self.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.divides(self) {
            Some(Monomial(
                self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Componentwise max(self - other, 0); the generator map of (⟨self⟩ : other).
    pub fn saturating_div(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// u + k·c when the result stays in ℕⁿ.
    pub fn shift(&self, c: &Direction, k: i64) -> Option<Self> {
        let mut out = Vec::with_capacity(self.0.len());
        for (u, ci) in self.0.iter().zip(c.entries()) {
            let v = *u as i64 + k * ci;
            if v < 0 {
                return None;
            }
            out.push(v as u32);
        }
        Some(Monomial(out))
    }

    pub fn dot(&self, w: &[i64]) -> i64 {
        self.0.iter().zip(w).map(|(u, wi)| *u as i64 * wi).sum()
    }

    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }
}

/// Degree-then-lex descending, the canonical display order for terms.
pub fn display_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    b.total_degree()
        .cmp(&a.total_degree())
        .then_with(|| b.cmp(a))
}

/// A direction vector c ∈ ℤⁿ, nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Direction(Vec<i64>);

impl Direction {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.iter().all(|&c| c == 0) {
            return Err(Error::ZeroDirection);
        }
        Ok(Direction(entries))
    }

    /// The primitive vector in the direction of `v`, keeping the sign of `v`.
    pub fn primitive(v: &[i64]) -> Result<Self> {
        let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g == 0 {
            return Err(Error::ZeroDirection);
        }
        Ok(Direction(v.iter().map(|&x| x / g).collect()))
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_primitive(&self) -> bool {
        self.0.iter().fold(0i64, |acc, &x| acc.gcd(&x)) == 1
    }

    pub fn has_mixed_signs(&self) -> bool {
        self.0.iter().any(|&c| c > 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn neg(&self) -> Self {
        Direction(self.0.iter().map(|&c| -c).collect())
    }

    /// Flip the sign so the first nonzero entry is positive.
    pub fn canonical_sign(&self) -> Self {
        match self.0.iter().find(|&&c| c != 0) {
            Some(&c) if c < 0 => self.neg(),
            _ => self.clone(),
        }
    }

    /// The positive part c⁺ as a monomial exponent vector.
    pub fn positive_part(&self) -> Monomial {
        Monomial::new(self.0.iter().map(|&c| c.max(0) as u32).collect())
    }

    /// The negative part c⁻ as a monomial exponent vector (so c = c⁺ − c⁻).
    pub fn negative_part(&self) -> Monomial {
        Monomial::new(self.0.iter().map(|&c| (-c).max(0) as u32).collect())
    }
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// Standard variable names: x, y, z for n ≤ 3, otherwise x1..xn.
pub fn var_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{}", i)).collect()
    }
}

/// Render a monomial with the given variable names, e.g. `x^2*y`.
pub fn format_monomial(m: &Monomial, names: &[String]) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}
