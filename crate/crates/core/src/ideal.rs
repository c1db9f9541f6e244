//! Monomial ideals with minimal generating sets and staircase operations.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::monomial::{format_monomial, var_names, Monomial};

/// A monomial ideal, stored by its unique minimal generating set.
///
/// Generators are kept sorted lexicographically descending, which fixes a
/// canonical order for equality, hashing and display. The zero ideal has no
/// generators; the unit ideal is generated by 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize a generating set: drop every monomial divisible by another.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: g.nvars(),
                });
            }
        }
        let mut minimal: Vec<Monomial> = Vec::new();
        let set: BTreeSet<Monomial> = gens.into_iter().collect();
        for g in &set {
            if !set.iter().any(|h| h != g && h.divides(g)) {
                minimal.push(g.clone());
            }
        }
        // lex descending
        minimal.sort_by(|a, b| b.cmp(a));
        Ok(MonomialIdeal { n, gens: minimal })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![] }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// Membership: some generator divides m.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.nvars() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: m.nvars(),
            });
        }
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// Intersection, computed by minimalizing all pairwise lcms.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.n));
        }
        let mut lcms = Vec::new();
        for g in &self.gens {
            for h in &other.gens {
                lcms.push(g.lcm(h));
            }
        }
        MonomialIdeal::new(self.n, lcms)
    }

    /// The colon ideal (self : m), again a monomial ideal.
    pub fn quotient_by_monomial(&self, m: &Monomial) -> Self {
        let gens = self.gens.iter().map(|g| g.saturating_div(m)).collect();
        MonomialIdeal::new(self.n, gens).expect("dimensions preserved")
    }

    /// For each variable the least pure-power exponent among the generators,
    /// or None if some variable has no pure power (non-artinian).
    pub fn artinian_bounds(&self) -> Option<Vec<u32>> {
        let mut bounds = vec![None; self.n];
        for g in &self.gens {
            let support = g.support();
            if g.is_one() {
                // unit ideal: empty staircase
                bounds.iter_mut().for_each(|b| *b = Some(0));
            } else if support.len() == 1 {
                let i = support[0];
                let e = g.exponent(i);
                bounds[i] = Some(bounds[i].map_or(e, |old: u32| old.min(e)));
            }
        }
        bounds.into_iter().collect()
    }

    pub fn is_artinian(&self) -> bool {
        self.artinian_bounds().is_some()
    }

    /// The finite set {u : x^u ∉ M} for artinian M, in lex-ascending order.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        let bounds = self.artinian_bounds().ok_or(Error::InfiniteColength)?;
        let mut out = Vec::new();
        let mut current = vec![0u32; self.n];
        loop {
            let m = Monomial::new(current.clone());
            if !self.contains(&m)? {
                out.push(m);
            }
            // odometer over the box Π [0, bounds_i)
            let mut i = self.n;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                current[i] += 1;
                if current[i] < bounds[i] {
                    break;
                }
                current[i] = 0;
            }
        }
    }

    /// dim_K K\[x\]/M for artinian M.
    pub fn colength(&self) -> Result<usize> {
        Ok(self.standard_monomials()?.len())
    }

    pub fn to_text(&self) -> String {
        let names = var_names(self.n);
        if self.gens.is_empty() {
            return "0".to_string();
        }
        self.gens
            .iter()
            .map(|g| format_monomial(g, &names))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl std::fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<{}>", self.to_text())
    }
}
