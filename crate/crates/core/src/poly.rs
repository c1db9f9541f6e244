//! Multivariate polynomials over the active coefficient field.

use std::collections::BTreeMap;

use crate::field::{Coeff, Field};
use crate::intpoly::IntPoly;
use crate::monomial::{display_cmp, format_monomial, Monomial};
use crate::order::TermOrder;

/// A polynomial as a map from monomials to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Coeff, k: &Field) -> Self {
        let mut p = Polynomial::zero(n);
        p.add_term(Monomial::one(n), c, k);
        p
    }

    pub fn from_monomial(m: Monomial, k: &Field) -> Self {
        let mut p = Polynomial::zero(m.nvars());
        p.add_term(m, k.one(), k);
        p
    }

    pub fn from_terms(n: usize, terms: Vec<(Monomial, Coeff)>, k: &Field) -> Self {
        let mut p = Polynomial::zero(n);
        for (m, c) in terms {
            p.add_term(m, c, k);
        }
        p
    }

    /// Interpret an integer polynomial over the field.
    pub fn from_intpoly(ip: &IntPoly, k: &Field) -> Self {
        let mut p = Polynomial::zero(ip.nvars());
        for (m, c) in ip.terms() {
            p.add_term(m.clone(), k.from_bigint(c), k);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Coeff> {
        self.terms.get(m)
    }

    /// Add c·x^m in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Coeff, k: &Field) {
        if k.is_zero(&c) {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = k.add(&old, &c);
                if !k.is_zero(&sum) {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self, k: &Field) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone(), k);
        }
        out
    }

    pub fn sub(&self, rhs: &Self, k: &Field) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), k.neg(c), k);
        }
        out
    }

    pub fn neg(&self, k: &Field) -> Self {
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), k.neg(c));
        }
        out
    }

    pub fn mul(&self, rhs: &Self, k: &Field) -> Self {
        let mut out = Polynomial::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), k.mul(c1, c2), k);
            }
        }
        out
    }

    /// Multiply by the single term c·x^m.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff, k: &Field) -> Self {
        let mut out = Polynomial::zero(self.n);
        for (m1, c1) in &self.terms {
            let prod = k.mul(c1, c);
            if !k.is_zero(&prod) {
                out.terms.insert(m1.mul(m), prod);
            }
        }
        out
    }

    pub fn scale(&self, c: &Coeff, k: &Field) -> Self {
        self.mul_term(&Monomial::one(self.n), c, k)
    }

    /// Leading term with respect to a term order.
    pub fn leading_term(&self, ord: &TermOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().max_by(|(a, _), (b, _)| ord.cmp(a, b))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// The w-maximal homogeneous part (the initial form in_w).
    pub fn initial_form(&self, w: &[i64]) -> Self {
        let max = match self.terms.keys().map(|m| m.dot(w)).max() {
            Some(v) => v,
            None => return Polynomial::zero(self.n),
        };
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.dot(w) == max)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Polynomial { n: self.n, terms }
    }

    /// Canonical text form: terms in degree-then-lex descending order.
    pub fn format(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut monos: Vec<&Monomial> = self.terms.keys().collect();
        monos.sort_by(|a, b| display_cmp(a, b));
        let mut out = String::new();
        for (i, m) in monos.iter().enumerate() {
            let c = &self.terms[*m];
            let (neg, abs) = match c {
                Coeff::Q(r) => {
                    use num_traits::Signed;
                    (r.is_negative(), r.abs().to_string())
                }
                Coeff::Fp(v) => (false, v.to_string()),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono_text = format_monomial(m, names);
            if mono_text == "1" {
                out.push_str(&abs);
            } else if abs == "1" {
                out.push_str(&mono_text);
            } else {
                out.push_str(&abs);
                out.push('*');
                out.push_str(&mono_text);
            }
        }
        out
    }
}
