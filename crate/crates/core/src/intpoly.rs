//! Multivariate polynomials with integer coefficients.
//!
//! These carry Hilbert-series numerators (variables x_i) and scheme equations
//! (variables λ). They are constructed over ℤ and only interpreted over the
//! active field downstream.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::monomial::{display_cmp, format_monomial, Monomial};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntPoly {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl IntPoly {
    pub fn zero(n: usize) -> Self {
        IntPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        IntPoly::constant(n, BigInt::one())
    }

    pub fn constant(n: usize, c: BigInt) -> Self {
        let mut p = IntPoly::zero(n);
        p.add_term(Monomial::one(n), c);
        p
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut p = IntPoly::zero(m.nvars());
        p.add_term(m, BigInt::one());
        p
    }

    pub fn variable(n: usize, i: usize) -> Self {
        IntPoly::from_monomial(Monomial::variable(n, i))
    }

    pub fn from_terms(n: usize, terms: Vec<(Monomial, BigInt)>) -> Self {
        let mut p = IntPoly::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = IntPoly::zero(self.n);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = IntPoly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Self {
        let mut out = IntPoly::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (m1, c1) in &self.terms {
            out.terms.insert(m1.mul(m), c1 * c);
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Componentwise maximum exponent over all terms (the Newton box).
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0u32; self.n];
        for m in self.terms.keys() {
            for (o, e) in out.iter_mut().zip(m.exponents()) {
                *o = (*o).max(*e);
            }
        }
        out
    }

    /// The graded-lex-descending leading term.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().min_by(|(a, _), (b, _)| display_cmp(a, b))
    }

    /// Normalize the sign so the leading coefficient is positive.
    pub fn canonical(&self) -> Self {
        match self.leading() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Exact division test by the binomial x^plus − x^minus.
    pub fn divisible_by_binomial(&self, plus: &Monomial, minus: &Monomial) -> bool {
        // Division by a single monic binomial; the remainder is canonical.
        // Cancelling c·x^m against x^lead replaces it by c·x^{(m-lead)+tail}
        // whichever side of the binomial leads.
        let (lead, tail) = if display_cmp(plus, minus) == std::cmp::Ordering::Less {
            (plus, minus)
        } else {
            (minus, plus)
        };
        let mut rem = self.clone();
        loop {
            let target = rem
                .terms
                .keys()
                .filter(|m| lead.divides(m))
                .min_by(|a, b| display_cmp(a, b))
                .cloned();
            match target {
                None => return rem.is_zero(),
                Some(m) => {
                    let c = rem.coefficient(&m);
                    let q = m.checked_div(lead).expect("divisibility checked");
                    rem.add_term(m, -c.clone());
                    rem.add_term(q.mul(tail), c);
                }
            }
        }
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(m, c)| m.is_one() && c.is_one())
    }

    /// Evaluate at a point of the active field.
    pub fn eval_field(
        &self,
        point: &[crate::field::Coeff],
        k: &crate::field::Field,
    ) -> crate::field::Coeff {
        let mut acc = k.zero();
        for (m, c) in &self.terms {
            let mut t = k.from_bigint(c);
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = k.mul(&t, &point[i]);
                }
            }
            acc = k.add(&acc, &t);
        }
        acc
    }

    /// Evaluate at a point of GF(p)^n.
    pub fn eval_mod_p(&self, point: &[u64], p: u64) -> u64 {
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut t = bigint_mod_u64(c, p);
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = t * (point[i] % p) % p;
                }
            }
            acc = (acc + t) % p;
        }
        acc
    }

    /// Re-index into a larger variable set, sending variable i to i + offset.
    pub fn embed(&self, n_new: usize, offset: usize) -> Self {
        let mut out = IntPoly::zero(n_new);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; n_new];
            e[offset..offset + self.n].copy_from_slice(m.exponents());
            out.terms.insert(Monomial::new(e), c.clone());
        }
        out
    }

    pub fn is_linear(&self) -> bool {
        self.total_degree() <= 1
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut monos: Vec<&Monomial> = self.terms.keys().collect();
        monos.sort_by(|a, b| display_cmp(a, b));
        let mut out = String::new();
        for (i, m) in monos.iter().enumerate() {
            let c = &self.terms[*m];
            let neg = c.is_negative();
            let abs = c.abs().to_string();
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

fn bigint_mod_u64(c: &BigInt, p: u64) -> u64 {
    let p_big = BigInt::from(p);
    let mut r = c % &p_big;
    if r.is_negative() {
        r += &p_big;
    }
    r.to_u64_digits().1.first().copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::var_names;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn ring_operations() {
        let x = IntPoly::variable(2, 0);
        let y = IntPoly::variable(2, 1);
        let f = x.add(&y);
        let g = x.sub(&y);
        let p = f.mul(&g);
        assert_eq!(p.coefficient(&m(&[2, 0])), big(1));
        assert_eq!(p.coefficient(&m(&[0, 2])), big(-1));
        assert_eq!(p.coefficient(&m(&[1, 1])), big(0));
    }

    #[test]
    fn binomial_division() {
        // x^2 - y = 1*(x^2 - y); divisible by itself
        let d = IntPoly::from_terms(2, vec![(m(&[2, 0]), big(1)), (m(&[0, 1]), big(-1))]);
        assert!(d.divisible_by_binomial(&m(&[2, 0]), &m(&[0, 1])));
        // (x - y)(x + y) = x^2 - y^2 is divisible by x - y
        let d2 = IntPoly::from_terms(2, vec![(m(&[2, 0]), big(1)), (m(&[0, 2]), big(-1))]);
        assert!(d2.divisible_by_binomial(&m(&[1, 0]), &m(&[0, 1])));
        // but x^2 + y^2 is not
        let d3 = IntPoly::from_terms(2, vec![(m(&[2, 0]), big(1)), (m(&[0, 2]), big(1))]);
        assert!(!d3.divisible_by_binomial(&m(&[1, 0]), &m(&[0, 1])));
    }

    #[test]
    fn evaluation_mod_p() {
        // f = a*b - 1 at (2,3) mod 5 -> 0
        let f = IntPoly::from_terms(2, vec![(m(&[1, 1]), big(1)), (m(&[0, 0]), big(-1))]);
        assert_eq!(f.eval_mod_p(&[2, 3], 5), 0);
        assert_eq!(f.eval_mod_p(&[2, 2], 5), 3);
    }

    #[test]
    fn canonical_sign_and_format() {
        let names = var_names(2);
        let f = IntPoly::from_terms(2, vec![(m(&[0, 0]), big(1)), (m(&[1, 1]), big(-1))]);
        assert_eq!(f.canonical().format(&names), "x*y - 1");
    }

    #[test]
    fn embedding_shifts_variables() {
        let f = IntPoly::from_terms(1, vec![(m(&[2]), big(3))]);
        let g = f.embed(3, 1);
        assert_eq!(g.coefficient(&m(&[0, 2, 0])), big(3));
    }
}
