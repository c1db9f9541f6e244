//! Matrix term orders: integer weight rows refined by a lexicographic tie-break.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::{Direction, Monomial};

/// A term order given by weight rows compared in sequence, with a final
/// lexicographic tie-break (x1 > x2 > ...).
///
/// Validity requires the first nonzero weight in every column to be positive
/// (columns that are zero in all rows fall through to lex), which makes 1 the
/// minimal monomial and the comparison multiplicative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    n: usize,
    rows: Vec<Vec<i64>>,
}

impl TermOrder {
    pub fn new(n: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        for j in 0..n {
            if let Some(w) = rows.iter().map(|r| r[j]).find(|&w| w != 0) {
                if w < 0 {
                    return Err(Error::InvalidTermOrder(j));
                }
            }
        }
        Ok(TermOrder { n, rows })
    }

    /// Pure lexicographic order.
    pub fn lex(n: usize) -> Self {
        TermOrder { n, rows: vec![] }
    }

    /// Graded lexicographic order (total degree, then lex).
    pub fn grlex(n: usize) -> Self {
        TermOrder {
            n,
            rows: vec![vec![1; n]],
        }
    }

    /// A term order in the class c ≺ 0: first weight row w = c⁻, so that
    /// w·c = −Σ_{c_i<0} c_i² < 0 while w ≥ 0 componentwise.
    pub fn c_below(c: &Direction) -> Self {
        let row = c.entries().iter().map(|&ci| (-ci).max(0)).collect();
        TermOrder {
            n: c.nvars(),
            rows: vec![row],
        }
    }

    /// A term order in the class c ≻ 0: first weight row w = c⁺, so w·c > 0.
    pub fn c_above(c: &Direction) -> Self {
        let row = c.entries().iter().map(|&ci| ci.max(0)).collect();
        TermOrder {
            n: c.nvars(),
            rows: vec![row],
        }
    }

    /// Refine by prepending a weight row, validating the result.
    pub fn refine_with(&self, w: Vec<i64>) -> Result<Self> {
        let mut rows = vec![w];
        rows.extend(self.rows.iter().cloned());
        TermOrder::new(self.n, rows)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for row in &self.rows {
            match a.dot(row).cmp(&b.dot(row)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        // Lex tie-break: the first differing exponent decides.
        for (ea, eb) in a.exponents().iter().zip(b.exponents()) {
            match ea.cmp(eb) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}
