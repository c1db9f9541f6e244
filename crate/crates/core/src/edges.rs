//! The top-level edge decision: find the unique candidate direction, build
//! the edge scheme, and decide emptiness over the active field.
//!
//! Emptiness is decided scheme-theoretically over the algebraic closure via
//! 1 ∈ ⟨equations⟩, so the graph depends a priori only on the characteristic.
//! An exhaustive point search over small prime fields serves as an
//! independent oracle.

use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::gb::{buchberger, contains_one, normal_form, quotient_dimension, QuotientDim};
use crate::hilbert::{binomial_direction, direction_by_pvector, Grading};
use crate::ideal::MonomialIdeal;
use crate::linalg::is_singular;
use crate::monomial::{Direction, Monomial};
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::schubert::{omega_pair, schubert_scheme, SchemeIdeal};

/// Outcome of the edge decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeStatus {
    /// Step 2 found no admissible direction.
    NoDirection,
    /// A direction exists but the scheme has no points over the closure.
    EmptyScheme,
    /// The scheme is nonempty: the ideals are adjacent.
    Edge,
}

#[derive(Clone, Debug)]
pub struct EdgeResult {
    pub status: EdgeStatus,
    pub direction: Option<Direction>,
    pub scheme: Option<SchemeIdeal>,
}

/// Which direction-discovery route to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PathMode {
    /// P-vectors when both ideals are artinian, binomial search otherwise.
    #[default]
    Auto,
    PVector,
    Binomial,
}

/// Is the scheme empty over the algebraic closure of k (1 ∈ ⟨equations⟩)?
pub fn scheme_is_empty(scheme: &SchemeIdeal, k: &Field) -> bool {
    let eqs = scheme.equations_over(k);
    if eqs.iter().all(|e| e.is_zero()) {
        return false;
    }
    let ord = TermOrder::grlex(scheme.num_vars());
    let gb = buchberger(&eqs, &ord, k);
    contains_one(&gb)
}

/// Decide adjacency of two distinct monomial ideals.
pub fn edge_scheme(m1: &MonomialIdeal, m2: &MonomialIdeal, k: &Field) -> Result<EdgeResult> {
    edge_scheme_with_path(m1, m2, k, PathMode::Auto)
}

pub fn edge_scheme_with_path(
    m1: &MonomialIdeal,
    m2: &MonomialIdeal,
    k: &Field,
    mode: PathMode,
) -> Result<EdgeResult> {
    if m1 == m2 {
        return Err(Error::Precondition(
            "edge test requires distinct ideals".into(),
        ));
    }
    let use_pvector = match mode {
        PathMode::PVector => true,
        PathMode::Binomial => false,
        PathMode::Auto => m1.is_artinian() && m2.is_artinian(),
    };
    if use_pvector {
        // the P-vector difference carries the orientation already
        let g = Grading::trivial(m1.nvars());
        let c = match direction_by_pvector(m1, m2, &g)? {
            Some(c) => c,
            None => {
                return Ok(EdgeResult {
                    status: EdgeStatus::NoDirection,
                    direction: None,
                    scheme: None,
                })
            }
        };
        if !c.has_mixed_signs() {
            return Ok(EdgeResult {
                status: EdgeStatus::NoDirection,
                direction: Some(c),
                scheme: None,
            });
        }
        let scheme = omega_pair(m1, m2, &c)?;
        let status = if scheme_is_empty(&scheme, k) {
            EdgeStatus::EmptyScheme
        } else {
            EdgeStatus::Edge
        };
        Ok(EdgeResult {
            status,
            direction: Some(c),
            scheme: Some(scheme),
        })
    } else {
        // binomial factors determine c only up to sign: try both
        let c0 = match binomial_direction(m1, m2)? {
            Some(c) => c,
            None => {
                return Ok(EdgeResult {
                    status: EdgeStatus::NoDirection,
                    direction: None,
                    scheme: None,
                })
            }
        };
        let plus = omega_pair(m1, m2, &c0)?;
        if !scheme_is_empty(&plus, k) {
            return Ok(EdgeResult {
                status: EdgeStatus::Edge,
                direction: Some(c0),
                scheme: Some(plus),
            });
        }
        let minus = omega_pair(m1, m2, &c0.neg())?;
        if !scheme_is_empty(&minus, k) {
            return Ok(EdgeResult {
                status: EdgeStatus::Edge,
                direction: Some(c0.neg()),
                scheme: Some(minus),
            });
        }
        Ok(EdgeResult {
            status: EdgeStatus::EmptyScheme,
            direction: Some(c0),
            scheme: Some(plus),
        })
    }
}

/// Adjacency in the graph of monomial ideals (false on equal inputs).
pub fn is_edge(m1: &MonomialIdeal, m2: &MonomialIdeal, k: &Field) -> Result<bool> {
    if m1 == m2 {
        return Ok(false);
    }
    Ok(edge_scheme(m1, m2, k)?.status == EdgeStatus::Edge)
}

/// Exhaustively enumerate the GF(p)-points of a scheme; the brute-force
/// oracle for the Gröbner emptiness verdict. Requires p^v ≤ 10^7.
pub fn enumerate_points(scheme: &SchemeIdeal, p: u32) -> Result<Vec<Vec<u64>>> {
    Field::fp(p)?;
    let v = scheme.num_vars();
    let budget = 10_000_000u64;
    let mut total = 1u64;
    for _ in 0..v {
        total = total.saturating_mul(p as u64);
        if total > budget {
            return Err(Error::BudgetExceeded(format!(
                "{}^{} points exceed the enumeration budget",
                p, v
            )));
        }
    }
    let mut out = Vec::new();
    let mut point = vec![0u64; v];
    loop {
        if scheme
            .equations()
            .iter()
            .all(|e| e.eval_mod_p(&point, p as u64) == 0)
        {
            out.push(point.clone());
        }
        let mut i = v;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            point[i] += 1;
            if point[i] < p as u64 {
                break;
            }
            point[i] = 0;
        }
    }
}

/// Check that a scheme point really provides an edge ideal: substituting the
/// a-pool into the universal generators of Ω_c(M₁) must give an ideal whose
/// leading ideals in the two order classes are M₁ and M₂.
pub fn verify_edge_point(
    point: &[Coeff],
    m1: &MonomialIdeal,
    m2: &MonomialIdeal,
    c: &Direction,
    k: &Field,
) -> Result<bool> {
    let p1 = schubert_scheme(m1, c)?;
    let a_part: Vec<Coeff> = point[..p1.num_lambdas()].to_vec();
    let gens = p1.specialize(&a_part, k);
    let below = crate::gb::leading_ideal(&gens, &TermOrder::c_below(c), k)?;
    if &below != m1 {
        return Ok(false);
    }
    let above = crate::gb::leading_ideal(&gens, &TermOrder::c_above(c), k)?;
    Ok(&above == m2)
}

/// Convenience for GF(p) points coming out of [`enumerate_points`].
pub fn verify_edge_point_mod_p(
    point: &[u64],
    m1: &MonomialIdeal,
    m2: &MonomialIdeal,
    c: &Direction,
    p: u32,
) -> Result<bool> {
    let k = Field::fp(p)?;
    let coeffs: Vec<Coeff> = point.iter().map(|&v| k.from_i64(v as i64)).collect();
    verify_edge_point(&coeffs, m1, m2, c, &k)
}

/// Scheme-level diagnostics: emptiness, dimension of the coordinate algebra,
/// and presence of a nonzero nilpotent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeDiagnostics {
    pub is_empty: bool,
    pub zero_dimensional: bool,
    pub quotient_dim: Option<usize>,
    pub has_nonzero_nilpotent: Option<bool>,
}

/// Largest quotient dimension for which the nilpotent search runs.
pub const NILPOTENT_DIM_BOUND: usize = 64;

pub fn diagnostics(scheme: &SchemeIdeal, k: &Field) -> Result<SchemeDiagnostics> {
    let v = scheme.num_vars();
    let ord = TermOrder::grlex(v);
    let eqs = scheme.equations_over(k);
    let gb = buchberger(&eqs, &ord, k);
    let is_empty = contains_one(&gb);
    let qdim = quotient_dimension(&gb, v, &ord)?;
    match qdim {
        QuotientDim::Infinite => Ok(SchemeDiagnostics {
            is_empty,
            zero_dimensional: false,
            quotient_dim: None,
            has_nonzero_nilpotent: None,
        }),
        QuotientDim::Finite(d) => {
            let nilpotent = if d == 0 {
                Some(false)
            } else if d <= NILPOTENT_DIM_BOUND {
                Some(has_nilpotent(&gb, v, &ord, k)?)
            } else {
                None
            };
            Ok(SchemeDiagnostics {
                is_empty,
                zero_dimensional: true,
                quotient_dim: Some(d),
                has_nonzero_nilpotent: nilpotent,
            })
        }
    }
}

/// Over a perfect field, the finite-dimensional quotient algebra has a
/// nonzero nilpotent exactly when its trace form is singular.
#[allow(clippy::needless_range_loop)]
fn has_nilpotent(gb: &[Polynomial], v: usize, ord: &TermOrder, k: &Field) -> Result<bool> {
    let leads: Vec<Monomial> = gb
        .iter()
        .map(|f| f.leading_term(ord).expect("nonzero").0.clone())
        .collect();
    let lead_ideal = MonomialIdeal::new(v, leads)?;
    let basis = lead_ideal.standard_monomials()?;
    let index: std::collections::BTreeMap<&Monomial, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let d = basis.len();
    // multiplication matrices for each basis element
    let mut mult = vec![vec![vec![k.zero(); d]; d]; d];
    for (i, si) in basis.iter().enumerate() {
        for (j, sj) in basis.iter().enumerate() {
            let prod = Polynomial::from_monomial(si.mul(sj), k);
            let nf = normal_form(&prod, gb, ord, k);
            for (m, c) in nf.terms() {
                let col = *index.get(m).expect("normal form lies in the staircase");
                mult[i][j][col] = c.clone();
            }
        }
    }
    // trace of multiplication by basis element i
    let traces: Vec<Coeff> = (0..d)
        .map(|i| {
            let mut t = k.zero();
            for j in 0..d {
                t = k.add(&t, &mult[i][j][j]);
            }
            t
        })
        .collect();
    // trace form T[i][j] = trace(mult by s_i s_j) via the expansion of s_i s_j
    let mut t_form = vec![vec![k.zero(); d]; d];
    for i in 0..d {
        for j in 0..d {
            let mut entry = k.zero();
            for l in 0..d {
                entry = k.add(&entry, &k.mul(&mult[i][j][l], &traces[l]));
            }
            t_form[i][j] = entry;
        }
    }
    Ok(is_singular(&t_form, k))
}
